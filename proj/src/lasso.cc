#include "omega/lasso.hh"

#include <algorithm>
#include <sstream>

namespace omega {

namespace {

std::vector<Symbol> parse_word(const std::string& text, const std::vector<std::string>& alphabet) {
    std::istringstream in(text);
    std::vector<Symbol> word;
    std::string name;
    while (in >> name) {
        auto it = std::find(alphabet.begin(), alphabet.end(), name);
        if (it == alphabet.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + name + "'");
        word.push_back(static_cast<Symbol>(it - alphabet.begin()));
    }
    return word;
}

std::string format_word(const std::vector<Symbol>& w, const std::vector<std::string>& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.at(w[i]);
    }
    return out;
}

}  // namespace

Lasso parse_lasso(const std::string& text, const std::vector<std::string>& alphabet) {
    auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw Error(ErrorKind::InvalidArgs, "lasso must have the form 'stem;cycle'");
    Lasso l{parse_word(text.substr(0, semi), alphabet), parse_word(text.substr(semi + 1), alphabet)};
    if (l.cycle.empty()) throw Error(ErrorKind::InvalidArgs, "lasso cycle must be nonempty");
    return l;
}

std::string format_lasso(const Lasso& l, const std::vector<std::string>& alphabet) {
    return format_word(l.stem, alphabet) + ";" + format_word(l.cycle, alphabet);
}

FoldedRunGraph::FoldedRunGraph(const Automaton& a, const Lasso& l)
    : n_(a.state_count()), stem_length_(static_cast<int>(l.stem.size())) {
    if (l.cycle.empty()) throw Error(ErrorKind::InvalidArgs, "lasso cycle must be nonempty");
    letters_ = l.stem;
    letters_.insert(letters_.end(), l.cycle.begin(), l.cycle.end());
    const int sigma_count = static_cast<int>(a.alphabet().size());
    for (Symbol s : letters_) {
        if (s < 0 || s >= sigma_count)
            throw Error(ErrorKind::UnknownSymbol, "symbol index " + std::to_string(s) + " not in alphabet");
    }
    positions_ = static_cast<int>(letters_.size());

    const int capacity = n_ * positions_;
    present_.assign(capacity, 0);
    succ_.assign(capacity, {});
    std::vector<int> stack;
    for (State q : a.initial()) {
        if (q < 0 || q >= n_) continue;
        initial_.push_back(q);
        present_[vertex_id(q, 0)] = 1;
        stack.push_back(vertex_id(q, 0));
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        int p = position_of(v);
        for (State r : a.post(state_of(v), letters_[p])) {
            int w = vertex_id(r, next(p));
            if (!present_[w]) {
                present_[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < capacity; ++v) {
        if (!present_[v]) continue;
        vertices_.push_back(v);
        int p = position_of(v);
        for (State r : a.post(state_of(v), letters_[p])) succ_[v].push_back(vertex_id(r, next(p)));
        std::sort(succ_[v].begin(), succ_[v].end());
    }
}

std::size_t FoldedRunGraph::edge_count() const {
    std::size_t total = 0;
    for (int v : vertices_) total += succ_[v].size();
    return total;
}

StateList FoldedRunGraph::level(int p) const {
    StateList out;
    for (State q = 0; q < n_; ++q)
        if (present_[vertex_id(q, p)]) out.push_back(q);
    return out;
}

FoldedRunGraph folded_run_graph(const Automaton& a, const Lasso& l) { return FoldedRunGraph(a, l); }

SccResult strongly_connected(const std::vector<std::vector<int>>& succ, const std::vector<char>& alive,
                             const std::function<bool(int, int)>& edge_alive) {
    const int size = static_cast<int>(succ.size());
    SccResult res;
    res.component.assign(size, -1);
    std::vector<int> index(size, -1), low(size, 0);
    std::vector<char> on_stack(size, 0);
    std::vector<int> stack;
    int counter = 0;
    auto usable = [&](int v, int w) { return alive[w] && (!edge_alive || edge_alive(v, w)); };

    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (int root = 0; root < size; ++root) {
        if (!alive[root] || index[root] >= 0) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            int v = f.v;
            if (f.next < succ[v].size()) {
                int w = succ[v][f.next++];
                if (!usable(v, w)) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int id = res.count++;
                res.cyclic.push_back(0);
                int w;
                int members = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    res.component[w] = id;
                    ++members;
                } while (w != v);
                if (members > 1) {
                    res.cyclic[id] = 1;
                } else {
                    for (int x : succ[v])
                        if (x == v && usable(v, v)) res.cyclic[id] = 1;
                }
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return res;
}

namespace {

struct Product {
    const FoldedRunGraph& graph;
    std::vector<std::vector<int>> succ;

    explicit Product(const FoldedRunGraph& g) : graph(g), succ(g.vertex_capacity()) {
        for (int v : g.vertices()) succ[v] = g.successors(v);
    }

    std::vector<char> mask(const StateList& states) const {
        std::vector<char> m(graph.vertex_capacity(), 0);
        for (int v : graph.vertices())
            if (contains(states, graph.state_of(v))) m[v] = 1;
        return m;
    }

    std::vector<char> all() const {
        std::vector<char> m(graph.vertex_capacity(), 0);
        for (int v : graph.vertices()) m[v] = 1;
        return m;
    }
};

// Some cyclic SCC of `alive` meets every set in `required`.
bool generalized_buchi(const Product& prod, const std::vector<char>& alive,
                       const std::vector<std::vector<char>>& required) {
    SccResult scc = strongly_connected(prod.succ, alive);
    std::vector<std::vector<char>> hit(scc.count, std::vector<char>(required.size(), 0));
    for (std::size_t v = 0; v < alive.size(); ++v) {
        if (!alive[v]) continue;
        int c = scc.component[v];
        for (std::size_t i = 0; i < required.size(); ++i)
            if (required[i][v]) hit[c][i] = 1;
    }
    for (int c = 0; c < scc.count; ++c) {
        if (!scc.cyclic[c]) continue;
        if (std::all_of(hit[c].begin(), hit[c].end(), [](char x) { return x != 0; })) return true;
    }
    return false;
}

bool streett_nonempty(const Product& prod, const std::vector<char>& alive,
                      const std::vector<std::vector<char>>& g, const std::vector<std::vector<char>>& b) {
    SccResult scc = strongly_connected(prod.succ, alive);
    std::vector<std::vector<int>> members(scc.count);
    for (std::size_t v = 0; v < alive.size(); ++v)
        if (alive[v]) members[scc.component[v]].push_back(static_cast<int>(v));
    for (int c = 0; c < scc.count; ++c) {
        if (!scc.cyclic[c]) continue;
        std::vector<char> keep(alive.size(), 0);
        for (int v : members[c]) keep[v] = 1;
        bool violated = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool touches_g = false, touches_b = false;
            for (int v : members[c]) {
                touches_g = touches_g || g[i][v];
                touches_b = touches_b || b[i][v];
            }
            if (touches_g && !touches_b) {
                violated = true;
                for (int v : members[c])
                    if (g[i][v]) keep[v] = 0;
            }
        }
        if (!violated) return true;
        if (streett_nonempty(prod, keep, g, b)) return true;
    }
    return false;
}

}  // namespace

bool member(const Automaton& a, const Lasso& l) {
    FoldedRunGraph graph(a, l);
    Product prod(graph);
    const Acceptance& acc = a.acceptance();
    const int k = acc.size();
    switch (acc.type) {
    case AcceptanceType::buchi:
        return generalized_buchi(prod, prod.all(), {prod.mask(acc.final)});
    case AcceptanceType::gbuchi: {
        std::vector<std::vector<char>> sets;
        for (int i = 1; i <= k; ++i) sets.push_back(prod.mask(acc.B(i)));
        return generalized_buchi(prod, prod.all(), sets);
    }
    case AcceptanceType::rabin: {
        for (int i = 1; i <= k; ++i) {
            std::vector<char> alive = prod.all();
            auto b = prod.mask(acc.B(i));
            for (std::size_t v = 0; v < alive.size(); ++v)
                if (b[v]) alive[v] = 0;
            if (generalized_buchi(prod, alive, {prod.mask(acc.G(i))})) return true;
        }
        return false;
    }
    case AcceptanceType::streett:
    case AcceptanceType::parity: {
        std::vector<std::vector<char>> g, b;
        for (int i = 1; i <= k; ++i) {
            g.push_back(prod.mask(acc.G(i)));
            b.push_back(prod.mask(acc.B(i)));
        }
        return streett_nonempty(prod, prod.all(), g, b);
    }
    }
    return false;
}

void for_each_lasso(int alphabet_size, int max_stem, int max_cycle,
                    const std::function<bool(const Lasso&)>& visit) {
    if (max_cycle < 1) throw Error(ErrorKind::InvalidArgs, "max_cycle must be at least 1");
    if (alphabet_size < 1) return;
    auto words = [alphabet_size](int min_len, int max_len) {
        std::vector<std::vector<Symbol>> out;
        for (int len = min_len; len <= max_len; ++len) {
            std::vector<Symbol> w(len, 0);
            while (true) {
                out.push_back(w);
                int i = len - 1;
                while (i >= 0 && w[i] == alphabet_size - 1) w[i--] = 0;
                if (i < 0) break;
                ++w[i];
            }
        }
        return out;
    };
    auto stems = words(0, std::max(max_stem, 0));
    auto cycles = words(1, max_cycle);
    for (const auto& u : stems)
        for (const auto& v : cycles)
            if (!visit(Lasso{u, v})) return;
}

std::vector<Lasso> enumerate_lassos(int alphabet_size, int max_stem, int max_cycle) {
    std::vector<Lasso> out;
    for_each_lasso(alphabet_size, max_stem, max_cycle, [&](const Lasso& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

}  // namespace omega
