#include "omega/rank.hh"

#include <algorithm>

namespace omega {

const char* to_string(RankKind kind) {
    switch (kind) {
    case RankKind::cobuchi: return "cobuchi";
    case RankKind::gc: return "gc";
    case RankKind::rabin: return "rabin";
    case RankKind::mu_r: return "mu_r";
    case RankKind::parity: return "parity";
    }
    return "?";
}

std::string format_rank(const Rank& rank) {
    auto one = [](const GcRank& x) {
        if (x.odd() && x.index != 0) return "(" + std::to_string(x.r) + "," + std::to_string(x.index) + ")";
        return std::to_string(x.r);
    };
    if (rank.size() == 1) return one(rank[0]);
    std::string out = "<";
    for (std::size_t i = 0; i < rank.size(); ++i) {
        if (i) out += ",";
        out += one(rank[i]);
    }
    return out + ">";
}

IndexTuple h_projection(const Rank& rank) {
    IndexTuple alpha;
    for (const auto& x : rank)
        if (x.odd()) alpha.push_back(x.index);
    return alpha;
}

std::vector<int> r_projection(const Rank& rank) {
    std::vector<int> out;
    for (const auto& x : rank) out.push_back(x.r);
    return out;
}

Order compare_ranks(const Rank& x, const Rank& y, int m) {
    if (m < 0 || m > static_cast<int>(std::min(x.size(), y.size())))
        throw Error(ErrorKind::PositionOutOfRange, "comparison position " + std::to_string(m) +
                                                       " exceeds the tuple widths");
    for (int i = 0; i < m; ++i) {
        if (x[i].r < y[i].r) return Order::less;
        if (x[i].r > y[i].r) return Order::greater;
    }
    return Order::equal;
}

const Rank& LevelRanking::at(State q) const {
    auto it = std::lower_bound(states.begin(), states.end(), q);
    if (it == states.end() || *it != q)
        throw Error(ErrorKind::InvalidArgs, "state " + std::to_string(q) + " is not ranked");
    return ranks[it - states.begin()];
}

RankSpec rank_spec(const Automaton& a, RankKind kind) {
    const Acceptance& acc = a.acceptance();
    RankSpec spec;
    spec.kind = kind;
    spec.n = a.state_count();
    auto incompatible = [&]() {
        return Error(ErrorKind::IncompatibleKind, std::string(to_string(kind)) + " ranks do not apply to " +
                                                      to_string(acc.type) + " acceptance");
    };
    switch (kind) {
    case RankKind::cobuchi:
        if (acc.type != AcceptanceType::buchi) throw incompatible();
        spec.b = {acc.final};
        break;
    case RankKind::gc:
        if (acc.type == AcceptanceType::buchi) spec.b = {acc.final};
        else if (acc.type == AcceptanceType::gbuchi) spec.b = acc.b;
        else throw incompatible();
        break;
    case RankKind::rabin:
    case RankKind::mu_r:
        if (acc.type != AcceptanceType::streett && acc.type != AcceptanceType::parity) throw incompatible();
        spec.g = acc.g;
        spec.b = acc.b;
        break;
    case RankKind::parity:
        if (acc.type != AcceptanceType::parity) throw incompatible();
        spec.g = acc.g;
        spec.b = acc.b;
        break;
    }
    return spec;
}

namespace {

std::uint64_t to_mask(const StateList& s) {
    std::uint64_t m = 0;
    for (State q : s) m |= std::uint64_t{1} << q;
    return m;
}

bool has(std::uint64_t mask, State q) { return (mask >> q) & 1; }

bool is_tuple_kind(RankKind kind) {
    return kind == RankKind::rabin || kind == RankKind::mu_r || kind == RankKind::parity;
}

}  // namespace

Ranker::Ranker(const Automaton& a, RankKind kind) : Ranker(a, rank_spec(a, kind)) {}

Ranker::Ranker(const Automaton& a, RankSpec spec) : a_(a), spec_(std::move(spec)) {
    if (spec_.n > 64) throw Error(ErrorKind::TooLarge, "ranking supports at most 64 states");
    for (const auto& s : spec_.g) g_mask_.push_back(to_mask(s));
    for (const auto& s : spec_.b) b_mask_.push_back(to_mask(s));
    domains_.assign(spec_.n, {});
    domain_ready_.assign(spec_.n, 0);
}

const Ranker::History& Ranker::history(const IndexTuple& alpha) const {
    auto it = histories_.find(alpha);
    if (it != histories_.end()) return it->second;
    History h;
    const int k = spec_.k();
    bool in_range = std::all_of(alpha.begin(), alpha.end(), [k](int j) { return j >= 1 && j <= k; });
    if (in_range) {
        if (spec_.kind == RankKind::mu_r) {
            h.valid = true;
            IndexTuple prefix;
            for (int j : alpha) {
                auto options = mini(prefix, spec_.b);
                if (!std::binary_search(options.begin(), options.end(), j)) h.valid = false;
                prefix.push_back(j);
            }
            h.covered = to_mask(covered_states(alpha, spec_.b));
            for (int t : cover(alpha, spec_.b)) h.cover_g |= g_mask_[t - 1];
        } else {
            IndexTuple sorted = alpha;
            std::sort(sorted.begin(), sorted.end());
            h.valid = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
    }
    return histories_.emplace(alpha, h).first->second;
}

bool Ranker::well_formed(const Rank& rank) const {
    const int n = spec_.n;
    const int k = spec_.k();
    if (rank.empty()) return false;
    for (const auto& x : rank)
        if (x.r < 0 || x.r > 2 * n) return false;
    const GcRank& last = rank.back();
    switch (spec_.kind) {
    case RankKind::cobuchi:
        return rank.size() == 1 && last.index == 0;
    case RankKind::gc:
        if (rank.size() != 1) return false;
        return last.odd() ? last.index >= 1 && last.index <= k : last.index == 0;
    case RankKind::rabin:
    case RankKind::mu_r:
    case RankKind::parity:
        break;
    }
    const int m = static_cast<int>(rank.size()) - 1;
    if (m > k || last.odd() || last.index != 0) return false;
    for (int i = 0; i < m; ++i) {
        if (!rank[i].odd()) return false;
        if (spec_.kind == RankKind::parity && rank[i].index != 0) return false;
    }
    if (spec_.kind == RankKind::parity) return true;
    return history(h_projection(rank)).valid;
}

bool Ranker::is_odd_vertex(State q, const Rank& rank) const {
    if (rank.empty()) return false;
    if (!is_tuple_kind(spec_.kind)) return rank[0].odd();
    const int m = static_cast<int>(rank.size()) - 1;
    if (m < 1) return false;
    switch (spec_.kind) {
    case RankKind::rabin: {
        int j = rank[m - 1].index;
        return j >= 1 && j <= spec_.k() && has(g_mask_[j - 1], q);
    }
    case RankKind::mu_r:
        return has(history(h_projection(rank)).cover_g, q);
    case RankKind::parity:
        return m <= spec_.k() && has(g_mask_[m - 1], q);
    default:
        return false;
    }
}

bool Ranker::check_vertex(State q, const Rank& rank) const {
    if (!well_formed(rank)) return false;
    const int m = static_cast<int>(rank.size()) - 1;
    switch (spec_.kind) {
    case RankKind::cobuchi:
        return !rank[0].odd() || !has(b_mask_[0], q);
    case RankKind::gc:
        return !rank[0].odd() || !has(b_mask_[rank[0].index - 1], q);
    case RankKind::rabin:
        for (int i = 0; i < m; ++i) {
            int j = rank[i].index;
            if (has(b_mask_[j - 1], q)) return false;
            if (i < m - 1 && has(g_mask_[j - 1], q)) return false;
        }
        return true;
    case RankKind::mu_r: {
        if (m == 0) return true;
        IndexTuple alpha = h_projection(rank);
        if (has(history(alpha).covered, q)) return false;
        alpha.pop_back();
        return alpha.empty() || !has(history(alpha).cover_g, q);
    }
    case RankKind::parity:
        return m == 0 || !has(b_mask_[m - 1], q);
    }
    return false;
}

namespace {

// Lexicographic "at least" through m positions under the GC order: two odd
// ranks with the same numeric rank but different indices are incomparable.
bool at_least(const Rank& x, const Rank& y, int m) {
    for (int i = 0; i < m; ++i) {
        if (x[i].r != y[i].r) return x[i].r > y[i].r;
        if (x[i].index != y[i].index) return false;
    }
    return true;
}

}  // namespace

bool Ranker::check_edge(State q, const Rank& rank_q, State, const Rank& rank_q2) const {
    if (!is_tuple_kind(spec_.kind)) return at_least(rank_q, rank_q2, 1);
    const int m2 = static_cast<int>(std::min(rank_q.size(), rank_q2.size())) - 1;
    if (!at_least(rank_q, rank_q2, m2)) return false;
    // The odd-source escape only applies past the first position, so the
    // first component never increases along an edge.
    return at_least(rank_q, rank_q2, m2 + 1) || (m2 >= 1 && is_odd_vertex(q, rank_q));
}

const std::vector<Rank>& Ranker::domain(State q) const {
    if (domain_ready_[q]) return domains_[q];
    const int n = spec_.n;
    const int k = spec_.k();
    std::vector<Rank> out;
    std::vector<int> evens, odds;
    for (int r = 0; r <= 2 * n; ++r) (r % 2 ? odds : evens).push_back(r);

    auto emit = [&](const Rank& rank) {
        if (check_vertex(q, rank)) out.push_back(rank);
    };
    if (spec_.kind == RankKind::cobuchi) {
        for (int r = 0; r <= 2 * n; ++r) emit({{r, 0}});
    } else if (spec_.kind == RankKind::gc) {
        for (int r : evens) emit({{r, 0}});
        for (int r : odds)
            for (int j = 1; j <= k; ++j) emit({{r, j}});
    } else {
        // Enumerate index histories first, then fill numeric ranks.
        std::vector<IndexTuple> histories;
        std::function<void(IndexTuple&)> grow = [&](IndexTuple& alpha) {
            histories.push_back(alpha);
            if (static_cast<int>(alpha.size()) == k) return;
            if (spec_.kind == RankKind::parity) {
                alpha.push_back(0);
                grow(alpha);
                alpha.pop_back();
                return;
            }
            for (int j = 1; j <= k; ++j) {
                alpha.push_back(j);
                if (history(alpha).valid) grow(alpha);
                alpha.pop_back();
            }
        };
        IndexTuple root;
        grow(root);
        for (const auto& alpha : histories) {
            const int m = static_cast<int>(alpha.size());
            Rank rank(m + 1);
            for (int i = 0; i < m; ++i) rank[i] = {odds.front(), alpha[i]};
            rank[m] = {0, 0};
            // Vertex clauses read only the index history and the width.
            if (!check_vertex(q, rank)) continue;
            std::vector<std::size_t> pos(m, 0);
            while (true) {
                for (int i = 0; i < m; ++i) rank[i].r = odds[pos[i]];
                for (int e : evens) {
                    rank[m] = {e, 0};
                    out.push_back(rank);
                }
                int i = m - 1;
                while (i >= 0 && pos[i] + 1 == odds.size()) pos[i--] = 0;
                if (i < 0) break;
                ++pos[i];
            }
        }
    }
    domains_[q] = std::move(out);
    domain_ready_[q] = 1;
    return domains_[q];
}

void Ranker::for_each_product(const StateList& states, const std::vector<std::vector<const Rank*>>& choices,
                              const std::function<bool(const LevelRanking&)>& visit) const {
    for (const auto& c : choices)
        if (c.empty()) return;
    LevelRanking g;
    g.states = states;
    g.ranks.resize(states.size());
    std::vector<std::size_t> pos(states.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < states.size(); ++i) g.ranks[i] = *choices[i][pos[i]];
        if (!visit(g)) return;
        int i = static_cast<int>(states.size()) - 1;
        while (i >= 0 && pos[i] + 1 == choices[i].size()) pos[i--] = 0;
        if (i < 0) return;
        ++pos[i];
    }
}

void Ranker::for_each_succ(const LevelRanking& g, Symbol sigma,
                           const std::function<bool(const LevelRanking&)>& visit) const {
    StateList next;
    for (State q : g.states)
        for (State r : a_.post(q, sigma)) next.push_back(r);
    next = normalized(std::move(next));
    if (next.empty()) return;
    std::vector<std::vector<const Rank*>> choices(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
        State q2 = next[i];
        std::vector<std::size_t> preds;
        for (std::size_t p = 0; p < g.states.size(); ++p)
            if (contains(a_.post(g.states[p], sigma), q2)) preds.push_back(p);
        for (const Rank& candidate : domain(q2)) {
            bool ok = true;
            for (std::size_t p : preds) {
                if (!check_edge(g.states[p], g.ranks[p], q2, candidate)) {
                    ok = false;
                    break;
                }
            }
            if (ok) choices[i].push_back(&candidate);
        }
    }
    for_each_product(next, choices, visit);
}

std::vector<LevelRanking> Ranker::succ(const LevelRanking& g, Symbol sigma) const {
    std::vector<LevelRanking> out;
    for_each_succ(g, sigma, [&](const LevelRanking& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

void Ranker::for_each_initial(const std::function<bool(const LevelRanking&)>& visit) const {
    const StateList& init = a_.initial();
    if (init.empty()) return;
    std::vector<std::vector<const Rank*>> choices(init.size());
    for (std::size_t i = 0; i < init.size(); ++i)
        for (const Rank& r : domain(init[i])) choices[i].push_back(&r);
    for_each_product(init, choices, visit);
}

std::vector<LevelRanking> Ranker::initial_rankings() const {
    std::vector<LevelRanking> out;
    for_each_initial([&](const LevelRanking& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

StateList Ranker::odd_states(const LevelRanking& g) const {
    StateList out;
    for (std::size_t i = 0; i < g.states.size(); ++i)
        if (is_odd_vertex(g.states[i], g.ranks[i])) out.push_back(g.states[i]);
    return out;
}

}  // namespace omega
