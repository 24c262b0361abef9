#include "omega/rank_assign.hh"

#include <algorithm>

namespace omega {

BaseCondition BaseCondition::cobuchi(StateList f) { return {Type::cobuchi, {normalized(std::move(f))}, {}}; }

BaseCondition BaseCondition::gc(std::vector<StateList> b) { return {Type::gc, std::move(b), {}}; }

BaseCondition BaseCondition::mu_gc(std::vector<StateList> b, IndexTuple alpha) {
    return {Type::mu_gc, std::move(b), std::move(alpha)};
}

namespace {

/// The folded graph under vertex and edge deletions.
class Surgery {
public:
    explicit Surgery(const FoldedRunGraph& g)
        : g_(g), succ_(g.vertex_capacity()), alive_(g.vertex_capacity(), 0), edge_alive_(g.vertex_capacity()) {
        for (int v : g.vertices()) {
            alive_[v] = 1;
            succ_[v] = g.successors(v);
            edge_alive_[v].assign(succ_[v].size(), 1);
        }
    }

    const FoldedRunGraph& graph() const { return g_; }
    bool alive(int v) const { return alive_[v]; }
    void remove(int v) { alive_[v] = 0; }
    const std::vector<int>& succ(int v) const { return succ_[v]; }
    bool edge(int v, std::size_t e) const { return edge_alive_[v][e] && alive_[succ_[v][e]]; }
    void cut(int v, std::size_t e) { edge_alive_[v][e] = 0; }
    void cut_all(int v) { std::fill(edge_alive_[v].begin(), edge_alive_[v].end(), 0); }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        for (int v : g_.vertices())
            if (alive_[v]) out.push_back(v);
        return out;
    }

    /// Vertices of `within` that can reach a member of `target` inside `within`.
    std::vector<char> can_reach(const std::vector<char>& within, const std::vector<char>& target) const {
        std::vector<std::vector<int>> pred(succ_.size());
        for (int v : g_.vertices()) {
            if (!within[v]) continue;
            for (std::size_t e = 0; e < succ_[v].size(); ++e) {
                int w = succ_[v][e];
                if (edge_alive_[v][e] && within[w]) pred[w].push_back(v);
            }
        }
        std::vector<char> seen(succ_.size(), 0);
        std::vector<int> stack;
        for (int v : g_.vertices()) {
            if (within[v] && target[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int v : pred[w]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    }

    /// Vertices of `within` from which an infinite path inside `within` starts.
    std::vector<char> infinite(const std::vector<char>& within) const {
        SccResult scc = strongly_connected(succ_, within, [&](int v, int w) {
            auto it = std::find(succ_[v].begin(), succ_[v].end(), w);
            return edge_alive_[v][it - succ_[v].begin()] != 0;
        });
        std::vector<char> on_cycle(succ_.size(), 0);
        for (int v : g_.vertices())
            if (within[v] && scc.cyclic[scc.component[v]]) on_cycle[v] = 1;
        return can_reach(within, on_cycle);
    }

    /// Undirected components of the live graph, each sorted.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> adj(succ_.size());
        for (int v : g_.vertices()) {
            if (!alive_[v]) continue;
            for (std::size_t e = 0; e < succ_[v].size(); ++e) {
                if (!edge(v, e)) continue;
                adj[v].push_back(succ_[v][e]);
                adj[succ_[v][e]].push_back(v);
            }
        }
        std::vector<char> seen(succ_.size(), 0);
        std::vector<std::vector<int>> out;
        for (int root : g_.vertices()) {
            if (!alive_[root] || seen[root]) continue;
            std::vector<int> comp, stack{root};
            seen[root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : adj[v]) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

private:
    const FoldedRunGraph& g_;
    std::vector<std::vector<int>> succ_;
    std::vector<char> alive_;
    std::vector<std::vector<char>> edge_alive_;
};

struct Candidate {
    int index;  // 0 when the kind carries no index
    StateList set;
};

std::string describe(const FoldedRunGraph& g, const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.state_of(vs[i])) + "@" + std::to_string(g.position_of(vs[i]));
    }
    return out + "}";
}

// Ranks `members` by alternating finite and free removals. Candidates are
// tried in order; the first with free vertices wins the stage.
bool gc_stages(const Surgery& s, const std::vector<int>& members, const std::vector<Candidate>& candidates,
               std::vector<GcRank>& out, std::vector<std::string>& log, const std::string& prefix) {
    const FoldedRunGraph& g = s.graph();
    std::vector<char> within(g.vertex_capacity(), 0);
    std::size_t left = 0;
    for (int v : members) {
        within[v] = 1;
        ++left;
    }
    for (int i = 0; left > 0; ++i) {
        auto inf = s.infinite(within);
        std::vector<int> finite;
        for (int v : members) {
            if (within[v] && !inf[v]) {
                finite.push_back(v);
                out[v] = {2 * i, 0};
            }
        }
        for (int v : finite) within[v] = 0;
        left -= finite.size();
        if (!finite.empty()) log.push_back(prefix + "rank " + std::to_string(2 * i) + " " + describe(g, finite));
        if (left == 0) break;
        bool progressed = false;
        for (const Candidate& c : candidates) {
            std::vector<char> target(g.vertex_capacity(), 0);
            for (int v : members)
                if (within[v] && contains(c.set, g.state_of(v))) target[v] = 1;
            auto reach = s.can_reach(within, target);
            std::vector<int> free;
            for (int v : members)
                if (within[v] && !reach[v]) free.push_back(v);
            if (free.empty()) continue;
            for (int v : free) {
                out[v] = {2 * i + 1, c.index};
                within[v] = 0;
            }
            left -= free.size();
            log.push_back(prefix + "rank " + format_rank({{2 * i + 1, c.index}}) + " " + describe(g, free));
            progressed = true;
            break;
        }
        if (!progressed) {
            log.push_back(prefix + "no free vertices at stage " + std::to_string(i));
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<GraphRanking> assign_base_ranking(const FoldedRunGraph& graph, const BaseCondition& condition) {
    Surgery s(graph);
    std::vector<Candidate> candidates;
    GraphRanking f;
    switch (condition.type) {
    case BaseCondition::Type::cobuchi:
        f.kind = RankKind::cobuchi;
        candidates.push_back({0, condition.b.at(0)});
        break;
    case BaseCondition::Type::gc:
        f.kind = RankKind::gc;
        for (int j = 1; j <= static_cast<int>(condition.b.size()); ++j)
            candidates.push_back({j, condition.b[j - 1]});
        break;
    case BaseCondition::Type::mu_gc:
        f.kind = RankKind::gc;
        for (int j : mini(condition.alpha, condition.b)) candidates.push_back({j, condition.b[j - 1]});
        break;
    }
    std::vector<GcRank> out(graph.vertex_capacity());
    if (!gc_stages(s, graph.vertices(), candidates, out, f.log, "")) return std::nullopt;
    f.rank.assign(graph.vertex_capacity(), {});
    for (int v : graph.vertices()) f.rank[v] = {out[v]};
    return f;
}

std::optional<GraphRanking> assign_tuple_ranking(const FoldedRunGraph& graph, const RankSpec& spec) {
    if (spec.kind != RankKind::rabin && spec.kind != RankKind::mu_r && spec.kind != RankKind::parity)
        throw Error(ErrorKind::IncompatibleKind, "tuple ranking needs a rabin, mu_r or parity spec");
    const int k = spec.k();
    Surgery s(graph);
    GraphRanking f;
    f.kind = spec.kind;
    f.rank.assign(graph.vertex_capacity(), {});
    std::vector<Rank> prefix(graph.vertex_capacity());
    std::vector<GcRank> gc(graph.vertex_capacity());
    StateList everything;
    for (State q = 0; q < graph.state_count(); ++q) everything.push_back(q);

    for (int stage = 0; stage <= k; ++stage) {
        auto comps = s.components();
        if (comps.empty()) break;
        const std::string tag = "stage " + std::to_string(stage) + ": ";
        for (const auto& comp : comps) {
            IndexTuple alpha = h_projection(prefix[comp.front()]);
            std::vector<Candidate> candidates;
            switch (spec.kind) {
            case RankKind::rabin:
                for (int j = 1; j <= k; ++j)
                    if (std::find(alpha.begin(), alpha.end(), j) == alpha.end())
                        candidates.push_back({j, spec.b[j - 1]});
                break;
            case RankKind::mu_r:
                for (int j : mini(alpha, spec.b)) candidates.push_back({j, spec.b[j - 1]});
                break;
            default:
                candidates.push_back({0, stage < k ? spec.b[stage] : everything});
                break;
            }
            if (!gc_stages(s, comp, candidates, gc, f.log, tag)) return std::nullopt;
        }
        std::vector<int> live = s.alive_vertices();
        for (int v : live) {
            if (!gc[v].odd()) {
                f.rank[v] = prefix[v];
                f.rank[v].push_back(gc[v]);
                s.remove(v);
            }
        }
        for (int v : live) {
            if (!s.alive(v)) continue;
            for (std::size_t e = 0; e < s.succ(v).size(); ++e)
                if (s.edge(v, e) && gc[v].r > gc[s.succ(v)[e]].r) s.cut(v, e);
            const State q = graph.state_of(v);
            bool disabled = false;
            switch (spec.kind) {
            case RankKind::rabin:
                disabled = contains(spec.g[gc[v].index - 1], q);
                break;
            case RankKind::mu_r: {
                IndexTuple extended = h_projection(prefix[v]);
                extended.push_back(gc[v].index);
                for (int t : cover(extended, spec.b)) disabled = disabled || contains(spec.g[t - 1], q);
                break;
            }
            default:
                disabled = stage < k && contains(spec.g[stage], q);
                break;
            }
            if (disabled) s.cut_all(v);
            prefix[v].push_back(gc[v]);
        }
    }
    if (!s.alive_vertices().empty()) {
        f.log.push_back("vertices remain after the last stage");
        return std::nullopt;
    }
    return f;
}

std::optional<GraphRanking> assign_ranking(const FoldedRunGraph& graph, const RankSpec& spec) {
    switch (spec.kind) {
    case RankKind::cobuchi: return assign_base_ranking(graph, BaseCondition::cobuchi(spec.b.at(0)));
    case RankKind::gc: return assign_base_ranking(graph, BaseCondition::gc(spec.b));
    default: return assign_tuple_ranking(graph, spec);
    }
}

Verification verify_ranking(const FoldedRunGraph& graph, const GraphRanking& f, const Ranker& ranker) {
    Verification result;
    auto name = [&](int v) {
        return std::to_string(graph.state_of(v)) + "@" + std::to_string(graph.position_of(v));
    };
    for (int v : graph.vertices()) {
        const Rank& rv = f.rank.at(v);
        if (!ranker.check_vertex(graph.state_of(v), rv)) {
            result.valid = false;
            result.violations.push_back("vertex " + name(v) + " rank " + format_rank(rv));
            continue;
        }
        for (int w : graph.successors(v)) {
            const Rank& rw = f.rank.at(w);
            if (!ranker.well_formed(rw)) continue;
            if (!ranker.check_edge(graph.state_of(v), rv, graph.state_of(w), rw)) {
                result.valid = false;
                result.violations.push_back("edge " + name(v) + " -> " + name(w) + " ranks " + format_rank(rv) +
                                            " -> " + format_rank(rw));
            }
        }
    }
    std::vector<std::vector<int>> succ(graph.vertex_capacity());
    std::vector<char> plain(graph.vertex_capacity(), 0);
    for (int v : graph.vertices()) {
        succ[v] = graph.successors(v);
        if (!ranker.is_odd_vertex(graph.state_of(v), f.rank.at(v))) plain[v] = 1;
    }
    SccResult scc = strongly_connected(succ, plain);
    for (int v : graph.vertices()) {
        if (plain[v] && scc.cyclic[scc.component[v]]) {
            result.odd = false;
            result.violations.push_back("cycle without odd vertices through " + name(v));
            break;
        }
    }
    return result;
}

}  // namespace omega
