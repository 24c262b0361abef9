#include "rank_oracle.hh"

#include <algorithm>
#include <functional>

namespace omega::testing {

namespace {

bool history_ok(const Ranker& ranker, const IndexTuple& alpha) {
    switch (ranker.kind()) {
    case RankKind::parity:
        return std::all_of(alpha.begin(), alpha.end(), [](int j) { return j == 0; });
    case RankKind::rabin: {
        IndexTuple sorted = alpha;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    case RankKind::mu_r: {
        IndexTuple prefix;
        for (int j : alpha) {
            auto options = mini(prefix, ranker.spec().b);
            if (std::find(options.begin(), options.end(), j) == options.end()) return false;
            prefix.push_back(j);
        }
        return true;
    }
    default:
        return false;
    }
}

}  // namespace

std::vector<Rank> type_valid_ranks(const Ranker& ranker) {
    const int n = ranker.spec().n;
    const int k = ranker.spec().k();
    std::vector<Rank> out;
    if (ranker.kind() == RankKind::cobuchi) {
        for (int r = 0; r <= 2 * n; ++r) out.push_back({{r, 0}});
        return out;
    }
    if (ranker.kind() == RankKind::gc) {
        for (int r = 0; r <= 2 * n; ++r) {
            if (r % 2 == 0) out.push_back({{r, 0}});
            else
                for (int j = 1; j <= k; ++j) out.push_back({{r, j}});
        }
        return out;
    }
    const int low = ranker.kind() == RankKind::parity ? 0 : 1;
    const int high = ranker.kind() == RankKind::parity ? 0 : k;
    Rank rank;
    std::function<void()> grow = [&] {
        for (int e = 0; e <= 2 * n; e += 2) {
            rank.push_back({e, 0});
            IndexTuple alpha = h_projection(rank);
            if (history_ok(ranker, alpha)) out.push_back(rank);
            rank.pop_back();
        }
        if (static_cast<int>(rank.size()) == k) return;
        for (int r = 1; r < 2 * n; r += 2) {
            for (int j = low; j <= high; ++j) {
                rank.push_back({r, j});
                grow();
                rank.pop_back();
            }
        }
    };
    grow();
    return out;
}

std::vector<LevelRanking> brute_force_succ(const Ranker& ranker, const LevelRanking& g, Symbol sigma) {
    const Automaton& a = ranker.automaton();
    StateList next;
    for (State q : g.states)
        for (State r : a.post(q, sigma)) next.push_back(r);
    next = normalized(next);
    std::vector<LevelRanking> out;
    if (next.empty()) return out;
    const std::vector<Rank> all = type_valid_ranks(ranker);
    LevelRanking candidate;
    candidate.states = next;
    candidate.ranks.resize(next.size());
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == next.size()) {
            for (std::size_t x = 0; x < g.states.size(); ++x)
                for (std::size_t y = 0; y < next.size(); ++y) {
                    const auto& post = a.post(g.states[x], sigma);
                    if (!std::binary_search(post.begin(), post.end(), next[y])) continue;
                    if (!ranker.check_edge(g.states[x], g.ranks[x], next[y], candidate.ranks[y])) return;
                }
            out.push_back(candidate);
            return;
        }
        for (const Rank& r : all) {
            if (!ranker.check_vertex(next[i], r)) continue;
            candidate.ranks[i] = r;
            fill(i + 1);
        }
    };
    fill(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace omega::testing
