#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/lasso.hh"
#include "omega/rank.hh"

namespace omega {

/// A rank per folded-graph vertex; entries for non-vertices stay empty.
struct GraphRanking {
    RankKind kind = RankKind::cobuchi;
    std::vector<Rank> rank;
    /// One line per removal stage.
    std::vector<std::string> log;
};

/// The condition a single GC-style ranking is assigned against.
struct BaseCondition {
    enum class Type { cobuchi, gc, mu_gc };
    Type type = Type::cobuchi;
    std::vector<StateList> b;  // cobuchi: {F}
    IndexTuple alpha;          // mu_gc only

    static BaseCondition cobuchi(StateList f);
    static BaseCondition gc(std::vector<StateList> b);
    static BaseCondition mu_gc(std::vector<StateList> b, IndexTuple alpha);
};

/// Alternating finite/free removal stages. nullopt means the graph has a
/// path meeting the condition's sets infinitely often (no ranking exists).
std::optional<GraphRanking> assign_base_ranking(const FoldedRunGraph& graph, const BaseCondition& condition);

/// Stage loop producing tuple ranks for rabin, mu_r or parity specs.
std::optional<GraphRanking> assign_tuple_ranking(const FoldedRunGraph& graph, const RankSpec& spec);

/// Dispatches on the ranking kind of `spec`.
std::optional<GraphRanking> assign_ranking(const FoldedRunGraph& graph, const RankSpec& spec);

struct Verification {
    bool valid = true;
    bool odd = true;
    std::vector<std::string> violations;
};

Verification verify_ranking(const FoldedRunGraph& graph, const GraphRanking& f, const Ranker& ranker);

}  // namespace omega
