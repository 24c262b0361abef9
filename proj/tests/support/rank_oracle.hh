#pragma once

#include <vector>

#include "omega/rank.hh"

namespace omega::testing {

/// Every rank of the ranker's kind that is type-valid (shape, bounds and
/// index history), enumerated without the ranker's domain cache.
std::vector<Rank> type_valid_ranks(const Ranker& ranker);

/// Successors of g on sigma by filtering the full product of type-valid
/// ranks through check_vertex and check_edge.
std::vector<LevelRanking> brute_force_succ(const Ranker& ranker, const LevelRanking& g, Symbol sigma);

}  // namespace omega::testing
