#pragma once

#include <vector>

#include "omega/top.hh"

namespace omega::testing {

/// counts[l] = number of ordered rooted trees with `edges` edges and l
/// leaves, by dynamic programming over forests (independent of the Dyck-word
/// enumeration in the library).
std::vector<BigInt> ordered_tree_counts(int edges);

/// Catalan number C(e) by its product recurrence.
BigInt catalan(int e);

}  // namespace omega::testing
