#pragma once

#include <cstdint>
#include <vector>

#include "omega/automaton.hh"

namespace omega {

/// A sequence of 1-based acceptance indices.
using IndexTuple = std::vector<int>;

/// Union of B over the entries of alpha.
StateList covered_states(const IndexTuple& alpha, const std::vector<StateList>& b);

/// Indices whose B set lies inside the union of B over alpha. The empty
/// tuple covers nothing.
std::vector<int> cover(const IndexTuple& alpha, const std::vector<StateList>& b);

/// Indices that minimally enlarge the covered state set, ties broken by the
/// smaller index.
std::vector<int> mini(const IndexTuple& alpha, const std::vector<StateList>& b);

/// Increasing tree of sets. Nodes are stored in preorder with children in
/// ascending index order; node 0 is the root (empty path).
struct ItsTree {
    struct Node {
        IndexTuple path;
        int parent = -1;
        std::vector<int> children;
    };
    int n = 0;
    int k = 0;
    std::vector<Node> nodes;

    /// Number of non-root nodes.
    std::size_t size() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    std::size_t leaf_count() const;
    int height() const;
    bool contains(const IndexTuple& path) const;
};

ItsTree build_its(int n, int k, const std::vector<StateList>& b);

/// max over injective B of the ITS size; enumerates unordered ranges of B.
/// Throws TooLarge when k * 2^n exceeds `cap`.
std::size_t its_size_max(int n, int k, std::size_t cap = 512);

}  // namespace omega
