#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "omega/rank.hh"

namespace omega {

using BigInt = boost::multiprecision::cpp_int;

/// One matrix entry: a compressed odd rank ⟨i, j⟩ standing for ⟨2i-1, j⟩.
struct MatrixEntry {
    int r = 1;
    int index = 0;

    auto operator<=>(const MatrixEntry&) const = default;
};

/// A level rank as an n × μ matrix, rows in state order.
struct MuRMatrix {
    std::vector<std::vector<MatrixEntry>> rows;

    /// Numeric projection.
    std::vector<std::vector<int>> r_matrix() const;
    /// Index projection.
    std::vector<std::vector<int>> h_matrix() const;

    bool operator==(const MuRMatrix&) const = default;
};

/// Drops the closing even rank of each row, maps ⟨2i-1, j⟩ to ⟨i, j⟩ and pads
/// with ⟨1, 0⟩ to `mu` columns. Rows with more odd entries than `mu` widen
/// the matrix to their length.
MuRMatrix mu_r_matrix(const std::vector<Rank>& level_rank, int mu);
MuRMatrix mu_r_matrix(const LevelRanking& level_rank, int mu);

/// An ordered tree whose nodes are labeled with state sets. Node 0 is the
/// root; children are listed in rank order; empty labels mark unused ranks.
struct TopTree {
    struct Node {
        StateList label;
        int depth = 0;
        std::vector<int> children;
    };
    std::vector<Node> nodes;

    std::size_t leaf_count() const;
    int height() const;
    /// Bracketed form such as `{0,1,2}({2},{})`.
    std::string format() const;
};

struct TopResult {
    TopTree tree;
    /// False when the tree has more than n leaves.
    bool is_top = false;
    std::string reason;
};

/// Column-by-column cell refinement of a numeric matrix with entries >= 1.
TopResult top_from_r_matrix(const std::vector<std::vector<int>>& r_matrix, int n, int mu);

/// Number of ordered trees with e edges and l leaves, by the closed form.
BigInt narayana(int e, int l);

/// The same count by enumerating every ordered tree with e edges.
BigInt brute_force_tree_count(int e, int l, int cap = 8);

/// Sum over e in [1..n·μ] and l in [1..min(n, e)] of narayana(e, l) · l^n,
/// with μ = min(n, k).
BigInt top_bound(int n, int k);

}  // namespace omega
