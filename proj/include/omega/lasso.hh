#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omega/automaton.hh"

namespace omega {

/// The ultimately periodic word stem·cycle^ω, as symbol indices.
struct Lasso {
    std::vector<Symbol> stem;
    std::vector<Symbol> cycle;

    bool operator==(const Lasso&) const = default;
};

/// Parses `stem;cycle` with whitespace-separated symbol names.
Lasso parse_lasso(const std::string& text, const std::vector<std::string>& alphabet);
std::string format_lasso(const Lasso& l, const std::vector<std::string>& alphabet);

/// The finite folding of the run graph of an automaton over a lasso.
/// Vertex (q, p) has id p * n + q.
class FoldedRunGraph {
public:
    FoldedRunGraph(const Automaton& a, const Lasso& l);

    int state_count() const { return n_; }
    int stem_length() const { return stem_length_; }
    int positions() const { return positions_; }
    /// The position following p, wrapping from the last one to the cycle start.
    int next(int p) const { return p + 1 < positions_ ? p + 1 : stem_length_; }
    Symbol letter(int p) const { return letters_[p]; }

    int vertex_id(State q, int p) const { return p * n_ + q; }
    State state_of(int v) const { return v % n_; }
    int position_of(int v) const { return v / n_; }

    int vertex_capacity() const { return n_ * positions_; }
    bool is_vertex(int v) const { return present_[v]; }
    /// Vertex ids in increasing order.
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<int>& successors(int v) const { return succ_[v]; }
    std::size_t edge_count() const;
    /// States present at position p, sorted.
    StateList level(int p) const;
    /// Vertices at position 0 that are initial.
    const StateList& initial() const { return initial_; }

private:
    int n_ = 0;
    int stem_length_ = 0;
    int positions_ = 0;
    std::vector<Symbol> letters_;
    std::vector<char> present_;
    std::vector<int> vertices_;
    std::vector<std::vector<int>> succ_;
    StateList initial_;
};

FoldedRunGraph folded_run_graph(const Automaton& a, const Lasso& l);

bool member(const Automaton& a, const Lasso& l);

/// Every lasso with |stem| <= max_stem and 1 <= |cycle| <= max_cycle, stems
/// outermost, both in length-lexicographic order.
std::vector<Lasso> enumerate_lassos(int alphabet_size, int max_stem, int max_cycle);
void for_each_lasso(int alphabet_size, int max_stem, int max_cycle,
                    const std::function<bool(const Lasso&)>& visit);

/// Strongly connected components of the subgraph induced by `alive`.
/// Returns the component id per vertex (-1 when not alive) and whether each
/// component contains a cycle.
struct SccResult {
    std::vector<int> component;
    std::vector<char> cyclic;
    int count = 0;
};
SccResult strongly_connected(const std::vector<std::vector<int>>& succ, const std::vector<char>& alive,
                             const std::function<bool(int, int)>& edge_alive = {});

}  // namespace omega
