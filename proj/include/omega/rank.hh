#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "omega/automaton.hh"
#include "omega/its.hh"

namespace omega {

enum class RankKind { cobuchi, gc, rabin, mu_r, parity };

const char* to_string(RankKind kind);

/// One GC rank. Odd numeric ranks carry an acceptance index (0 when the
/// kind has no indices); even ranks always carry 0.
struct GcRank {
    int r = 0;
    int index = 0;

    bool odd() const { return r % 2 != 0; }
    auto operator<=>(const GcRank&) const = default;
};

/// A rank of any kind: a single GC rank for cobuchi/gc, otherwise a tuple
/// of odd ranks closed by one even rank.
using Rank = std::vector<GcRank>;

std::string format_rank(const Rank& rank);

/// Index projection: the indices of the odd entries.
IndexTuple h_projection(const Rank& rank);
/// Numeric projection.
std::vector<int> r_projection(const Rank& rank);

enum class Order { less, equal, greater };

/// Lexicographic comparison of numeric ranks through position m (1-based
/// count of compared entries).
Order compare_ranks(const Rank& x, const Rank& y, int m);

/// A level ranking: ranks aligned with a sorted state list.
struct LevelRanking {
    StateList states;
    std::vector<Rank> ranks;

    const Rank& at(State q) const;
    bool operator==(const LevelRanking&) const = default;
    auto operator<=>(const LevelRanking&) const = default;
};

/// The acceptance data a ranking kind reads. cobuchi uses b[0] as F; gc
/// uses b; tuple kinds use g and b.
struct RankSpec {
    RankKind kind = RankKind::cobuchi;
    int n = 0;
    std::vector<StateList> g;
    std::vector<StateList> b;

    int k() const { return static_cast<int>(b.size()); }
};

/// Builds the ranking data for `a` with `kind`, throwing IncompatibleKind.
RankSpec rank_spec(const Automaton& a, RankKind kind);

/// Vertex and edge legality, odd vertices and successor level rankings for
/// one ranking kind over one automaton.
class Ranker {
public:
    Ranker(const Automaton& a, RankKind kind);
    Ranker(const Automaton& a, RankSpec spec);

    const RankSpec& spec() const { return spec_; }
    RankKind kind() const { return spec_.kind; }
    const Automaton& automaton() const { return a_; }

    /// Shape, bounds and index-history checks without the vertex clauses.
    bool well_formed(const Rank& rank) const;
    bool is_odd_vertex(State q, const Rank& rank) const;
    bool check_vertex(State q, const Rank& rank) const;
    bool check_edge(State q, const Rank& rank_q, State q2, const Rank& rank_q2) const;

    /// Every rank passing check_vertex for q.
    const std::vector<Rank>& domain(State q) const;

    /// Streams every successor of g over S on sigma; stops when the visitor
    /// returns false.
    void for_each_succ(const LevelRanking& g, Symbol sigma,
                       const std::function<bool(const LevelRanking&)>& visit) const;
    std::vector<LevelRanking> succ(const LevelRanking& g, Symbol sigma) const;

    void for_each_initial(const std::function<bool(const LevelRanking&)>& visit) const;
    std::vector<LevelRanking> initial_rankings() const;

    /// States of the ranking that are odd vertices.
    StateList odd_states(const LevelRanking& g) const;

private:
    struct History {
        bool valid = false;       // every entry lies in Mini of its prefix
        std::uint64_t covered = 0;  // union of B over the entries
        std::uint64_t cover_g = 0;  // union of G(t) over t in Cover
    };
    const History& history(const IndexTuple& alpha) const;
    void for_each_product(const StateList& states, const std::vector<std::vector<const Rank*>>& choices,
                          const std::function<bool(const LevelRanking&)>& visit) const;

    Automaton a_;
    RankSpec spec_;
    std::vector<std::uint64_t> g_mask_, b_mask_;
    mutable std::map<IndexTuple, History> histories_;
    mutable std::vector<std::vector<Rank>> domains_;
    mutable std::vector<char> domain_ready_;
};

}  // namespace omega
