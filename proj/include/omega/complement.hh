#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omega/automaton.hh"
#include "omega/lasso.hh"
#include "omega/rank.hh"

namespace omega {

enum class ComplementKind { automatic, buchi, gbuchi, streett_baseline, streett_mu_r, parity };

ComplementKind parse_complement_kind(const std::string& name);
const char* to_string(ComplementKind kind);

/// The ranking kind a complementation kind uses for `a`, or IncompatibleKind.
RankKind ranking_for(const Automaton& a, ComplementKind kind);

/// ⟨S, O, g⟩. The sink for dead letters has empty S, O and g.
struct ComplementState {
    StateList s;
    StateList o;
    LevelRanking g;

    bool is_sink() const { return s.empty(); }
    bool operator==(const ComplementState&) const = default;
};

std::string format_state(const ComplementState& state);

struct ComplementResult {
    /// Büchi automaton over the source alphabet; state i is described by
    /// states[i].
    Automaton automaton;
    std::vector<ComplementState> states;
    RankKind ranking = RankKind::cobuchi;
};

struct ComplementOptions {
    /// Abort with TooLarge past this many reachable states (0 = no limit).
    std::size_t max_states = 0;
    /// Abort with TooLarge past this many transitions (0 = no limit).
    std::size_t max_transitions = 0;
};

ComplementResult complement(const Automaton& a, ComplementKind kind = ComplementKind::automatic,
                            const ComplementOptions& options = {});

/// Whether complement(a, kind) accepts `l`, exploring only the complement
/// states reachable along the word. max_transitions bounds the product size.
bool complement_member(const Automaton& a, const Lasso& l, ComplementKind kind = ComplementKind::automatic,
                       const ComplementOptions& options = {});

struct ComplementStats {
    std::size_t reachable_states = 0;
    std::size_t transitions = 0;
    std::size_t final_states = 0;
    std::size_t max_rank_width = 0;
};

ComplementStats complement_stats(const ComplementResult& result);
ComplementStats complement_stats(const Automaton& a, ComplementKind kind = ComplementKind::automatic,
                                 const ComplementOptions& options = {});

std::string format_stats(const ComplementStats& stats);

}  // namespace omega
