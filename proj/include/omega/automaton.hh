#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omega {

using State = int;
using Symbol = int;

/// Sorted, duplicate-free list of states.
using StateList = std::vector<State>;

enum class ErrorKind {
    WrongAcceptanceType,
    UnknownSymbol,
    IncompatibleKind,
    IndexOutOfRange,
    TooLarge,
    InvalidArgs,
    PositionOutOfRange,
    SyntaxError,
    ValidationFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, int line = 0, int column = 0);

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

enum class AcceptanceType { buchi, gbuchi, streett, rabin, parity };

const char* to_string(AcceptanceType type);

/// One acceptance condition. Pair and set indices are 1-based at the API
/// surface; `g` and `b` are stored 0-based.
struct Acceptance {
    AcceptanceType type = AcceptanceType::buchi;
    StateList final;            // buchi
    std::vector<StateList> g;   // streett, rabin, parity
    std::vector<StateList> b;   // gbuchi sets, or the B side of pairs

    static Acceptance buchi(StateList final);
    static Acceptance gbuchi(std::vector<StateList> sets);
    static Acceptance streett(std::vector<StateList> g, std::vector<StateList> b);
    static Acceptance rabin(std::vector<StateList> g, std::vector<StateList> b);
    static Acceptance parity(std::vector<StateList> g, std::vector<StateList> b);

    /// Number of sets or pairs (1 for Büchi).
    int size() const;
    const StateList& G(int i) const { return g.at(i - 1); }
    const StateList& B(int i) const { return b.at(i - 1); }

    bool operator==(const Acceptance&) const = default;
};

struct Transition {
    State from;
    Symbol symbol;
    State to;

    auto operator<=>(const Transition&) const = default;
};

/// An ω-automaton. Immutable once built: every operation returns a new value.
class Automaton {
public:
    Automaton() = default;
    Automaton(std::vector<std::string> alphabet, int state_count, StateList initial,
              std::vector<Transition> transitions, Acceptance acceptance);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    int state_count() const { return state_count_; }
    const StateList& initial() const { return initial_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const Acceptance& acceptance() const { return acceptance_; }

    /// min(n, k), the bound on index-history length.
    int mu() const;

    /// Index of a symbol name, throwing UnknownSymbol.
    Symbol symbol_index(const std::string& name) const;

    /// Successors of `q` on `sigma`, sorted. Empty for out-of-range input.
    const StateList& post(State q, Symbol sigma) const;

    bool operator==(const Automaton& other) const;

private:
    std::vector<std::string> alphabet_;
    int state_count_ = 0;
    StateList initial_;
    std::vector<Transition> transitions_;
    Acceptance acceptance_;
    std::vector<StateList> post_;  // indexed q * |alphabet| + sigma
};

enum class ViolationCode { OutOfRange, ChainViolation, DuplicateB, EmptyInitial };

const char* to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    /// Offending pair/set index (1-based), or 0 when not pair-specific.
    int index = 0;
    std::string message;
};

std::vector<Violation> validate(const Automaton& a);

/// Merges Streett/Rabin pairs that share a B set; G sets are united.
Automaton normalize_injective_b(const Automaton& a);

// Sorted-list set helpers shared across modules.
StateList normalized(StateList s);
bool contains(const StateList& s, State q);
bool is_subset(const StateList& a, const StateList& b);
StateList set_union(const StateList& a, const StateList& b);

}  // namespace omega
