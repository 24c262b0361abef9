#include "omega/automaton.hh"

#include <algorithm>
#include <map>

namespace omega {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::WrongAcceptanceType: return "WrongAcceptanceType";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::IncompatibleKind: return "IncompatibleKind";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidArgs: return "InvalidArgs";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    }
    return "?";
}

Error::Error(ErrorKind kind, const std::string& what, int line, int column)
    : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

const char* to_string(AcceptanceType type) {
    switch (type) {
    case AcceptanceType::buchi: return "buchi";
    case AcceptanceType::gbuchi: return "gbuchi";
    case AcceptanceType::streett: return "streett";
    case AcceptanceType::rabin: return "rabin";
    case AcceptanceType::parity: return "parity";
    }
    return "?";
}

const char* to_string(ViolationCode code) {
    switch (code) {
    case ViolationCode::OutOfRange: return "OutOfRange";
    case ViolationCode::ChainViolation: return "ChainViolation";
    case ViolationCode::DuplicateB: return "DuplicateB";
    case ViolationCode::EmptyInitial: return "EmptyInitial";
    }
    return "?";
}

StateList normalized(StateList s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool contains(const StateList& s, State q) { return std::binary_search(s.begin(), s.end(), q); }

bool is_subset(const StateList& a, const StateList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

StateList set_union(const StateList& a, const StateList& b) {
    StateList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

std::vector<StateList> normalized_all(std::vector<StateList> sets) {
    for (auto& s : sets) s = normalized(std::move(s));
    return sets;
}

Acceptance make_pairs(AcceptanceType type, std::vector<StateList> g, std::vector<StateList> b) {
    Acceptance acc;
    acc.type = type;
    acc.g = normalized_all(std::move(g));
    acc.b = normalized_all(std::move(b));
    return acc;
}

}  // namespace

Acceptance Acceptance::buchi(StateList final) {
    Acceptance acc;
    acc.type = AcceptanceType::buchi;
    acc.final = normalized(std::move(final));
    return acc;
}

Acceptance Acceptance::gbuchi(std::vector<StateList> sets) {
    Acceptance acc;
    acc.type = AcceptanceType::gbuchi;
    acc.b = normalized_all(std::move(sets));
    return acc;
}

Acceptance Acceptance::streett(std::vector<StateList> g, std::vector<StateList> b) {
    return make_pairs(AcceptanceType::streett, std::move(g), std::move(b));
}

Acceptance Acceptance::rabin(std::vector<StateList> g, std::vector<StateList> b) {
    return make_pairs(AcceptanceType::rabin, std::move(g), std::move(b));
}

Acceptance Acceptance::parity(std::vector<StateList> g, std::vector<StateList> b) {
    return make_pairs(AcceptanceType::parity, std::move(g), std::move(b));
}

int Acceptance::size() const {
    return type == AcceptanceType::buchi ? 1 : static_cast<int>(b.size());
}

Automaton::Automaton(std::vector<std::string> alphabet, int state_count, StateList initial,
                     std::vector<Transition> transitions, Acceptance acceptance)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(normalized(std::move(initial))),
      transitions_(std::move(transitions)),
      acceptance_(std::move(acceptance)) {
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    const int sigma_count = static_cast<int>(alphabet_.size());
    post_.assign(static_cast<std::size_t>(std::max(state_count_, 0)) * sigma_count, {});
    for (const auto& t : transitions_) {
        if (t.from < 0 || t.from >= state_count_ || t.to < 0 || t.to >= state_count_) continue;
        if (t.symbol < 0 || t.symbol >= sigma_count) continue;
        post_[t.from * sigma_count + t.symbol].push_back(t.to);
    }
}

int Automaton::mu() const { return std::min(state_count_, acceptance_.size()); }

Symbol Automaton::symbol_index(const std::string& name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + name + "'");
    return static_cast<Symbol>(it - alphabet_.begin());
}

const StateList& Automaton::post(State q, Symbol sigma) const {
    static const StateList empty;
    const int sigma_count = static_cast<int>(alphabet_.size());
    if (q < 0 || q >= state_count_ || sigma < 0 || sigma >= sigma_count) return empty;
    return post_[q * sigma_count + sigma];
}

bool Automaton::operator==(const Automaton& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           initial_ == other.initial_ && transitions_ == other.transitions_ &&
           acceptance_ == other.acceptance_;
}

std::vector<Violation> validate(const Automaton& a) {
    std::vector<Violation> report;
    const int n = a.state_count();
    auto out_of_range = [&](const StateList& s) {
        return std::any_of(s.begin(), s.end(), [n](State q) { return q < 0 || q >= n; });
    };
    auto add = [&](ViolationCode code, int index, std::string msg) {
        report.push_back({code, index, std::move(msg)});
    };

    if (n < 1) add(ViolationCode::OutOfRange, 0, "state count must be at least 1");
    if (a.initial().empty()) add(ViolationCode::EmptyInitial, 0, "initial set is empty");
    if (out_of_range(a.initial())) add(ViolationCode::OutOfRange, 0, "initial state out of range");
    const int sigma_count = static_cast<int>(a.alphabet().size());
    for (const auto& t : a.transitions()) {
        if (t.from < 0 || t.from >= n || t.to < 0 || t.to >= n || t.symbol < 0 ||
            t.symbol >= sigma_count) {
            add(ViolationCode::OutOfRange, 0,
                "transition " + std::to_string(t.from) + " -" + std::to_string(t.symbol) + "-> " +
                    std::to_string(t.to) + " out of range");
        }
    }

    const Acceptance& acc = a.acceptance();
    if (acc.type == AcceptanceType::buchi) {
        if (out_of_range(acc.final)) add(ViolationCode::OutOfRange, 0, "final state out of range");
        return report;
    }
    const int k = static_cast<int>(acc.b.size());
    if (k < 1) add(ViolationCode::OutOfRange, 0, "acceptance needs at least one set or pair");
    for (int i = 1; i <= k; ++i) {
        if (out_of_range(acc.B(i)))
            add(ViolationCode::OutOfRange, i, "B(" + std::to_string(i) + ") out of range");
    }
    if (acc.type == AcceptanceType::gbuchi) return report;

    if (static_cast<int>(acc.g.size()) != k) {
        add(ViolationCode::OutOfRange, 0, "G and B lists differ in length");
        return report;
    }
    for (int i = 1; i <= k; ++i) {
        if (out_of_range(acc.G(i)))
            add(ViolationCode::OutOfRange, i, "G(" + std::to_string(i) + ") out of range");
    }

    auto strict_subset = [](const StateList& x, const StateList& y) {
        return x.size() < y.size() && is_subset(x, y);
    };
    if (acc.type == AcceptanceType::parity) {
        for (int i = 1; i <= k; ++i) {
            if (!strict_subset(acc.B(i), acc.G(i)))
                add(ViolationCode::ChainViolation, i,
                    "B(" + std::to_string(i) + ") is not a strict subset of G(" + std::to_string(i) + ")");
            if (i < k && !strict_subset(acc.G(i), acc.B(i + 1)))
                add(ViolationCode::ChainViolation, i + 1,
                    "G(" + std::to_string(i) + ") is not a strict subset of B(" + std::to_string(i + 1) +
                        ")");
        }
        return report;
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j < i; ++j) {
            if (acc.B(i) == acc.B(j)) {
                add(ViolationCode::DuplicateB, i,
                    "B(" + std::to_string(i) + ") equals B(" + std::to_string(j) + ")");
                break;
            }
        }
    }
    return report;
}

Automaton normalize_injective_b(const Automaton& a) {
    const Acceptance& acc = a.acceptance();
    if (acc.type != AcceptanceType::streett && acc.type != AcceptanceType::rabin)
        throw Error(ErrorKind::WrongAcceptanceType,
                    std::string("normalization needs Streett or Rabin acceptance, got ") +
                        to_string(acc.type));
    std::vector<StateList> g, b;
    std::map<StateList, std::size_t> slot;
    for (int i = 1; i <= acc.size(); ++i) {
        auto [it, fresh] = slot.try_emplace(acc.B(i), b.size());
        if (fresh) {
            b.push_back(acc.B(i));
            g.push_back(acc.G(i));
        } else {
            g[it->second] = set_union(g[it->second], acc.G(i));
        }
    }
    Acceptance merged = acc.type == AcceptanceType::streett ? Acceptance::streett(g, b)
                                                            : Acceptance::rabin(g, b);
    return Automaton(a.alphabet(), a.state_count(), a.initial(), a.transitions(), std::move(merged));
}

}  // namespace omega
