#include "omega/complement.hh"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace omega {

ComplementKind parse_complement_kind(const std::string& name) {
    if (name == "auto") return ComplementKind::automatic;
    if (name == "buchi") return ComplementKind::buchi;
    if (name == "gbuchi") return ComplementKind::gbuchi;
    if (name == "streett_baseline") return ComplementKind::streett_baseline;
    if (name == "streett_mu_r") return ComplementKind::streett_mu_r;
    if (name == "parity") return ComplementKind::parity;
    throw Error(ErrorKind::InvalidArgs, "unknown complementation kind '" + name + "'");
}

const char* to_string(ComplementKind kind) {
    switch (kind) {
    case ComplementKind::automatic: return "auto";
    case ComplementKind::buchi: return "buchi";
    case ComplementKind::gbuchi: return "gbuchi";
    case ComplementKind::streett_baseline: return "streett_baseline";
    case ComplementKind::streett_mu_r: return "streett_mu_r";
    case ComplementKind::parity: return "parity";
    }
    return "?";
}

RankKind ranking_for(const Automaton& a, ComplementKind kind) {
    const AcceptanceType type = a.acceptance().type;
    auto incompatible = [&]() {
        return Error(ErrorKind::IncompatibleKind,
                     std::string("kind ") + to_string(kind) + " cannot complement " + to_string(type) +
                         " acceptance");
    };
    const bool streett_like = type == AcceptanceType::streett || type == AcceptanceType::parity;
    switch (kind) {
    case ComplementKind::automatic:
        switch (type) {
        case AcceptanceType::buchi: return RankKind::cobuchi;
        case AcceptanceType::gbuchi: return RankKind::gc;
        case AcceptanceType::streett: return RankKind::mu_r;
        case AcceptanceType::parity: return RankKind::parity;
        case AcceptanceType::rabin: throw incompatible();
        }
        break;
    case ComplementKind::buchi:
        if (type == AcceptanceType::buchi) return RankKind::cobuchi;
        break;
    case ComplementKind::gbuchi:
        if (type == AcceptanceType::gbuchi || type == AcceptanceType::buchi) return RankKind::gc;
        break;
    case ComplementKind::streett_baseline:
        if (streett_like) return RankKind::rabin;
        break;
    case ComplementKind::streett_mu_r:
        if (streett_like) return RankKind::mu_r;
        break;
    case ComplementKind::parity:
        if (type == AcceptanceType::parity) return RankKind::parity;
        break;
    }
    throw incompatible();
}

std::string format_state(const ComplementState& state) {
    if (state.is_sink()) return "sink";
    auto set = [](const StateList& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
    };
    std::string out = "S=" + set(state.s) + " O=" + set(state.o) + " g=[";
    for (std::size_t i = 0; i < state.g.states.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(state.g.states[i]) + ":" + format_rank(state.g.ranks[i]);
    }
    return out + "]";
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : key) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::vector<int> encode(const ComplementState& st) {
    std::vector<int> key;
    key.push_back(static_cast<int>(st.s.size()));
    key.insert(key.end(), st.s.begin(), st.s.end());
    key.push_back(static_cast<int>(st.o.size()));
    key.insert(key.end(), st.o.begin(), st.o.end());
    for (const Rank& r : st.g.ranks) {
        key.push_back(static_cast<int>(r.size()));
        for (const GcRank& x : r) {
            key.push_back(x.r);
            key.push_back(x.index);
        }
    }
    return key;
}

StateList post_set(const Automaton& a, const StateList& s, Symbol sigma) {
    StateList out;
    for (State q : s)
        for (State r : a.post(q, sigma)) out.push_back(r);
    return normalized(std::move(out));
}

StateList minus(const StateList& x, const StateList& y) {
    StateList out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

namespace {

/// Interns complement states and expands their successors.
class Construction {
public:
    Construction(const Automaton& a, ComplementKind kind, const ComplementOptions& options)
        : a_(check_valid(a)), ranking_(ranking_for(a, kind)), ranker_(a, ranking_), options_(options) {}

    RankKind ranking() const { return ranking_; }
    const std::vector<ComplementState>& states() const { return states_; }
    std::vector<ComplementState> take_states() { return std::move(states_); }

    /// Returns the dense id of `st` and whether it was new.
    std::pair<int, bool> intern(ComplementState st) {
        auto [it, fresh] = ids_.try_emplace(encode(st), static_cast<int>(states_.size()));
        if (fresh) {
            if (options_.max_states && states_.size() >= options_.max_states)
                throw Error(ErrorKind::TooLarge, "complement exceeds " + std::to_string(options_.max_states) +
                                                     " states");
            states_.push_back(std::move(st));
        }
        return {it->second, fresh};
    }

    template <typename Visit>
    void for_each_initial(Visit&& visit) {
        ranker_.for_each_initial([&](const LevelRanking& g) {
            visit(intern(ComplementState{a_.initial(), {}, g}));
            return true;
        });
    }

    /// Visits the interned successors of state `id` on `sigma`.
    template <typename Visit>
    void for_each_succ(int id, Symbol sigma, Visit&& visit) {
        if (states_[id].is_sink()) {
            visit(std::pair<int, bool>{id, false});
            return;
        }
        const ComplementState current = states_[id];
        StateList next_s = post_set(a_, current.s, sigma);
        if (next_s.empty()) {
            visit(intern(ComplementState{}));
            return;
        }
        StateList seed = current.o.empty() ? next_s : post_set(a_, current.o, sigma);
        ranker_.for_each_succ(current.g, sigma, [&](const LevelRanking& g2) {
            StateList o2 = minus(seed, ranker_.odd_states(g2));
            visit(intern(ComplementState{next_s, std::move(o2), g2}));
            return true;
        });
    }

private:
    static const Automaton& check_valid(const Automaton& a) {
        auto report = validate(a);
        if (!report.empty())
            throw Error(ErrorKind::ValidationFailed, "source automaton is invalid: " + report.front().message);
        return a;
    }

    const Automaton& a_;
    RankKind ranking_;
    Ranker ranker_;
    ComplementOptions options_;
    std::vector<ComplementState> states_;
    std::unordered_map<std::vector<int>, int, KeyHash> ids_;
};

}  // namespace

ComplementResult complement(const Automaton& a, ComplementKind kind, const ComplementOptions& options) {
    Construction c(a, kind, options);
    std::deque<int> work;
    StateList initial;
    c.for_each_initial([&](std::pair<int, bool> st) {
        initial.push_back(st.first);
        if (st.second) work.push_back(st.first);
    });

    const int sigma_count = static_cast<int>(a.alphabet().size());
    std::vector<Transition> transitions;
    while (!work.empty()) {
        const int id = work.front();
        work.pop_front();
        for (Symbol sigma = 0; sigma < sigma_count; ++sigma) {
            c.for_each_succ(id, sigma, [&](std::pair<int, bool> st) {
                transitions.push_back({id, sigma, st.first});
                if (st.second) work.push_back(st.first);
                if (options.max_transitions && transitions.size() > options.max_transitions)
                    throw Error(ErrorKind::TooLarge, "complement exceeds " +
                                                         std::to_string(options.max_transitions) + " transitions");
            });
        }
    }

    const auto& states = c.states();
    StateList final;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].o.empty()) final.push_back(static_cast<int>(i));
    ComplementResult result;
    result.automaton = Automaton(a.alphabet(), static_cast<int>(states.size()), initial, std::move(transitions),
                                 Acceptance::buchi(final));
    result.ranking = c.ranking();
    result.states = c.take_states();
    return result;
}

bool complement_member(const Automaton& a, const Lasso& l, ComplementKind kind, const ComplementOptions& options) {
    Construction c(a, kind, options);
    FoldedRunGraph word(Automaton(a.alphabet(), 1, {0}, {}, Acceptance::buchi({})), l);
    const int positions = word.positions();
    // Product vertices are (complement state, position) pairs.
    std::unordered_map<long long, int> ids;
    std::vector<std::pair<int, int>> vertex;
    std::vector<std::vector<int>> succ;
    std::deque<int> work;
    auto visit = [&](int state, int p) {
        const long long key = static_cast<long long>(state) * positions + p;
        auto [it, fresh] = ids.try_emplace(key, static_cast<int>(vertex.size()));
        if (fresh) {
            if (options.max_transitions && vertex.size() >= options.max_transitions)
                throw Error(ErrorKind::TooLarge, "lasso product exceeds " +
                                                     std::to_string(options.max_transitions) + " vertices");
            vertex.emplace_back(state, p);
            succ.emplace_back();
            work.push_back(it->second);
        }
        return it->second;
    };
    c.for_each_initial([&](std::pair<int, bool> st) { visit(st.first, 0); });
    while (!work.empty()) {
        const int v = work.front();
        work.pop_front();
        const auto [state, p] = vertex[v];
        c.for_each_succ(state, word.letter(p), [&](std::pair<int, bool> st) {
            int w = visit(st.first, word.next(p));
            succ[v].push_back(w);
        });
    }
    std::vector<char> alive(vertex.size(), 1);
    SccResult scc = strongly_connected(succ, alive);
    for (std::size_t v = 0; v < vertex.size(); ++v)
        if (scc.cyclic[scc.component[v]] && c.states()[vertex[v].first].o.empty()) return true;
    return false;
}

ComplementStats complement_stats(const ComplementResult& result) {
    ComplementStats stats;
    stats.reachable_states = result.states.size();
    stats.transitions = result.automaton.transitions().size();
    stats.final_states = result.automaton.acceptance().final.size();
    for (const auto& st : result.states)
        for (const Rank& r : st.g.ranks) stats.max_rank_width = std::max(stats.max_rank_width, r.size());
    return stats;
}

ComplementStats complement_stats(const Automaton& a, ComplementKind kind, const ComplementOptions& options) {
    return complement_stats(complement(a, kind, options));
}

std::string format_stats(const ComplementStats& stats) {
    return "states=" + std::to_string(stats.reachable_states) + " trans=" + std::to_string(stats.transitions) +
           " final=" + std::to_string(stats.final_states) + " maxwidth=" + std::to_string(stats.max_rank_width);
}

}  // namespace omega
