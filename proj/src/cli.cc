#include "omega/cli.hh"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "omega/complement.hh"
#include "omega/its.hh"
#include "omega/lasso.hh"
#include "omega/oaf.hh"
#include "omega/rank_assign.hh"
#include "omega/top.hh"

namespace omega {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgs, "cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Automaton load(const std::string& path) {
    try {
        return parse_oaf(read_file(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what(), e.line(), e.column());
    }
}

std::string vertex_name(const FoldedRunGraph& g, int v) {
    return std::to_string(g.state_of(v)) + "@" + std::to_string(g.position_of(v));
}

struct Options {
    std::string input, second, output, lasso, pairs;
    std::string kind = "auto";
    bool stats = false;
    int max_stem = 3, max_cycle = 3;
    std::size_t max_states = 0;
    int n = 0, k = 0;
};

int do_complement(const Options& o, std::ostream& out) {
    Automaton a = load(o.input);
    ComplementResult result = complement(a, parse_complement_kind(o.kind), {o.max_states, 0});
    std::string text = serialize_oaf(result.automaton);
    for (std::size_t i = 0; i < result.states.size(); ++i)
        text += "# " + std::to_string(i) + " " + format_state(result.states[i]) + "\n";
    if (!o.output.empty()) {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) throw Error(ErrorKind::InvalidArgs, "cannot write '" + o.output + "'");
        file << text;
    } else if (!o.stats) {
        out << text;
    }
    if (o.stats) out << format_stats(complement_stats(result)) << "\n";
    return exit_ok;
}

int do_member(const Options& o, std::ostream& out) {
    Automaton a = load(o.input);
    out << (member(a, parse_lasso(o.lasso, a.alphabet())) ? "true" : "false") << "\n";
    return exit_ok;
}

int do_equiv(const Options& o, std::ostream& out) {
    Automaton a = load(o.input);
    Automaton b = load(o.second);
    if (a.alphabet() != b.alphabet()) throw Error(ErrorKind::InvalidArgs, "the automata use different alphabets");
    std::size_t checked = 0;
    std::optional<Lasso> witness;
    for_each_lasso(static_cast<int>(a.alphabet().size()), o.max_stem, o.max_cycle, [&](const Lasso& l) {
        ++checked;
        if (member(a, l) != member(b, l)) witness = l;
        return !witness;
    });
    if (witness) {
        out << "differ on " << format_lasso(*witness, a.alphabet()) << ": first=" << std::boolalpha
            << member(a, *witness) << " second=" << member(b, *witness) << "\n";
        return exit_violation;
    }
    out << "equivalent on " << checked << " lassos\n";
    return exit_ok;
}

int do_xorcheck(const Options& o, std::ostream& out) {
    Automaton a = load(o.input);
    ComplementResult result = complement(a, parse_complement_kind(o.kind), {o.max_states, 0});
    std::size_t checked = 0;
    std::optional<Lasso> witness;
    for_each_lasso(static_cast<int>(a.alphabet().size()), o.max_stem, o.max_cycle, [&](const Lasso& l) {
        ++checked;
        if (member(a, l) == member(result.automaton, l)) witness = l;
        return !witness;
    });
    if (witness) {
        out << "xor violated on " << format_lasso(*witness, a.alphabet()) << ": source=" << std::boolalpha
            << member(a, *witness) << " complement=" << member(result.automaton, *witness) << "\n";
        return exit_violation;
    }
    out << "xor holds on " << checked << " lassos (" << format_stats(complement_stats(result)) << ")\n";
    return exit_ok;
}

int do_rank(const Options& o, std::ostream& out) {
    Automaton a = load(o.input);
    Lasso l = parse_lasso(o.lasso, a.alphabet());
    Ranker ranker(a, ranking_for(a, parse_complement_kind(o.kind)));
    FoldedRunGraph graph(a, l);
    const bool accepted = member(a, l);
    auto f = assign_ranking(graph, ranker.spec());
    out << "kind " << to_string(ranker.kind()) << "\n";
    if (!f) {
        out << "no odd ranking: the word is " << (accepted ? "accepted" : "rejected") << "\n";
        return accepted ? exit_ok : exit_violation;
    }
    for (const std::string& line : f->log) out << "# " << line << "\n";
    for (int v : graph.vertices()) out << vertex_name(graph, v) << " " << format_rank(f->rank[v]) << "\n";
    Verification check = verify_ranking(graph, *f, ranker);
    out << "valid=" << std::boolalpha << check.valid << " odd=" << check.odd << "\n";
    for (const std::string& v : check.violations) out << "violation: " << v << "\n";
    if (accepted) out << "ranking found for an accepted word\n";
    return check.valid && check.odd && !accepted ? exit_ok : exit_violation;
}

std::vector<StateList> pairs_b(const std::string& path) {
    Automaton a = load(path);
    const Acceptance& acc = a.acceptance();
    if (acc.type == AcceptanceType::buchi) return {acc.final};
    return acc.b;
}

int do_its(const Options& o, std::ostream& out) {
    Automaton a = load(o.pairs);
    std::vector<StateList> b = pairs_b(o.pairs);
    ItsTree tree = build_its(a.state_count(), static_cast<int>(b.size()), b);
    out << "nodes=" << tree.size() << " leaves=" << tree.leaf_count() << " height=" << tree.height() << "\n";
    for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
        const IndexTuple& path = tree.nodes[i].path;
        out << std::string(2 * (path.size() - 1), ' ') << path.back() << ": {";
        const StateList named = covered_states(path, b);
        for (std::size_t j = 0; j < named.size(); ++j) out << (j ? "," : "") << named[j];
        out << "}\n";
    }
    return exit_ok;
}

int do_bounds(const Options& o, std::ostream& out) {
    if (o.n < 1 || o.k < 1) throw Error(ErrorKind::InvalidArgs, "n and k must be at least 1");
    out << "top_bound=" << top_bound(o.n, o.k) << "\n";
    if (!o.pairs.empty()) {
        Automaton a = load(o.pairs);
        std::vector<StateList> b = pairs_b(o.pairs);
        if (a.state_count() != o.n || static_cast<int>(b.size()) != o.k)
            throw Error(ErrorKind::InvalidArgs, "pairs file has n=" + std::to_string(a.state_count()) +
                                                    " k=" + std::to_string(b.size()));
        out << "its_size=" << build_its(o.n, o.k, b).size() << "\n";
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-based complementation of omega-automata", "omega"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> kinds{"auto", "buchi", "gbuchi", "streett_baseline", "streett_mu_r", "parity"};

    auto* complement_cmd = app.add_subcommand("complement", "Complement an automaton into a Büchi automaton");
    complement_cmd->add_option("input", o.input, "OAF file")->required();
    complement_cmd->add_option("-o,--output", o.output, "Write the complement here");
    complement_cmd->add_option("--kind", o.kind, "Complementation kind")->check(CLI::IsMember(kinds));
    complement_cmd->add_flag("--stats", o.stats, "Print reachable-state statistics");
    complement_cmd->add_option("--max-states", o.max_states, "Abort past this many states (0 = no limit)");

    auto* member_cmd = app.add_subcommand("member", "Decide membership of a lasso word");
    member_cmd->add_option("input", o.input, "OAF file")->required();
    member_cmd->add_option("--lasso", o.lasso, "Lasso 'stem;cycle'")->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "Compare two automata on all bounded lassos");
    equiv_cmd->add_option("first", o.input, "OAF file")->required();
    equiv_cmd->add_option("second", o.second, "OAF file")->required();
    equiv_cmd->add_option("--stem", o.max_stem, "Maximum stem length")->check(CLI::NonNegativeNumber);
    equiv_cmd->add_option("--cycle", o.max_cycle, "Maximum cycle length")->check(CLI::PositiveNumber);

    auto* xor_cmd = app.add_subcommand("xorcheck", "Check that exactly one of an automaton and its complement "
                                                   "accepts each bounded lasso");
    xor_cmd->add_option("input", o.input, "OAF file")->required();
    xor_cmd->add_option("--kind", o.kind, "Complementation kind")->check(CLI::IsMember(kinds));
    xor_cmd->add_option("--stem", o.max_stem, "Maximum stem length")->check(CLI::NonNegativeNumber);
    xor_cmd->add_option("--cycle", o.max_cycle, "Maximum cycle length")->check(CLI::PositiveNumber);
    xor_cmd->add_option("--max-states", o.max_states, "Abort past this many states (0 = no limit)");

    auto* rank_cmd = app.add_subcommand("rank", "Assign and verify a ranking of a lasso's run graph");
    rank_cmd->add_option("input", o.input, "OAF file")->required();
    rank_cmd->add_option("--lasso", o.lasso, "Lasso 'stem;cycle'")->required();
    rank_cmd->add_option("--kind", o.kind, "Complementation kind selecting the ranking")
        ->check(CLI::IsMember(kinds));

    auto* its_cmd = app.add_subcommand("its", "Print the increasing tree of sets for an automaton's B sets");
    its_cmd->add_option("--pairs", o.pairs, "OAF file supplying n and B")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Print the tree-of-ordered-partitions bound");
    bounds_cmd->add_option("n", o.n, "State count")->required();
    bounds_cmd->add_option("k", o.k, "Index count")->required();
    bounds_cmd->add_option("--pairs", o.pairs, "OAF file supplying B for the ITS size");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*complement_cmd) return do_complement(o, out);
        if (*member_cmd) return do_member(o, out);
        if (*equiv_cmd) return do_equiv(o, out);
        if (*xor_cmd) return do_xorcheck(o, out);
        if (*rank_cmd) return do_rank(o, out);
        if (*its_cmd) return do_its(o, out);
        if (*bounds_cmd) return do_bounds(o, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace omega
