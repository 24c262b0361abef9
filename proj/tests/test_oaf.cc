#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "matchers.hh"
#include "omega/oaf.hh"
#include "suite.hh"

using namespace omega;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// Returns the error of parsing `text`, failing the test if none is thrown.
Error parse_error(const std::string& text) {
    try {
        parse_oaf(text);
    } catch (const Error& e) {
        return e;
    }
    FAIL("document parsed without error");
    return Error(ErrorKind::SyntaxError, "unreachable");
}

const std::string header = "oaf 1\nalphabet a b\nstates 2\ninitial 0\n";

}  // namespace

TEST_CASE("parse_oaf reads a minimal Büchi document") {
    Automaton a = parse_oaf("oaf 1\nalphabet a\nstates 1\ninitial 0\nacceptance buchi\nfinal 0\ntrans 0 a 0\nend\n");
    CHECK(a.state_count() == 1);
    CHECK(a.acceptance() == Acceptance::buchi({0}));
    CHECK(a.transitions() == std::vector<Transition>{{0, 0, 0}});
}

TEST_CASE("the corpus round-trips to its canonical forms") {
    namespace fs = std::filesystem;
    int documents = 0;
    for (const auto& entry : fs::directory_iterator(OMEGA_CORPUS_DIR)) {
        if (entry.path().extension() != ".oaf") continue;
        ++documents;
        fs::path canon_path = entry.path();
        canon_path.replace_extension(".canon");
        INFO(entry.path().filename().string());
        const std::string doc = slurp(entry.path());
        const std::string canon = slurp(canon_path);
        Automaton a = parse_oaf(doc);
        CHECK(serialize_oaf(a) == canon);
        CHECK(parse_oaf(canon) == a);
        CHECK(serialize_oaf(parse_oaf(canon)) == canon);
    }
    CHECK(documents == 20);
}

TEST_CASE("serialize_oaf round-trips random automata") {
    std::mt19937 rng(13);
    const AcceptanceType types[] = {AcceptanceType::buchi, AcceptanceType::gbuchi, AcceptanceType::streett,
                                    AcceptanceType::rabin, AcceptanceType::parity};
    for (int round = 0; round < 50; ++round) {
        Automaton a = testing::random_automaton(rng, testing::random_shape(rng, types[round % 5], 4, 3));
        CHECK(parse_oaf(serialize_oaf(a)) == a);
    }
}

TEST_CASE("parse_oaf surfaces chain violations with their line") {
    const std::string doc = header + "acceptance parity 2\npair 1 G 0 1\npair 1 B 0\n"
                                     "pair 2 G 0 1\npair 2 B 0 1\ntrans 0 a 1\nend\n";
    Error e = parse_error(doc);
    CHECK(e.kind() == ErrorKind::ValidationFailed);
    CHECK(e.line() == 8);
    CHECK(std::string(e.what()).find("ChainViolation") != std::string::npos);
}

TEST_CASE("parse_oaf surfaces duplicate B sets") {
    Error e = parse_error(header + "acceptance streett 2\npair 1 G 0\npair 1 B 1\npair 2 G 1\npair 2 B 1\nend\n");
    CHECK(e.kind() == ErrorKind::ValidationFailed);
    CHECK(std::string(e.what()).find("DuplicateB") != std::string::npos);
}

TEST_CASE("parse_oaf reports syntax errors with line and column") {
    struct Case {
        std::string text;
        int line, column;
    };
    const std::vector<Case> cases{
        {"", 1, 1},
        {"oaf 2\n", 1, 5},
        {"oaf 1\nalphabet\n", 2, 9},
        {"oaf 1\nalphabet a a\n", 2, 12},
        {"oaf 1\nalphabet a\nstates x\n", 3, 8},
        {"oaf 1\nalphabet a\nstates 0\n", 3, 8},
        {header + "acceptance muller\n", 5, 12},
        {header + "acceptance buchi\nfinal 7\n", 6, 7},
        {header + "acceptance buchi\nfinal 0 0\n", 6, 9},
        {header + "acceptance streett 1\npair 1 X 0\n", 6, 8},
        {header + "acceptance streett 1\npair 2 G 0\n", 6, 6},
        {header + "acceptance streett 1\npair 1 G 0\npair 1 G 1\n", 7, 8},
        {header + "acceptance gbuchi 1\nset 1 0\ntrans 0 c 1\nend\n", 7, 9},
        {header + "acceptance gbuchi 1\nset 1 0\ntrans 0 a\nend\n", 7, 10},
        {header + "acceptance gbuchi 1\nset 1 0\ntrans 0 a 1\n", 8, 1},
        {header + "acceptance gbuchi 1\nset 1 0\nend\ntrans 0 a 1\n", 8, 1},
        {"alphabet a\n", 1, 1},
    };
    for (const Case& c : cases) {
        INFO(c.text);
        Error e = parse_error(c.text);
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(e.line() == c.line);
        CHECK(e.column() == c.column);
    }
}

TEST_CASE("parse_oaf reports an empty initial set") {
    Error e = parse_error("oaf 1\nalphabet a\nstates 1\ninitial\nacceptance buchi\nfinal\nend\n");
    CHECK(e.kind() == ErrorKind::ValidationFailed);
    CHECK(e.line() == 4);
}
