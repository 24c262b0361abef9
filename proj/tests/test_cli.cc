#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "omega/cli.hh"
#include "omega/oaf.hh"
#include "suite.hh"

using namespace omega;

namespace {

const std::filesystem::path corpus_dir = OMEGA_CORPUS_DIR;
const std::filesystem::path data_dir = OMEGA_DATA_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return (corpus_dir / name).string(); }
std::string data(const std::string& name) { return (data_dir / name).string(); }

/// A file under the temporary directory, removed on destruction.
class TempFile {
public:
    TempFile(const std::string& name, const std::string& text)
        : path_(std::filesystem::temp_directory_path() / ("omega_cli_" + name)) {
        std::ofstream(path_, std::ios::binary) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("xorcheck holds for the one-state universal automaton", "[cli]") {
    auto r = invoke({"xorcheck", corpus("01_buchi_minimal.oaf"), "--stem", "2", "--cycle", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "xor holds on 6 lassos (states=4 trans=6 final=2 maxwidth=1)\n");
}

TEST_CASE("xorcheck holds for random suite automata of every kind", "[cli]") {
    std::mt19937 rng(4242);
    int index = 0;
    for (AcceptanceType type : {AcceptanceType::buchi, AcceptanceType::gbuchi, AcceptanceType::streett,
                                AcceptanceType::parity}) {
        for (int draw = 0; draw < 3; ++draw) {
            Automaton a = testing::random_automaton(rng, testing::random_shape(rng, type, 2, 2));
            TempFile file("xor_" + std::to_string(index++) + ".oaf", serialize_oaf(a));
            auto r = invoke({"xorcheck", file.path(), "--stem", "2", "--cycle", "2"});
            INFO(serialize_oaf(a) << r.out << r.err);
            CHECK(r.code == exit_ok);
            CHECK(r.out.rfind("xor holds on ", 0) == 0);
        }
    }
}

TEST_CASE("xorcheck honours an explicit kind", "[cli]") {
    auto r = invoke({"xorcheck", corpus("10_streett_member.oaf"), "--kind", "streett_baseline", "--stem", "2",
                     "--cycle", "2"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("xor holds on 6 lassos", 0) == 0);
}

TEST_CASE("equiv reports agreement and the first differing lasso", "[cli]") {
    auto same = invoke({"equiv", corpus("02_buchi_comments.oaf"), corpus("02_buchi_comments.canon")});
    CHECK(same.code == exit_ok);
    CHECK(same.out == "equivalent on 210 lassos\n");

    auto differ = invoke({"equiv", corpus("16_parity_one.oaf"), corpus("02_buchi_comments.oaf")});
    CHECK(differ.code == exit_violation);
    CHECK(differ.out == "differ on ;a b: first=true second=false\n");

    auto alphabets = invoke({"equiv", corpus("01_buchi_minimal.oaf"), corpus("03_buchi_empty_final.oaf")});
    CHECK(alphabets.code == exit_usage);
    CHECK(alphabets.err == "error: InvalidArgs: the automata use different alphabets\n");
}

TEST_CASE("member prints the verdict", "[cli]") {
    CHECK(invoke({"member", corpus("10_streett_member.oaf"), "--lasso", ";a"}).out == "true\n");
    CHECK(invoke({"member", corpus("02_buchi_comments.oaf"), "--lasso", ";a"}).out == "false\n");
    auto bad = invoke({"member", corpus("02_buchi_comments.oaf"), "--lasso", "a;z"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.rfind("error: ", 0) == 0);
}

TEST_CASE("complement writes an automaton with state descriptions", "[cli]") {
    auto r = invoke({"complement", corpus("01_buchi_minimal.oaf")});
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "oaf 1\n"
          "alphabet a\n"
          "states 4\n"
          "initial 0 1\n"
          "acceptance buchi\n"
          "final 0 1\n"
          "trans 0 a 2\n"
          "trans 1 a 2\n"
          "trans 1 a 3\n"
          "trans 2 a 2\n"
          "trans 3 a 2\n"
          "trans 3 a 3\n"
          "end\n"
          "# 0 S={0} O={} g=[0:0]\n"
          "# 1 S={0} O={} g=[0:2]\n"
          "# 2 S={0} O={0} g=[0:0]\n"
          "# 3 S={0} O={0} g=[0:2]\n");
    // The output parses back as a document (descriptions are comments).
    CHECK(parse_oaf(r.out).state_count() == 4);
}

TEST_CASE("complement --stats and --max-states", "[cli]") {
    auto r = invoke({"complement", corpus("10_streett_member.oaf"), "--stats"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "states=30 trans=276 final=3 maxwidth=2\n");

    auto capped = invoke({"complement", corpus("10_streett_member.oaf"), "--max-states", "5"});
    CHECK(capped.code == exit_usage);
    CHECK(capped.err.rfind("error: TooLarge: ", 0) == 0);

    auto incompatible = invoke({"complement", corpus("10_streett_member.oaf"), "--kind", "buchi"});
    CHECK(incompatible.code == exit_usage);
    CHECK(incompatible.err.rfind("error: IncompatibleKind: ", 0) == 0);
}

TEST_CASE("complement -o writes the file", "[cli]") {
    TempFile target("complement_out.oaf", "");
    auto r = invoke({"complement", corpus("01_buchi_minimal.oaf"), "-o", target.path()});
    CHECK(r.code == exit_ok);
    std::ifstream in(target.path());
    std::ostringstream text;
    text << in.rdbuf();
    CHECK(parse_oaf(text.str()).state_count() == 4);
}

TEST_CASE("rank prints a verified odd ranking for a rejected word", "[cli]") {
    auto r = invoke({"rank", corpus("02_buchi_comments.oaf"), "--lasso", ";a"});
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "kind cobuchi\n"
          "# rank 0 {1@0}\n"
          "# rank 1 {0@0}\n"
          "0@0 1\n"
          "1@0 0\n"
          "valid=true odd=true\n");

    auto parity = invoke({"rank", corpus("16_parity_one.oaf"), "--lasso", ";a"});
    CHECK(parity.code == exit_ok);
    CHECK(parity.out.rfind("kind parity\n", 0) == 0);
    CHECK(parity.out.find("valid=true odd=true\n") != std::string::npos);
}

TEST_CASE("rank explains that accepted words have no odd ranking", "[cli]") {
    auto r = invoke({"rank", corpus("10_streett_member.oaf"), "--lasso", ";a"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "kind mu_r\nno odd ranking: the word is accepted\n");
}

TEST_CASE("its prints the tree with covered state sets", "[cli]") {
    auto r = invoke({"its", "--pairs", data("four_sets.oaf")});
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "nodes=10 leaves=4 height=3\n"
          "2: {0}\n"
          "  1: {0,1}\n"
          "    3: {0,1,2}\n"
          "  4: {0,2}\n"
          "    1: {0,1,2}\n"
          "4: {2}\n"
          "  2: {0,2}\n"
          "    1: {0,1,2}\n"
          "  3: {1,2}\n"
          "    1: {0,1,2}\n");
}

TEST_CASE("bounds prints the TOP bound and optionally the ITS size", "[cli]") {
    CHECK(invoke({"bounds", "2", "1"}).out == "top_bound=6\n");
    auto r = invoke({"bounds", "3", "4", "--pairs", data("four_sets.oaf")});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "top_bound=20247\nits_size=10\n");
    CHECK(invoke({"bounds", "0", "1"}).code == exit_usage);
}

TEST_CASE("parse and validation errors exit with the usage code", "[cli]") {
    auto parse = invoke({"member", data("broken.oaf"), "--lasso", ";a"});
    CHECK(parse.code == exit_usage);
    CHECK(parse.err.find("line 7, column 11: state 9 out of range [0..1]") != std::string::npos);

    TempFile invalid("invalid.oaf",
                     "oaf 1\nalphabet a\nstates 2\ninitial\nacceptance buchi\nfinal 0\nend\n");
    auto validation = invoke({"member", invalid.path(), "--lasso", ";a"});
    CHECK(validation.code == exit_usage);
    CHECK(validation.err.find("EmptyInitial") != std::string::npos);

    auto missing = invoke({"member", data("no_such_file.oaf"), "--lasso", ";a"});
    CHECK(missing.code == exit_usage);
}

TEST_CASE("usage errors exit with the usage code", "[cli]") {
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"frobnicate"}).code == exit_usage);
    CHECK(invoke({"complement", corpus("01_buchi_minimal.oaf"), "--kind", "safra"}).code == exit_usage);
    CHECK(invoke({"member", corpus("01_buchi_minimal.oaf")}).code == exit_usage);
    CHECK(invoke({"--help"}).code == exit_ok);
}
