#include <random>

#include "matchers.hh"
#include "omega/rank_assign.hh"
#include "suite.hh"

using namespace omega;

namespace {

Automaton loop(Acceptance acc) { return Automaton({"a"}, 1, {0}, {{0, 0, 0}}, std::move(acc)); }

}  // namespace

TEST_CASE("acyclic graphs rank every vertex 0") {
    Automaton a({"a"}, 3, {0}, {{0, 0, 1}, {1, 0, 2}}, Acceptance::buchi({0}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    auto f = assign_base_ranking(g, BaseCondition::cobuchi({0}));
    REQUIRE(f);
    for (int v : g.vertices()) CHECK(f->rank[v] == Rank{{0, 0}});

    Automaton s({"a"}, 3, {0}, {{0, 0, 1}, {1, 0, 2}}, Acceptance::streett({{0}}, {{1}}));
    auto t = assign_tuple_ranking(folded_run_graph(s, Lasso{{}, {0}}), rank_spec(s, RankKind::mu_r));
    REQUIRE(t);
    for (int v : g.vertices()) CHECK(t->rank[v] == Rank{{0, 0}});
}

TEST_CASE("a free self-loop gets rank 1") {
    Automaton a = loop(Acceptance::buchi({}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    auto f = assign_base_ranking(g, BaseCondition::cobuchi({}));
    REQUIRE(f);
    CHECK(f->rank[0] == Rank{{1, 0}});
}

TEST_CASE("an accepting self-loop has no ranking") {
    Automaton a = loop(Acceptance::buchi({0}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    CHECK(member(a, Lasso{{}, {0}}));
    CHECK_FALSE(assign_base_ranking(g, BaseCondition::cobuchi({0})));
}

TEST_CASE("gc ranking picks the smallest free index") {
    Automaton a({"a"}, 1, {0}, {{0, 0, 0}}, Acceptance::gbuchi({{0}, {}, {}}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    auto f = assign_base_ranking(g, BaseCondition::gc(a.acceptance().b));
    REQUIRE(f);
    CHECK(f->rank[0] == Rank{{1, 2}});
}

TEST_CASE("mu_gc ranking restricts indices to mini") {
    const std::vector<StateList> b{{0}, {1}};
    Automaton a({"a"}, 2, {0}, {{0, 0, 0}}, Acceptance::gbuchi(b));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    auto f = assign_base_ranking(g, BaseCondition::mu_gc(b, {1}));
    REQUIRE(f);
    CHECK(f->rank[0] == Rank{{1, 2}});
}

TEST_CASE("mu_r on a single G-state") {
    Automaton a = loop(Acceptance::streett({{0}}, {{}}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    auto f = assign_tuple_ranking(g, rank_spec(a, RankKind::mu_r));
    REQUIRE(f);
    CHECK(f->rank[0] == Rank{{1, 1}, {0, 0}});
    Ranker ranker(a, RankKind::mu_r);
    auto check = verify_ranking(g, *f, ranker);
    CHECK(check.valid);
    CHECK(check.odd);
}

TEST_CASE("parity ranking fails on an accepted cycle") {
    Automaton a({"a"}, 2, {0}, {{0, 0, 1}, {1, 0, 0}}, Acceptance::parity({{0, 1}}, {{0}}));
    const Lasso l{{}, {0}};
    REQUIRE(member(a, l));
    CHECK_FALSE(assign_tuple_ranking(folded_run_graph(a, l), rank_spec(a, RankKind::parity)));
}

TEST_CASE("verify_ranking flags increasing edges") {
    Automaton a({"a"}, 2, {0}, {{0, 0, 1}, {1, 0, 1}}, Acceptance::buchi({}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    GraphRanking f;
    f.kind = RankKind::cobuchi;
    f.rank.assign(g.vertex_capacity(), {});
    for (int v : g.vertices()) f.rank[v] = Rank{{g.state_of(v) == 0 ? 1 : 3, 0}};
    Ranker ranker(a, RankKind::cobuchi);
    auto check = verify_ranking(g, f, ranker);
    CHECK_FALSE(check.valid);
    REQUIRE_FALSE(check.violations.empty());
    CHECK(check.violations.front().find("edge") != std::string::npos);
}

TEST_CASE("verify_ranking reports all-zero rankings on cycles as not odd") {
    Automaton a = loop(Acceptance::buchi({}));
    FoldedRunGraph g(a, Lasso{{}, {0}});
    GraphRanking f;
    f.rank.assign(g.vertex_capacity(), Rank{{0, 0}});
    auto check = verify_ranking(g, f, Ranker(a, RankKind::cobuchi));
    CHECK(check.valid);
    CHECK_FALSE(check.odd);
}

TEST_CASE("assigned rankings agree with membership on random automata") {
    std::mt19937 rng(31);
    const AcceptanceType types[] = {AcceptanceType::buchi, AcceptanceType::gbuchi, AcceptanceType::streett,
                                    AcceptanceType::parity};
    for (int round = 0; round < 40; ++round) {
        const AcceptanceType type = types[round % 4];
        Automaton a = testing::random_automaton(rng, testing::random_shape(rng, type, 4, 3));
        std::vector<RankKind> kinds;
        switch (type) {
        case AcceptanceType::buchi: kinds = {RankKind::cobuchi, RankKind::gc}; break;
        case AcceptanceType::gbuchi: kinds = {RankKind::gc}; break;
        case AcceptanceType::streett: kinds = {RankKind::mu_r, RankKind::rabin}; break;
        default: kinds = {RankKind::parity, RankKind::mu_r, RankKind::rabin}; break;
        }
        for (RankKind kind : kinds) {
            Ranker ranker(a, kind);
            const int mu = std::min(a.state_count(), ranker.spec().k());
            for (const Lasso& l : testing::bounded_lassos()) {
                FoldedRunGraph g(a, l);
                auto f = assign_ranking(g, ranker.spec());
                INFO("round " << round << " kind " << to_string(kind) << " lasso " << format_lasso(l, a.alphabet()));
                REQUIRE(member(a, l) == !f.has_value());
                if (!f) continue;
                auto check = verify_ranking(g, *f, ranker);
                REQUIRE(check.valid);
                REQUIRE(check.odd);
                for (int v : g.vertices()) {
                    for (int w : g.successors(v)) CHECK(f->rank[v][0].r >= f->rank[w][0].r);
                    const std::size_t width = f->rank[v].size();
                    if (kind == RankKind::mu_r) {
                        bool empty_b = false;
                        for (const auto& s : ranker.spec().b) empty_b = empty_b || s.empty();
                        if (!empty_b) CHECK(static_cast<int>(width) <= mu + 1);
                    } else {
                        CHECK(static_cast<int>(width) <= ranker.spec().k() + 1);
                    }
                }
            }
        }
    }
}
