#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/oracle.hpp"
#include "countlab/reductions.hpp"
#include "countlab/rng.hpp"
#include "countlab/selftest.hpp"
#include "countlab/transforms.hpp"

#include <doctest.h>

using namespace countlab;

TEST_CASE("matching pipeline on tiny fixed instances") {
    ColouredGraph k2 = identity_coloured(make_clique(2));
    CountingOracle oracle = matching_pipeline_oracle(0);
    CHECK(recover_cphom_via_matchings(k2, 0, oracle) == 1);

    Graph k3 = make_clique(3);
    ColouredGraph wrap(k3, make_cycle(6), {0, 1, 2, 0, 1, 2});
    CountingOracle oracle2 = matching_pipeline_oracle(1);
    CHECK(recover_cphom_via_matchings(wrap, 1, oracle2) == count_cp_hom(wrap));
    // every logged query passed its promise
    for (const auto& rec : oracle2.log()) CHECK(rec.promise_ok);
    CHECK(oracle2.log().size() == 64); // one query per fracture of the subdivided triangle
}

TEST_CASE("matching pipeline equals the direct count on random instances") {
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        Graph h = paw_graph();
        ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(4, 7));
        CountingOracle oracle = matching_pipeline_oracle(0);
        CHECK(recover_cphom_via_matchings(cg, 0, oracle) == count_cp_hom(cg));
    }
}

TEST_CASE("pipeline input validation") {
    Graph k3 = make_clique(3);
    // non-surjective colouring
    ColouredGraph partial(k3, Graph(2, {{0, 1}}), {0, 1});
    CountingOracle oracle = matching_pipeline_oracle(0);
    CHECK_THROWS_AS(recover_cphom_via_matchings(partial, 0, oracle), std::invalid_argument);
    // isolated pattern vertex
    Graph lonely(3, {{0, 1}});
    ColouredGraph iso(lonely, Graph(3, {{0, 1}}), {0, 1, 2});
    CountingOracle oracle2 = matching_pipeline_oracle(0);
    CHECK_THROWS_AS(recover_cphom_via_matchings(iso, 0, oracle2), std::invalid_argument);
    CountingOracle oracle3 = indset_pipeline_oracle(iso.host());
    CHECK_THROWS_AS(recover_cphom_via_indsets(iso, 0, oracle3), std::invalid_argument);
}

TEST_CASE("indset pipeline") {
    ColouredGraph k2 = identity_coloured(make_clique(2));
    CountingOracle oracle = indset_pipeline_oracle(k2.host());
    CHECK(recover_cphom_via_indsets(k2, 0, oracle) == 1);

    Graph k3 = make_clique(3);
    ColouredGraph wrap(k3, make_cycle(6), {0, 1, 2, 0, 1, 2});
    CountingOracle oracle2 = indset_pipeline_oracle(lift_colouring(wrap, 1).host());
    CHECK(recover_cphom_via_indsets(wrap, 1, oracle2) == count_cp_hom(wrap));
    for (const auto& rec : oracle2.log()) CHECK(rec.promise_ok);

    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        ColouredGraph cg = random_surjectively_coloured(rng, k3, rng.between(3, 7));
        CountingOracle o = indset_pipeline_oracle(lift_colouring(cg, 1).host());
        CHECK(recover_cphom_via_indsets(cg, 1, o) == count_cp_hom(cg));
    }
}

TEST_CASE("oracle promise violations are rejected and logged") {
    CountingOracle oracle = matching_pipeline_oracle(1);
    // a single subdivided edge of the 4-clique breaks the chain condition
    Graph bad = subdivide_each(make_clique(4), {1, 0, 0, 0, 0, 0});
    OracleQuery q{OracleProblem::colourful_matchings, bad,
                  ColouredGraph(bad, bad, [&] {
                      std::vector<int> id(bad.vertex_count());
                      for (int i = 0; i < bad.vertex_count(); ++i) id[i] = i;
                      return id;
                  }()),
                  std::nullopt,
                  {},
                  7};
    CHECK_THROWS_AS(oracle.ask(q), PromiseError);
    REQUIRE(oracle.log().size() == 1);
    CHECK_FALSE(oracle.log().front().promise_ok);
}

TEST_CASE("inclusion-exclusion uncolouring of matchings") {
    Graph k2 = make_clique(2);
    Rng rng(73);
    ColouredGraph cg = random_surjectively_coloured(rng, k2, 5);
    CountingOracle oracle = brute_force_oracle(OracleProblem::matchings, SubgraphsOf{cg.host()});
    CHECK(colourful_from_uncoloured_matchings(cg, oracle) == BigCount(cg.host().edge_count()));

    Graph k3 = make_clique(3);
    ColouredGraph bottom = fractured_graph(k3, finest_fracture(k3));
    CountingOracle oracle2 = brute_force_oracle(OracleProblem::matchings, SubgraphsOf{bottom.host()});
    CHECK(colourful_from_uncoloured_matchings(bottom, oracle2) == 1);

    for (int t = 0; t < 25; ++t) {
        Graph h = make_clique(3);
        ColouredGraph random_cg = random_surjectively_coloured(rng, h, rng.between(3, 7));
        CountingOracle o = brute_force_oracle(OracleProblem::matchings,
                                              SubgraphsOf{random_cg.host()});
        CHECK(colourful_from_uncoloured_matchings(random_cg, o) ==
              count_colourful_matchings(random_cg));
        for (const auto& rec : o.log()) CHECK(rec.promise_ok);
    }
}

TEST_CASE("inclusion-exclusion uncolouring of independent sets") {
    Graph k1 = make_clique(1);
    Rng rng(79);
    // k = 1: every vertex is a colourful singleton
    ColouredGraph single(k1, make_independent(4), {0, 0, 0, 0});
    CountingOracle oracle = brute_force_oracle(OracleProblem::indsets, SubgraphsOf{single.host()});
    CHECK(colourful_from_uncoloured_indsets(single, oracle) == 4);

    Graph k3 = make_clique(3);
    CountingOracle oracle2 =
        brute_force_oracle(OracleProblem::indsets, SubgraphsOf{identity_coloured(k3).host()});
    CHECK(colourful_from_uncoloured_indsets(identity_coloured(k3), oracle2) == 0);

    for (int t = 0; t < 25; ++t) {
        ColouredGraph cg = random_surjectively_coloured(rng, k3, rng.between(3, 7));
        CountingOracle o = brute_force_oracle(OracleProblem::indsets, SubgraphsOf{cg.host()});
        CHECK(colourful_from_uncoloured_indsets(cg, o) == count_colourful_indsets(cg));
        for (const auto& rec : o.log()) CHECK(rec.promise_ok);
    }
}

TEST_CASE("prescribed homs from an uncoloured hom oracle") {
    Graph k3 = make_clique(3);
    CountingOracle oracle =
        brute_force_oracle(OracleProblem::hom, SubgraphsOf{identity_coloured(k3).host()});
    CHECK(cphom_from_hom(identity_coloured(k3), oracle) == 1);

    Rng rng(83);
    for (int t = 0; t < 25; ++t) {
        Graph h = random_graph(rng, rng.between(2, 5));
        ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 7));
        CountingOracle o = brute_force_oracle(OracleProblem::hom, SubgraphsOf{cg.host()});
        CHECK(cphom_from_hom(cg, o) == count_cp_hom(cg));
        for (const auto& rec : o.log()) CHECK(rec.promise_ok);
    }
}

TEST_CASE("wall lift") {
    Graph wall = make_wall(2, 2);
    // uniform divisors coincide with the plain lift
    Rng rng(89);
    ColouredGraph cg = random_surjectively_coloured(rng, wall, 6);
    WallLift uniform = wall_lift(2, {1, 1, 1, 1}, 2, cg);
    CHECK(uniform.coloured == lift_colouring(cg, 2));
    CHECK(uniform.wall == subdivide(wall, 2));

    // identity colouring, mixed divisors: exactly one prescribed map remains
    WallLift mixed = wall_lift(2, {1, 2, 1, 2}, 1, identity_coloured(wall));
    CHECK(count_cp_hom(mixed.coloured) == 1);
    CHECK(count_cp_hom(identity_coloured(wall)) == 1);

    // wrap-coloured 8-cycle host: counts agree before and after lifting
    ColouredGraph wrap(wall, make_cycle(8), {0, 1, 3, 2, 0, 1, 3, 2});
    for (int t = 0; t < 10; ++t) {
        std::vector<int> divisors(4);
        for (int& d : divisors) d = rng.between(1, 3);
        WallLift lift = wall_lift(2, divisors, rng.between(1, 2), wrap);
        CHECK(count_cp_hom(lift.coloured) == count_cp_hom(wrap));
    }

    CHECK_THROWS_AS(wall_lift(2, {1, 1, 1}, 1, cg), std::invalid_argument);
    CHECK_THROWS_AS(wall_lift(2, {1, 1, 1, 1}, 0, cg), std::invalid_argument);
    ColouredGraph not_wall = identity_coloured(make_clique(3));
    CHECK_THROWS_AS(wall_lift(2, {1, 1, 1, 1}, 1, not_wall), std::invalid_argument);
}

TEST_CASE("reduction trace lines") {
    Graph k3 = make_clique(3);
    ColouredGraph wrap(k3, make_cycle(6), {0, 1, 2, 0, 1, 2});
    CountingOracle oracle = matching_pipeline_oracle(0);
    recover_cphom_via_matchings(wrap, 0, oracle);
    REQUIRE(oracle.log().size() == 8);
    for (const auto& rec : oracle.log()) {
        auto line = rec.to_line();
        CHECK(line.find(" ok ") != std::string::npos);
        CHECK(line.size() > 20);
    }
}
