#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/hom_td.hpp"
#include "countlab/rng.hpp"
#include "countlab/selftest.hpp"
#include "countlab/transforms.hpp"
#include "countlab/treewidth.hpp"

#include <doctest.h>

using namespace countlab;

TEST_CASE("homomorphism counts") {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, rng.between(1, 7));
        CHECK(count_hom(make_clique(2), g) == BigCount(2 * g.edge_count()));
    }
    // odd cycle into bipartite hosts
    CHECK(count_hom(make_clique(3), make_grid(3)) == 0);
    CHECK(count_hom(make_path(3), make_clique(3)) == 12);
    CHECK_THROWS_AS(count_hom(make_grid(3), make_clique(3)), GuardError);
}

TEST_CASE("colour-prescribed counts") {
    Graph k3 = make_clique(3);
    CHECK(count_cp_hom(identity_coloured(k3)) == 1);
    CHECK(count_cp_hom(identity_coloured(paw_graph())) == 1);

    // prescribed triangle maps need a host triangle; the hexagon has none
    ColouredGraph wrap(k3, make_cycle(6), {0, 1, 2, 0, 1, 2});
    CHECK(count_cp_hom(wrap) == 0);

    // two disjoint wrapped triangles admit exactly the two copy maps
    ColouredGraph twins(k3, Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}),
                        {0, 1, 2, 0, 1, 2});
    CHECK(count_cp_hom(twins) == 2);

    // empty colour class forces zero
    ColouredGraph missing(k3, Graph(2, {{0, 1}}), {0, 1});
    CHECK_FALSE(missing.surjective());
    CHECK(count_cp_hom(missing) == 0);

    // the wrapped hexagon has exactly two colour-preserving self-maps
    CHECK(coloured_hom_count(wrap, wrap) == 2);
}

TEST_CASE("subgraph and induced subgraph counts") {
    Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, rng.between(1, 7));
        CHECK(count_sub(make_clique(2), g) == BigCount(g.edge_count()));
    }
    CHECK(count_sub(make_matching(2), make_path(4)) == 1);
    CHECK(count_indsub(make_clique(2), make_path(3)) == 2);
    CHECK(count_indsub(make_independent(2), make_clique(3)) == 0);
    CHECK(count_indsub(make_path(3), make_cycle(6)) == 6);
}

TEST_CASE("matching and independent set counts") {
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng, rng.between(1, 8));
        CHECK(count_matchings(g, 1) == BigCount(g.edge_count()));
        CHECK(count_indsets(g, 1) == BigCount(g.vertex_count()));
    }
    CHECK(count_indsets(make_clique(5), 2) == 0);
    CHECK(count_matchings(make_cycle(6), 3) == 2);
    CHECK(count_matchings(make_cycle(6), 2) == 9);
    CHECK(count_indsets(make_cycle(6), 3) == 2);
    CHECK_THROWS_AS(count_matchings(make_grid(4), 8, 1000), GuardError);
}

TEST_CASE("colourful counts") {
    Graph k2 = make_clique(2);
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        ColouredGraph cg = random_surjectively_coloured(rng, k2, rng.between(2, 6));
        CHECK(count_colourful_matchings(cg) == BigCount(cg.host().edge_count()));
        CHECK(count_colourful_indsets(edge_subgraph(k2, EdgeSubset::none())) == 1);
    }
    Graph k3 = make_clique(3);
    CHECK(count_colourful_matchings(fractured_graph(k3, finest_fracture(k3))) == 1);
    CHECK(count_colourful_matchings(identity_coloured(k3)) == 0);
    CHECK(count_colourful_indsets(identity_coloured(k3)) == 0);
    CHECK(count_colourful_indsets(edge_subgraph(k3, EdgeSubset::none())) == 1);

    // colourful = per-class product when the pattern is edgeless
    ColouredGraph spread(make_independent(2), make_independent(5), {0, 0, 1, 1, 1});
    CHECK(count_colourful_indsets(spread) == 6);
}

TEST_CASE("automorphisms and isomorphism") {
    CHECK(automorphism_count(make_clique(4)) == 24);
    CHECK(automorphism_count(make_path(3)) == 2);
    CHECK(automorphism_count(make_cycle(6)) == 12);
    CHECK(automorphism_count(make_matching(3)) == 48);
    CHECK(are_isomorphic(make_cycle(4), make_wall(2, 2)));
    CHECK_FALSE(are_isomorphic(make_path(4), make_matching(2)));
    CHECK_THROWS_AS(automorphism_count(make_grid(4)), GuardError);
}

TEST_CASE("treewidth DP counter matches the direct counter") {
    Graph p3 = make_path(3);
    auto [w1, td1] = treewidth_exact(p3);
    CHECK(w1 == 1);
    CHECK(count_hom_td(p3, td1, make_clique(3)) == 12);

    Graph k3 = make_clique(3);
    auto [w2, td2] = treewidth_exact(k3);
    CHECK(w2 == 2);
    CHECK(count_hom_td(k3, td2, make_grid(3)) == 0);

    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        Graph h = random_graph(rng, rng.between(1, 6));
        Graph g = random_graph(rng, rng.between(1, 8));
        auto [w, td] = treewidth_exact(h);
        CHECK(count_hom_td(h, td, g) == count_hom(h, g));
    }
    // trees against the direct counter
    for (int t = 0; t < 20; ++t) {
        Graph h = random_tree(rng, rng.between(1, 6));
        Graph g = random_graph(rng, rng.between(1, 7));
        auto [w, td] = treewidth_exact(h);
        CHECK(count_hom_td(h, td, g) == count_hom(h, g));
    }
    // rejects invalid decompositions
    CHECK_THROWS_AS(count_hom_td(p3, TreeDecomposition{{{0, 1}}, {}}, make_clique(3)),
                    std::invalid_argument);
}

TEST_CASE("tensor multiplicativity via the kernel") {
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
        Graph h = random_graph(rng, rng.between(1, 4));
        ColouredGraph f = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 5));
        ColouredGraph g1 = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 5));
        ColouredGraph g2 = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 5));
        CHECK(coloured_hom_count(f, tensor(g1, g2)) ==
              coloured_hom_count(f, g1) * coloured_hom_count(f, g2));
    }
}

TEST_CASE("subdivision preserves prescribed counts") {
    Rng rng(47);
    for (int t = 0; t < 30; ++t) {
        Graph h = random_graph(rng, rng.between(2, 4));
        if (h.edge_count() == 0) continue;
        ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
        int r = rng.between(0, 3);
        CHECK(count_cp_hom(lift_colouring(cg, r)) == count_cp_hom(cg));
    }
}
