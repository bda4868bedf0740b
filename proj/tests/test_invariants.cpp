#include "countlab/errors.hpp"
#include "countlab/generators.hpp"
#include "countlab/invariants.hpp"
#include "countlab/rng.hpp"
#include "countlab/selftest.hpp"
#include "countlab/shallow_minor.hpp"
#include "countlab/treewidth.hpp"

#include <doctest.h>

using namespace countlab;

namespace {
Graph biclique(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}
} // namespace

TEST_CASE("invariant values on named graphs") {
    CHECK(invariant(make_clique(5), InvariantKind::clique) == 5);
    CHECK(invariant(make_path(4), InvariantKind::induced_matching) == 1);
    CHECK(invariant(biclique(3, 3), InvariantKind::induced_biclique) == 3);
    CHECK(invariant(biclique(3, 3), InvariantKind::clique) == 2);
    CHECK(invariant(biclique(3, 3), InvariantKind::matching) == 3);
    CHECK(invariant(make_cycle(7), InvariantKind::independence) == 3);
    CHECK(invariant(make_independent(4), InvariantKind::biclique) == 0);
    CHECK(invariant(make_clique(6), InvariantKind::biclique) == 3);
    CHECK(invariant(make_clique(6), InvariantKind::induced_biclique) == 1);
    CHECK(invariant(make_matching(4), InvariantKind::induced_matching) == 4);
    CHECK_THROWS_AS(invariant(make_grid(5), InvariantKind::clique), GuardError);
}

TEST_CASE("invariant inequalities on random graphs") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, rng.between(1, 9));
        int m = invariant(g, InvariantKind::matching);
        int mi = invariant(g, InvariantKind::induced_matching);
        int b = invariant(g, InvariantKind::biclique);
        int bi = invariant(g, InvariantKind::induced_biclique);
        CHECK(mi <= m);
        CHECK(bi <= b);
        CHECK((invariant(g, InvariantKind::clique) >= 2) == (g.edge_count() > 0));
        CHECK(b <= m); // a k-by-k biclique contains a k-matching
    }
}

TEST_CASE("exact treewidth") {
    CHECK(treewidth_exact(make_path(9)).first == 1);
    for (int n = 2; n <= 8; ++n) CHECK(treewidth_exact(make_clique(n)).first == n - 1);
    CHECK(treewidth_exact(make_grid(3)).first == 3);
    CHECK(treewidth_exact(make_grid(4)).first == 4);
    CHECK(treewidth_exact(make_cycle(8)).first == 2);
    CHECK_THROWS_AS(treewidth_exact(make_grid(5)), GuardError);

    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        Graph tr = random_tree(rng, rng.between(2, 16));
        auto [w, td] = treewidth_exact(tr);
        CHECK(w == 1);
        validate_tree_decomposition(tr, td);
        CHECK(td.width() == 1);
    }
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, rng.between(1, 9));
        auto [w, td] = treewidth_exact(g);
        validate_tree_decomposition(g, td);
        CHECK(td.width() == w);
    }
}

TEST_CASE("tree decomposition validation rejects broken inputs") {
    Graph p3 = make_path(3);
    // edge {1,2} not inside any bag
    TreeDecomposition bad{{{0, 1}, {2}}, {{0, 1}}};
    CHECK_THROWS_AS(validate_tree_decomposition(p3, bad), std::invalid_argument);
    // vertex 1's bags are not connected in the tree
    TreeDecomposition split{{{0, 1}, {0}, {1, 2}}, {{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(validate_tree_decomposition(p3, split), std::invalid_argument);
    // not a tree
    TreeDecomposition loop{{{0, 1}, {1, 2}}, {{0, 1}, {1, 0}}};
    CHECK_THROWS_AS(validate_tree_decomposition(p3, loop), std::invalid_argument);
}

TEST_CASE("shallow minors") {
    // depth 0 means subgraphs
    CHECK(is_shallow_minor(make_path(3), make_cycle(5), 0));
    CHECK_FALSE(is_shallow_minor(make_clique(3), make_cycle(6), 0));
    // contracting alternate edges of the hexagon yields a triangle
    CHECK(is_shallow_minor(make_clique(3), make_cycle(6), 1));
    // minors of a cycle are outerplanar, so no 4-clique at any depth
    CHECK_FALSE(is_shallow_minor(make_clique(4), make_cycle(8), 8));
    CHECK_THROWS_AS(is_shallow_minor(make_clique(3), make_grid(4), 1), GuardError);
}
