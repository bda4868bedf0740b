#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/hombasis.hpp"
#include "countlab/linalg.hpp"
#include "countlab/rng.hpp"
#include "countlab/selftest.hpp"
#include "countlab/transforms.hpp"

#include <doctest.h>

using namespace countlab;

TEST_CASE("exact solving") {
    RationalMatrix id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    std::vector<Rational> rhs = {Rational(3), Rational(-1), Rational(7, 2)};
    CHECK(solve_exact(id, rhs) == rhs);

    RationalMatrix upper(2);
    upper.at(0, 0) = 1;
    upper.at(0, 1) = 1;
    upper.at(1, 1) = 1;
    auto x = solve_exact(upper, {Rational(3), Rational(1)});
    CHECK(x == std::vector<Rational>{Rational(2), Rational(1)});

    RationalMatrix sing(2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 1;
    sing.at(1, 0) = 1;
    sing.at(1, 1) = 1;
    try {
        solve_exact(sing, {Rational(1), Rational(2)});
        CHECK(false);
    } catch (const SingularError& e) {
        CHECK(e.kind == SingularKind::inconsistent);
    }
    try {
        solve_exact(sing, {Rational(1), Rational(1)});
        CHECK(false);
    } catch (const SingularError& e) {
        CHECK(e.kind == SingularKind::underdetermined);
    }
}

TEST_CASE("solver agrees with a plain rational elimination oracle") {
    // independent check: Gauss-Jordan over rationals, no fraction-free tricks
    auto plain_solve = [](RationalMatrix a, std::vector<Rational> b) {
        const int n = a.dim;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (a.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            REQUIRE(piv >= 0);
            for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(piv, j));
            std::swap(b[col], b[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == col || a.at(r, col) == 0) continue;
                Rational f = a.at(r, col) / a.at(col, col);
                for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
                b[r] -= f * b[col];
            }
        }
        std::vector<Rational> x(n);
        for (int i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
        return x;
    };
    Rng rng(53);
    for (int t = 0; t < 25; ++t) {
        const int n = rng.between(1, 6);
        RationalMatrix m(n);
        std::vector<Rational> rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                m.at(i, j) = Rational(rng.between(-4, 4), rng.between(1, 3));
            rhs[i] = Rational(rng.between(-6, 6));
        }
        if (determinant_exact(m) == 0) continue;
        CHECK(solve_exact(m, rhs) == plain_solve(m, rhs));
    }
}

TEST_CASE("fracture matrix") {
    RationalMatrix m2 = matrix_M(make_clique(2));
    CHECK(m2.dim == 1);
    CHECK(m2.at(0, 0) == 1);

    RationalMatrix m3 = matrix_M(make_clique(3));
    CHECK(m3.dim == 8);
    CHECK(m3.at(0, 0) == 1); // coarsest-to-coarsest is the identity map
    CHECK(determinant_exact(m3) != 0);

    CHECK_THROWS_AS(matrix_M(make_independent(2)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_M(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("edge-subset matrix is the subset zeta matrix") {
    RationalMatrix n2 = matrix_N(make_clique(2));
    CHECK(n2.dim == 2);
    CHECK(n2.at(0, 0) == 1);
    CHECK(n2.at(0, 1) == 1);
    CHECK(n2.at(1, 0) == 0);
    CHECK(n2.at(1, 1) == 1);

    // identity colourings force the identity map, so N[A,B] = [A subset of B]
    for (const Graph& h : graphs_without_isolated_vertices(3)) {
        auto subsets = enumerate_edge_subsets(h);
        RationalMatrix n = matrix_N(h);
        for (std::size_t a = 0; a < subsets.size(); ++a)
            for (std::size_t b = 0; b < subsets.size(); ++b) {
                bool subset = std::includes(subsets[b].indices.begin(), subsets[b].indices.end(),
                                            subsets[a].indices.begin(), subsets[a].indices.end());
                CHECK(n.at(static_cast<int>(a), static_cast<int>(b)) == (subset ? 1 : 0));
            }
    }
    CHECK_THROWS_AS(matrix_N(make_grid(4)), GuardError);
}

TEST_CASE("matching coefficients") {
    MatchCoefficients k2 = match_coefficients(make_clique(2));
    CHECK(k2.value.size() == 1);
    CHECK(k2.coarsest() == 1);

    Graph k3 = make_clique(3);
    MatchCoefficients mc = match_coefficients(k3);
    CHECK(mc.value.size() == 8);
    CHECK(mc.coarsest() == Rational(-1)); // three degree-2 vertices
    CHECK(coarsest_fracture_coefficient(k3) == Rational(-1));
    CHECK(coarsest_fracture_coefficient(make_clique(4)) == Rational(16));
    // paw degrees 2,2,3,1: (-1)(-1)(2)(1) = 2
    CHECK(coarsest_fracture_coefficient(paw_graph()) == Rational(2));

    // the weights reproduce colourful matching counts on arbitrary hosts
    Rng rng(59);
    for (int t = 0; t < 20; ++t) {
        ColouredGraph host = random_surjectively_coloured(rng, k3, rng.between(3, 7));
        Rational sum(0);
        for (std::size_t i = 0; i < mc.fractures.size(); ++i)
            sum += mc.value[i] *
                   Rational(coloured_hom_count(fractured_graph(k3, mc.fractures[i]), host));
        CHECK(sum == Rational(count_colourful_matchings(host)));
    }
}

TEST_CASE("indset coefficients") {
    IndsetCoefficients edgeless = indset_coefficients(make_independent(3));
    CHECK(edgeless.value.size() == 1);
    CHECK(edgeless.value[0] == 1);

    IndsetCoefficients k2 = indset_coefficients(make_clique(2));
    CHECK(k2.value.size() == 2);
    CHECK(k2.full() != 0);

    Graph k3 = make_clique(3);
    IndsetCoefficients ic = indset_coefficients(k3);
    CHECK(ic.value.size() == 8);
    CHECK(ic.full() != 0);

    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        ColouredGraph host = random_surjectively_coloured(rng, k3, rng.between(3, 7));
        Rational sum(0);
        for (std::size_t i = 0; i < ic.subsets.size(); ++i)
            sum += ic.value[i] *
                   Rational(coloured_hom_count(edge_subgraph(k3, ic.subsets[i]), host));
        CHECK(sum == Rational(count_colourful_indsets(host)));
    }
}

TEST_CASE("determinants stay non-zero across the small-pattern family") {
    for (const Graph& h : graphs_without_isolated_vertices(4)) {
        CHECK(determinant_exact(matrix_M(h)) != 0);
        CHECK(determinant_exact(matrix_N(h)) != 0);
    }
}

TEST_CASE("small-graph generator matches a labelled brute-force census") {
    // independent oracle: enumerate labelled graphs on up to 2m vertices whose
    // non-isolated part is canonical, then dedupe by isomorphism
    auto census = [](int m) {
        std::vector<Graph> out;
        const int n = 2 * m;
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.push_back({u, v});
        std::vector<int> pick(m);
        auto consider = [&](const std::vector<Edge>& edges) {
            std::vector<char> used(n, 0);
            for (auto [u, v] : edges) used[u] = used[v] = 1;
            int live = 0;
            for (int v = 0; v < n; ++v) live += used[v];
            std::vector<int> remap(n, -1);
            int next = 0;
            for (int v = 0; v < n; ++v)
                if (used[v]) remap[v] = next++;
            std::vector<Edge> packed;
            for (auto [u, v] : edges)
                packed.push_back({std::min(remap[u], remap[v]), std::max(remap[u], remap[v])});
            Graph g(live, std::move(packed));
            for (const auto& seen : out)
                if (are_isomorphic(seen, g)) return;
            out.push_back(std::move(g));
        };
        auto rec = [&](auto&& self, int from, std::vector<Edge>& chosen) -> void {
            if (static_cast<int>(chosen.size()) == m) {
                consider(chosen);
                return;
            }
            for (int i = from; i < static_cast<int>(all.size()); ++i) {
                chosen.push_back(all[i]);
                self(self, i + 1, chosen);
                chosen.pop_back();
            }
        };
        std::vector<Edge> chosen;
        rec(rec, 0, chosen);
        return out;
    };

    auto generated = graphs_without_isolated_vertices(4);
    std::vector<int> by_edges(5, 0);
    for (const auto& g : generated) ++by_edges[g.edge_count()];
    for (int m = 1; m <= 4; ++m) {
        auto expected = census(m);
        CHECK(by_edges[m] == static_cast<int>(expected.size()));
        // and every censused graph appears
        for (const auto& e : expected) {
            bool found = false;
            for (const auto& g : generated)
                if (g.edge_count() == m && are_isomorphic(g, e)) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}
