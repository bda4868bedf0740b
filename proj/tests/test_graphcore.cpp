#include "countlab/chains.hpp"
#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/rng.hpp"
#include "countlab/selftest.hpp"
#include "countlab/transforms.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace countlab;

TEST_CASE("graph construction enforces the invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("generators produce the named graphs") {
    CHECK(make_grid(4).vertex_count() == 16);
    CHECK(make_grid(4).edge_count() == 24);
    CHECK(make_matching(3).vertex_count() == 6);
    CHECK(make_matching(3).edge_count() == 3);
    CHECK_THROWS_AS(make_clique(0), std::invalid_argument);

    // height-4, length-5 wall: full rows, full outer columns, alternating rungs
    Graph w = make_wall(4, 5);
    CHECK(w.vertex_count() == 20);
    CHECK(w.edge_count() == 26);
    std::multiset<int> degrees;
    for (int v = 0; v < w.vertex_count(); ++v) degrees.insert(w.degree(v));
    CHECK(std::count(degrees.begin(), degrees.end(), 2) == 8);
    CHECK(std::count(degrees.begin(), degrees.end(), 3) == 12);

    // the height-2 wall is the 4-cycle
    CHECK(are_isomorphic(make_wall(2, 2), make_cycle(4)));
}

TEST_CASE("subdivision") {
    Graph k3 = make_clique(3);
    CHECK(subdivide(k3, 0) == k3);
    CHECK(are_isomorphic(subdivide(k3, 1), make_cycle(6)));
    // two edges expanded into 3-edge paths
    Graph p3 = make_path(3);
    CHECK(are_isomorphic(subdivide(p3, 2), make_path(7)));

    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, rng.between(1, 7));
        int r = rng.between(0, 3);
        Graph gr = subdivide(g, r);
        CHECK(gr.vertex_count() == g.vertex_count() + r * g.edge_count());
        CHECK(gr.edge_count() == (r + 1) * g.edge_count());
    }
}

TEST_CASE("check_colouring classifies maps") {
    Graph k2 = make_clique(2);
    auto ok = check_colouring(k2, k2, {0, 1});
    CHECK(ok.is_hom);
    CHECK(ok.is_surjective);
    auto constant = check_colouring(k2, k2, {0, 0});
    CHECK_FALSE(constant.is_hom);
    CHECK_FALSE(constant.is_surjective);
    auto wrap = check_colouring(make_clique(3), make_cycle(6), {0, 1, 2, 0, 1, 2});
    CHECK(wrap.is_hom);
    CHECK(wrap.is_surjective);
}

TEST_CASE("colouring lift") {
    Graph k2 = make_clique(2);
    ColouredGraph idk2 = identity_coloured(k2);
    CHECK(lift_colouring(idk2, 0) == idk2);
    // the identity lifts to the identity
    ColouredGraph lifted = lift_colouring(idk2, 2);
    CHECK(lifted.pattern() == lifted.host());
    for (int v = 0; v < lifted.host().vertex_count(); ++v) CHECK(lifted.colour_of(v) == v);

    // wrap-around colouring of the hexagon lifts to a 2-to-1 colouring of C_12
    ColouredGraph wrap(make_clique(3), make_cycle(6), {0, 1, 2, 0, 1, 2});
    ColouredGraph lifted2 = lift_colouring(wrap, 1);
    CHECK(are_isomorphic(lifted2.host(), make_cycle(12)));
    CHECK(are_isomorphic(lifted2.pattern(), make_cycle(6)));
    auto chk = check_colouring(lifted2.pattern(), lifted2.host(), lifted2.colour());
    CHECK(chk.is_hom);
    CHECK(chk.is_surjective);
}

TEST_CASE("fracture enumeration") {
    CHECK(enumerate_fractures(make_clique(2)).size() == 1);
    CHECK(enumerate_fractures(make_clique(3)).size() == 8);
    CHECK(enumerate_fractures(make_clique(4)).size() == 625);
    CHECK(enumerate_fractures(make_clique(3)).front().is_coarsest());
    CHECK_THROWS_AS(enumerate_fractures(make_clique(4), 100), GuardError);

    // deterministic order: two runs agree
    auto a = enumerate_fractures(paw_graph());
    auto b = enumerate_fractures(paw_graph());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("fractured graphs") {
    Graph k3 = make_clique(3);
    // coarsest fracture returns the pattern itself with the identity colouring
    CHECK(fractured_graph(k3, Fracture::coarsest(k3)) == identity_coloured(k3));
    // finest fracture separates every edge
    ColouredGraph finest = fractured_graph(k3, finest_fracture(k3));
    CHECK(are_isomorphic(finest.host(), make_matching(3)));
    CHECK(finest.surjective());
    // splitting exactly one vertex of the triangle gives a 4-path
    Fracture split_first_only(k3, {{{0}, {1}}, {{0, 2}}, {{1, 2}}});
    CHECK(are_isomorphic(fractured_graph(k3, split_first_only).host(), make_path(4)));
    CHECK_THROWS_AS(Fracture(k3, {{{0, 1}, {0}}, {{0, 2}}, {{1, 2}}}), std::invalid_argument);

    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        Graph h = random_graph(rng, rng.between(2, 4));
        for (const auto& f : enumerate_fractures(h)) {
            ColouredGraph fg = fractured_graph(h, f);
            auto chk = check_colouring(fg.pattern(), fg.host(), fg.colour());
            CHECK(chk.is_hom);
            if (!h.has_isolated_vertex()) CHECK(chk.is_surjective);
        }
    }
}

TEST_CASE("tensor product") {
    Graph k3 = make_clique(3);
    ColouredGraph wrap(k3, make_cycle(6), {0, 1, 2, 0, 1, 2});
    // absorbing the identity-coloured pattern
    CHECK(tensor(wrap, identity_coloured(k3)) == wrap);
    CHECK(tensor(identity_coloured(k3), identity_coloured(k3)) == identity_coloured(k3));
    // lifted hosts absorb the identity-coloured subdivided pattern
    ColouredGraph lifted = lift_colouring(wrap, 1);
    CHECK(tensor(lifted, identity_coloured(lifted.pattern())) == lifted);
    CHECK_THROWS_AS(tensor(wrap, identity_coloured(make_clique(2))), std::invalid_argument);
}

TEST_CASE("edge subgraphs") {
    Graph k3 = make_clique(3);
    CHECK(edge_subgraph(k3, EdgeSubset::all(k3)) == identity_coloured(k3));
    ColouredGraph empty = edge_subgraph(k3, EdgeSubset::none());
    CHECK(empty.host().edge_count() == 0);
    CHECK(empty.host().vertex_count() == 3);
    CHECK(empty.surjective());
    ColouredGraph one = edge_subgraph(k3, EdgeSubset{{0}});
    CHECK(one.host().edge_count() == 1);
    CHECK(one.host().vertex_count() == 3);
    CHECK_THROWS_AS(edge_subgraph(k3, EdgeSubset{{3}}), std::invalid_argument);

    auto subsets = enumerate_edge_subsets(k3);
    CHECK(subsets.size() == 8);
    CHECK(subsets.front().indices.empty());
    CHECK(subsets.back().indices == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(enumerate_edge_subsets(make_grid(4), 12), GuardError);
}

TEST_CASE("chain condition") {
    Graph k4s = subdivide(make_clique(4), 1);
    CHECK(chain_condition_check(k4s, 0));
    CHECK(chain_condition_check(k4s, 1));
    // subdividing exactly one edge of the 4-clique leaves mixed chain lengths
    Graph one_edge = subdivide_each(make_clique(4), {1, 0, 0, 0, 0, 0});
    CHECK_FALSE(chain_condition_check(one_edge, 1));
    CHECK(chain_condition_check(one_edge, 0));
}

TEST_CASE("embedding into subdivided cliques") {
    // r = 0: the identity into a clique of the same order
    Graph k4 = make_clique(4);
    CliqueEmbedding emb = embed_into_subdivided_clique(k4, 0);
    CHECK(emb.clique_order == 4);
    for (int v = 0; v < 4; ++v) CHECK(emb.mapping[v] == v);

    // the subdivided 4-clique embeds identically into itself
    Graph k4s = subdivide(k4, 1);
    CliqueEmbedding emb1 = embed_into_subdivided_clique(k4s, 1);
    CHECK(emb1.clique_order == 4);
    for (int v = 0; v < k4s.vertex_count(); ++v) CHECK(emb1.mapping[v] == v);

    CHECK_THROWS_AS(embed_into_subdivided_clique(subdivide_each(k4, {1, 0, 0, 0, 0, 0}), 1),
                    std::invalid_argument);
    // a triangle passes the (vacuous) chain check but cannot live in a
    // bipartite 1-subdivision
    CHECK_THROWS_AS(embed_into_subdivided_clique(make_clique(3), 1), std::invalid_argument);

    // pipeline tensors embed and verify
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        Graph h = make_clique(3);
        ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(3, 6));
        int r = rng.between(0, 2);
        ColouredGraph lifted = lift_colouring(cg, r);
        auto fractures = enumerate_fractures(lifted.pattern());
        const Fracture& f = fractures[rng.below(static_cast<int>(fractures.size()))];
        ColouredGraph tens = tensor(lifted, fractured_graph(lifted.pattern(), f));
        CHECK(chain_condition_check(tens.host(), r));
        CliqueEmbedding e = embed_into_subdivided_clique(tens.host(), r);
        CHECK(e.clique_order > 0); // construction self-verifies
    }
}
