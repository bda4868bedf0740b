#include "countlab/selftest.hpp"

#include "countlab/chains.hpp"
#include "countlab/classify.hpp"
#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/hom_td.hpp"
#include "countlab/hombasis.hpp"
#include "countlab/invariants.hpp"
#include "countlab/linalg.hpp"
#include "countlab/oracle.hpp"
#include "countlab/reductions.hpp"
#include "countlab/transforms.hpp"
#include "countlab/treewidth.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace countlab {

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

CheckResult run_check(const std::string& name, const std::string& detail_on_pass,
                      const std::function<void()>& body) {
    try {
        body();
        return {name, true, detail_on_pass};
    } catch (const Failure& f) {
        return {name, false, f.what};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

Graph random_pattern(Rng& rng, int min_vertices, int max_vertices) {
    int n = rng.between(min_vertices, max_vertices);
    return random_graph(rng, n);
}

// A random pattern where every vertex has degree >= 1 (pipeline inputs).
Graph random_pattern_no_isolated(Rng& rng, int min_vertices, int max_vertices) {
    for (;;) {
        Graph h = random_pattern(rng, min_vertices, max_vertices);
        if (h.vertex_count() > 0 && !h.has_isolated_vertex() && h.edge_count() > 0) return h;
    }
}

std::string count_pair(const BigCount& got, const BigCount& want) {
    return "got " + got.get_str() + ", want " + want.get_str();
}

// Shared between criteria 1 and 7: the matching pipeline's oracle queries
// with the r and size cap they must respect.
struct LoggedQuery {
    Graph graph;
    int r = 0;
    int clique_cap = 0;
};

} // namespace

Graph paw_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

Graph random_tree(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int parent = rng.below(v);
        edges.push_back({parent, v});
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> graphs_without_isolated_vertices(int max_edges) {
    std::vector<Graph> all;
    std::vector<Graph> level = {make_clique(2)};
    all.push_back(level.front());
    for (int m = 2; m <= max_edges; ++m) {
        std::vector<Graph> next;
        auto offer = [&next](Graph g) {
            for (const auto& seen : next)
                if (are_isomorphic(seen, g)) return;
            next.push_back(std::move(g));
        };
        for (const auto& g : level) {
            const int n = g.vertex_count();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    auto edges = g.edges();
                    edges.push_back({u, v});
                    offer(Graph(n, std::move(edges)));
                }
            for (int u = 0; u < n; ++u) {
                auto edges = g.edges();
                edges.push_back({u, n});
                offer(Graph(n + 1, std::move(edges)));
            }
            {
                auto edges = g.edges();
                edges.push_back({n, n + 1});
                offer(Graph(n + 2, std::move(edges)));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

namespace {

// ---- acceptance criteria -------------------------------------------------

const std::vector<Graph>& pipeline_patterns() {
    static const std::vector<Graph> patterns = {make_clique(2), make_path(3), make_clique(3),
                                                paw_graph()};
    return patterns;
}

void criterion_matching_pipeline(Rng& rng, std::vector<LoggedQuery>& queries) {
    for (const Graph& h : pipeline_patterns()) {
        for (int r = 0; r <= 1; ++r) {
            const Graph hr = subdivide(h, r);
            for (int trial = 0; trial < 20; ++trial) {
                int n = rng.between(h.vertex_count(), 7);
                ColouredGraph cg = random_surjectively_coloured(rng, h, n);
                CountingOracle oracle = matching_pipeline_oracle(r);
                oracle.retain_queries(true);
                BigCount got = recover_cphom_via_matchings(cg, r, oracle);
                BigCount want = count_cp_hom(cg);
                expect(got == want, "matching pipeline mismatch (pattern " +
                                        std::to_string(h.vertex_count()) + "v/" +
                                        std::to_string(h.edge_count()) + "e, r=" +
                                        std::to_string(r) + "): " + count_pair(got, want));
                for (const auto& q : oracle.retained())
                    queries.push_back({q.graph, r, 10 * hr.edge_count() * n});
            }
        }
    }
}

void criterion_indset_pipeline(Rng& rng) {
    for (const Graph& h : pipeline_patterns()) {
        for (int r = 0; r <= 1; ++r) {
            for (int trial = 0; trial < 20; ++trial) {
                int n = rng.between(h.vertex_count(), 7);
                ColouredGraph cg = random_surjectively_coloured(rng, h, n);
                CountingOracle oracle = indset_pipeline_oracle(lift_colouring(cg, r).host());
                BigCount got = recover_cphom_via_indsets(cg, r, oracle);
                BigCount want = count_cp_hom(cg);
                expect(got == want, "indset pipeline mismatch (pattern " +
                                        std::to_string(h.vertex_count()) + "v/" +
                                        std::to_string(h.edge_count()) + "e, r=" +
                                        std::to_string(r) + "): " + count_pair(got, want));
            }
        }
    }
}

std::vector<Graph> nonsingularity_family() {
    auto family = graphs_without_isolated_vertices(5);
    family.push_back(subdivide(make_clique(3), 1)); // the 6-cycle
    return family;
}

void criterion_nonsingular(int* checked) {
    for (const Graph& h : nonsingularity_family()) {
        expect(determinant_exact(matrix_M(h)) != 0, "fracture matrix singular for a pattern with " +
                                                        std::to_string(h.edge_count()) + " edges");
        expect(determinant_exact(matrix_N(h)) != 0,
               "edge-subset matrix singular for a pattern with " +
                   std::to_string(h.edge_count()) + " edges");
        ++*checked;
    }
}

void criterion_coefficients(int* checked) {
    auto family = nonsingularity_family();
    family.push_back(make_clique(4));
    for (const Graph& h : family) {
        MatchCoefficients mc = match_coefficients(h); // validates the closed form internally
        expect(mc.coarsest() == coarsest_fracture_coefficient(h),
               "coarsest matching coefficient mismatch");
        IndsetCoefficients ic = indset_coefficients(h);
        expect(ic.full() != 0, "full-edge-set coefficient vanishes");
        ++*checked;
    }
    // the 3-regular clique has |coarsest coefficient| = 2^4
    Rational top = match_coefficients(make_clique(4)).coarsest();
    expect(abs(top) == Rational(16), "coarsest coefficient of the 3-regular 4-clique is not 16");
}

void criterion_tensor_multiplicativity(Rng& rng) {
    for (int trial = 0; trial < 200; ++trial) {
        Graph h = random_pattern(rng, 1, 4);
        ColouredGraph f = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
        ColouredGraph g1 = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
        ColouredGraph g2 = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
        BigCount lhs = coloured_hom_count(f, tensor(g1, g2));
        BigCount rhs = coloured_hom_count(f, g1) * coloured_hom_count(f, g2);
        expect(lhs == rhs, "tensor multiplicativity failed at trial " + std::to_string(trial) +
                               ": " + count_pair(lhs, rhs));
    }
}

void criterion_subdivision_invariance(Rng& rng) {
    for (int trial = 0; trial < 100; ++trial) {
        Graph h = random_pattern_no_isolated(rng, 2, 4);
        int n = rng.between(h.vertex_count(), 7);
        ColouredGraph cg = random_surjectively_coloured(rng, h, n);
        int r = rng.between(0, 3);
        BigCount base = count_cp_hom(cg);
        BigCount lifted = count_cp_hom(lift_colouring(cg, r));
        expect(base == lifted, "subdivision changed the count at trial " + std::to_string(trial) +
                                   " (r=" + std::to_string(r) + "): " + count_pair(lifted, base));
    }
    Graph wall = make_wall(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.between(4, 7);
        ColouredGraph cg = random_surjectively_coloured(rng, wall, n);
        std::vector<int> divisors(wall.edge_count());
        for (int& d : divisors) d = rng.between(1, 3);
        int r = rng.between(1, 2);
        WallLift lift = wall_lift(2, divisors, r, cg);
        BigCount base = count_cp_hom(cg);
        BigCount lifted = count_cp_hom(lift.coloured);
        expect(base == lifted, "wall lift changed the count at trial " + std::to_string(trial) +
                                   ": " + count_pair(lifted, base));
    }
}

void criterion_promise_discipline(const std::vector<LoggedQuery>& queries) {
    expect(!queries.empty(), "no oracle queries were recorded");
    for (const auto& q : queries) {
        expect(chain_condition_check(q.graph, q.r), "a logged query violates the chain condition");
        CliqueEmbedding emb = embed_into_subdivided_clique(q.graph, q.r);
        expect(emb.clique_order <= q.clique_cap,
               "embedding clique order " + std::to_string(emb.clique_order) + " exceeds cap " +
                   std::to_string(q.clique_cap));
    }
}

void criterion_treewidth(Rng& rng) {
    for (int k = 2; k <= 4; ++k) {
        auto [w, td] = treewidth_exact(make_grid(k));
        expect(w == k, "grid treewidth wrong for k=" + std::to_string(k) + ": got " +
                           std::to_string(w));
        validate_tree_decomposition(make_grid(k), td);
    }
    for (int n = 2; n <= 8; ++n) {
        auto [w, td] = treewidth_exact(make_clique(n));
        expect(w == n - 1, "clique treewidth wrong for n=" + std::to_string(n));
    }
    for (int trial = 0; trial < 20; ++trial) {
        Graph t = random_tree(rng, rng.between(2, 18));
        auto [w, td] = treewidth_exact(t);
        expect(w == 1, "tree treewidth is not 1");
        validate_tree_decomposition(t, td);
    }
    for (int trial = 0; trial < 50; ++trial) {
        Graph h = random_pattern(rng, 1, 6);
        Graph g = random_graph(rng, rng.between(1, 8));
        auto [w, td] = treewidth_exact(h);
        BigCount via_td = count_hom_td(h, td, g);
        BigCount direct = count_hom(h, g);
        expect(via_td == direct, "treewidth DP disagrees with the direct count at trial " +
                                     std::to_string(trial) + ": " + count_pair(via_td, direct));
    }
}

void criterion_uncolouring(Rng& rng) {
    for (int trial = 0; trial < 50; ++trial) {
        Graph h = random_pattern_no_isolated(rng, 2, 4);
        ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 7));

        CountingOracle match_oracle = brute_force_oracle(OracleProblem::matchings,
                                                         SubgraphsOf{cg.host()});
        BigCount got = colourful_from_uncoloured_matchings(cg, match_oracle);
        BigCount want = count_colourful_matchings(cg);
        expect(got == want, "matching uncolouring mismatch: " + count_pair(got, want));
        for (const auto& rec : match_oracle.log())
            expect(rec.promise_ok, "a matching query left the host's subgraphs");

        CountingOracle indset_oracle = brute_force_oracle(OracleProblem::indsets,
                                                          SubgraphsOf{cg.host()});
        got = colourful_from_uncoloured_indsets(cg, indset_oracle);
        want = count_colourful_indsets(cg);
        expect(got == want, "indset uncolouring mismatch: " + count_pair(got, want));
        for (const auto& rec : indset_oracle.log())
            expect(rec.promise_ok, "an indset query left the host's subgraphs");

        CountingOracle hom_oracle = brute_force_oracle(OracleProblem::hom, SubgraphsOf{cg.host()});
        got = cphom_from_hom(cg, hom_oracle);
        want = count_cp_hom(cg);
        expect(got == want, "hom uncolouring mismatch: " + count_pair(got, want));
        for (const auto& rec : hom_oracle.log())
            expect(rec.promise_ok, "a hom query left the host's subgraphs");
    }
}

struct SubFixtureCell {
    VerdictClass klass;
    LowerBoundForm bound;
};

PatternClassFlags sub_pattern_row(int row) {
    using enum Finiteness;
    PatternClassFlags p;
    p.closure = PatternClosure::hereditary;
    p.size = infinite;
    switch (row) {
        case 1:
            p.matching = finite;
            p.induced_matching = finite;
            p.induced_biclique = finite;
            p.clique = finite;
            p.independence = infinite;
            p.treewidth = finite;
            break;
        case 2:
            p.matching = infinite;
            p.induced_matching = infinite;
            p.induced_biclique = finite;
            p.clique = finite;
            p.independence = infinite;
            p.treewidth = finite;
            break;
        case 3:
            p.matching = infinite;
            p.induced_matching = finite;
            p.induced_biclique = infinite;
            p.clique = finite;
            p.independence = infinite;
            p.treewidth = infinite;
            break;
        case 4:
            p.matching = infinite;
            p.induced_matching = finite;
            p.induced_biclique = finite;
            p.clique = infinite;
            p.independence = finite;
            p.treewidth = infinite;
            break;
    }
    return p;
}

HostClassFlags host_column(int col) {
    using enum Finiteness;
    HostClassFlags g;
    g.independence = infinite;
    switch (col) {
        case 1:
            g.density = Density::nowhere_dense;
            g.clique = finite;
            g.biclique = finite;
            break;
        case 2:
            g.density = Density::somewhere_dense;
            g.clique = infinite;
            g.biclique = infinite;
            break;
        case 3:
            g.density = Density::somewhere_dense;
            g.clique = finite;
            g.biclique = infinite;
            break;
        case 4:
            g.density = Density::somewhere_dense;
            g.clique = finite;
            g.biclique = finite;
            break;
    }
    return g;
}

void criterion_dichotomy() {
    using VC = VerdictClass;
    using LB = LowerBoundForm;
    const SubFixtureCell P{VC::P, LB::none};
    const SubFixtureCell FPT{VC::FPT, LB::none};
    const SubFixtureCell HARD{VC::hard, LB::n_to_o_k_over_log_k};
    const SubFixtureCell TIGHT{VC::hard_tight, LB::n_to_o_k};

    const SubFixtureCell sub_expected[4][4] = {
        {P, P, P, P},
        {FPT, HARD, HARD, HARD},
        {P, TIGHT, TIGHT, P},
        {P, TIGHT, P, P},
    };
    for (int row = 1; row <= 4; ++row)
        for (int col = 1; col <= 4; ++col) {
            Verdict v = classify_sub(sub_pattern_row(row), host_column(col));
            const SubFixtureCell& e = sub_expected[row - 1][col - 1];
            expect(v.klass == e.klass && v.bound == e.bound,
                   "subgraph table cell (" + std::to_string(row) + "," + std::to_string(col) +
                       ") produced " + to_string(v));
        }

    // induced-subgraph table: rows finite / alpha infinite / alpha finite
    PatternClassFlags finite_row;
    finite_row.closure = PatternClosure::hereditary;
    finite_row.size = Finiteness::finite;
    PatternClassFlags indep_row; // independent sets
    indep_row.closure = PatternClosure::hereditary;
    indep_row.size = Finiteness::infinite;
    indep_row.matching = Finiteness::finite;
    indep_row.induced_matching = Finiteness::finite;
    indep_row.induced_biclique = Finiteness::finite;
    indep_row.clique = Finiteness::finite;
    indep_row.independence = Finiteness::infinite;
    indep_row.treewidth = Finiteness::finite;
    PatternClassFlags clique_row = sub_pattern_row(4); // cliques

    const PatternClassFlags ind_rows[3] = {finite_row, indep_row, clique_row};
    const SubFixtureCell ind_expected[3][3] = {
        {P, P, P},
        {FPT, TIGHT, HARD},
        {P, TIGHT, P},
    };
    for (int row = 0; row < 3; ++row)
        for (int col = 1; col <= 3; ++col) {
            Verdict v = classify_indsub(ind_rows[row], host_column(col));
            const SubFixtureCell& e = ind_expected[row][col - 1];
            expect(v.klass == e.klass && v.bound == e.bound,
                   "induced table cell (" + std::to_string(row + 1) + "," + std::to_string(col) +
                       ") produced " + to_string(v));
        }

    // homomorphism verdicts
    PatternClassFlags trees;
    trees.closure = PatternClosure::monotone;
    trees.size = Finiteness::infinite;
    trees.matching = Finiteness::infinite;
    trees.induced_matching = Finiteness::infinite;
    trees.induced_biclique = Finiteness::finite;
    trees.clique = Finiteness::finite;
    trees.independence = Finiteness::infinite;
    trees.treewidth = Finiteness::finite;
    PatternClassFlags grids = trees;
    grids.treewidth = Finiteness::infinite;

    Verdict v = classify_hom(trees, host_column(4));
    expect(v.klass == VC::P, "bounded-treewidth patterns must give P, got " + to_string(v));
    v = classify_hom(grids, host_column(4));
    expect(v.klass == VC::hard && v.bound == LB::n_to_o_tw,
           "unbounded treewidth over somewhere dense hosts must be hard, got " + to_string(v));
    v = classify_hom(grids, host_column(1));
    expect(v.klass == VC::FPT, "nowhere dense hosts must give FPT, got " + to_string(v));
    try {
        PatternClassFlags hereditary_only = grids;
        hereditary_only.closure = PatternClosure::hereditary;
        classify_hom(hereditary_only, host_column(4));
        expect(false, "hereditary pattern classes must be rejected for hom classification");
    } catch (const std::invalid_argument&) {
    }

    // inconsistent flags are rejected with the violated implication named
    PatternClassFlags bad = sub_pattern_row(1);
    bad.matching = Finiteness::infinite;
    bad.independence = Finiteness::infinite;
    try {
        classify_sub(bad, host_column(1));
        expect(false, "inconsistent matching-number flags were accepted");
    } catch (const FlagError& e) {
        expect(std::string(e.what()).find("Theorem 2.6") != std::string::npos,
               "rejection does not name Theorem 2.6");
    }
    PatternClassFlags bad2;
    bad2.closure = PatternClosure::hereditary;
    bad2.size = Finiteness::infinite;
    bad2.independence = Finiteness::finite;
    bad2.clique = Finiteness::finite;
    try {
        classify_indsub(bad2, host_column(1));
        expect(false, "inconsistent size flags were accepted");
    } catch (const FlagError& e) {
        expect(std::string(e.what()).find("Theorem 2.5") != std::string::npos,
               "rejection does not name Theorem 2.5");
    }
}

// ---- per-module property suites ------------------------------------------

void suite_graphcore(Rng& rng, int trials, std::vector<CheckResult>& out) {
    out.push_back(run_check("subdivision size identities", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph g = random_graph(rng, rng.between(1, 7));
            expect(subdivide(g, 0) == g, "0-subdivision is not the identity");
            int r = rng.between(1, 4);
            Graph gr = subdivide(g, r);
            expect(gr.vertex_count() == g.vertex_count() + r * g.edge_count(),
                   "subdivision vertex count");
            expect(gr.edge_count() == (r + 1) * g.edge_count(), "subdivision edge count");
        }
    }));
    out.push_back(run_check("fracture enumeration shape", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_graph(rng, rng.between(1, 4));
            auto fractures = enumerate_fractures(h);
            expect(BigCount(static_cast<unsigned long>(fractures.size())) == fracture_count(h),
                   "fracture count formula");
            expect(fractures.front().is_coarsest(), "first fracture is not the coarsest");
        }
    }));
    out.push_back(run_check("fractured graphs are surjectively coloured", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 4);
            for (const auto& f : enumerate_fractures(h)) {
                ColouredGraph fg = fractured_graph(h, f);
                expect(fg.surjective(), "canonical colouring is not surjective");
                expect(fg.host().edge_count() == h.edge_count(), "fracturing changed edge count");
            }
        }
    }));
    out.push_back(run_check("tensor with the identity-coloured pattern", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 4);
            ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
            expect(tensor(cg, identity_coloured(h)) == cg, "tensor with (H,id) is not the identity");
        }
    }));
    out.push_back(run_check("chain condition on pipeline tensors", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 3);
            int r = rng.between(0, 2);
            ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 5));
            ColouredGraph lifted = lift_colouring(cg, r);
            for (const auto& f : enumerate_fractures(lifted.pattern())) {
                ColouredGraph tens = tensor(lifted, fractured_graph(lifted.pattern(), f));
                expect(chain_condition_check(tens.host(), r), "tensor violates the chain condition");
            }
        }
    }));
}

void suite_invariants(Rng& rng, int trials, std::vector<CheckResult>& out) {
    out.push_back(run_check("invariant inequalities", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph g = random_graph(rng, rng.between(1, 9));
            expect(invariant(g, InvariantKind::induced_matching) <=
                       invariant(g, InvariantKind::matching),
                   "induced matching exceeds matching");
            expect(invariant(g, InvariantKind::induced_biclique) <=
                       invariant(g, InvariantKind::biclique),
                   "induced biclique exceeds biclique");
            bool has_edge = g.edge_count() > 0;
            expect((invariant(g, InvariantKind::clique) >= 2) == has_edge,
                   "clique number vs edge presence");
        }
    }));
    out.push_back(run_check("treewidth decompositions validate", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph g = random_graph(rng, rng.between(1, 8));
            auto [w, td] = treewidth_exact(g);
            validate_tree_decomposition(g, td);
            expect(td.width() == w, "decomposition width mismatch");
        }
    }));
}

void suite_counters(Rng& rng, int trials, std::vector<CheckResult>& out) {
    out.push_back(run_check("treewidth DP matches the direct counter", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern(rng, 1, 5);
            Graph g = random_graph(rng, rng.between(1, 7));
            auto [w, td] = treewidth_exact(h);
            expect(count_hom_td(h, td, g) == count_hom(h, g), "DP count mismatch");
        }
    }));
    out.push_back(run_check("subdivision preserves prescribed counts", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 4);
            ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
            int r = rng.between(0, 2);
            expect(count_cp_hom(cg) == count_cp_hom(lift_colouring(cg, r)),
                   "lift changed the count");
        }
    }));
    out.push_back(run_check("colourful homs factor through automorphisms", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 4);
            ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
            CountingOracle oracle = brute_force_oracle(OracleProblem::hom, SubgraphsOf{cg.host()});
            expect(cphom_from_hom(cg, oracle) == count_cp_hom(cg), "bridge identity failed");
        }
    }));
}

void suite_hombasis(Rng& rng, int trials, std::vector<CheckResult>& out) {
    out.push_back(run_check("small-pattern matrices are non-singular", "", [&] {
        for (const Graph& h : graphs_without_isolated_vertices(4)) {
            expect(determinant_exact(matrix_M(h)) != 0, "singular fracture matrix");
            expect(determinant_exact(matrix_N(h)) != 0, "singular edge-subset matrix");
        }
    }));
    out.push_back(run_check("matching weights reproduce colourful counts", "", [&] {
        for (const Graph& h : {make_path(3), make_clique(3), paw_graph()}) {
            MatchCoefficients mc = match_coefficients(h);
            auto fg = [&](const Fracture& f) { return fractured_graph(h, f); };
            for (int t = 0; t < trials; ++t) {
                ColouredGraph host =
                    random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 7));
                Rational sum(0);
                for (std::size_t i = 0; i < mc.fractures.size(); ++i)
                    sum += mc.value[i] * Rational(coloured_hom_count(fg(mc.fractures[i]), host));
                expect(sum == Rational(count_colourful_matchings(host)),
                       "matching weight identity failed");
            }
        }
    }));
    out.push_back(run_check("indset weights reproduce colourful counts", "", [&] {
        for (const Graph& h : {make_path(3), make_clique(3), paw_graph()}) {
            IndsetCoefficients ic = indset_coefficients(h);
            for (int t = 0; t < trials; ++t) {
                ColouredGraph host =
                    random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 7));
                Rational sum(0);
                for (std::size_t i = 0; i < ic.subsets.size(); ++i)
                    sum += ic.value[i] *
                           Rational(coloured_hom_count(edge_subgraph(h, ic.subsets[i]), host));
                expect(sum == Rational(count_colourful_indsets(host)),
                       "indset weight identity failed");
            }
        }
    }));
}

void suite_reductions(Rng& rng, int trials, std::vector<CheckResult>& out) {
    out.push_back(run_check("pipelines agree with direct counts", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 3);
            int r = rng.between(0, 1);
            ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
            CountingOracle mo = matching_pipeline_oracle(r);
            expect(recover_cphom_via_matchings(cg, r, mo) == count_cp_hom(cg),
                   "matching pipeline mismatch");
            CountingOracle io = indset_pipeline_oracle(lift_colouring(cg, r).host());
            expect(recover_cphom_via_indsets(cg, r, io) == count_cp_hom(cg),
                   "indset pipeline mismatch");
        }
    }));
    out.push_back(run_check("inclusion-exclusion uncolouring", "", [&] {
        for (int t = 0; t < trials; ++t) {
            Graph h = random_pattern_no_isolated(rng, 2, 4);
            ColouredGraph cg = random_surjectively_coloured(rng, h, rng.between(h.vertex_count(), 6));
            CountingOracle mo = brute_force_oracle(OracleProblem::matchings, SubgraphsOf{cg.host()});
            expect(colourful_from_uncoloured_matchings(cg, mo) == count_colourful_matchings(cg),
                   "matching uncolouring mismatch");
            CountingOracle io = brute_force_oracle(OracleProblem::indsets, SubgraphsOf{cg.host()});
            expect(colourful_from_uncoloured_indsets(cg, io) == count_colourful_indsets(cg),
                   "indset uncolouring mismatch");
        }
    }));
    out.push_back(run_check("wall lifts preserve prescribed counts", "", [&] {
        Graph wall = make_wall(2, 2);
        for (int t = 0; t < trials; ++t) {
            ColouredGraph cg = random_surjectively_coloured(rng, wall, rng.between(4, 7));
            std::vector<int> divisors(wall.edge_count());
            for (int& d : divisors) d = rng.between(1, 3);
            WallLift lift = wall_lift(2, divisors, rng.between(1, 2), cg);
            expect(count_cp_hom(lift.coloured) == count_cp_hom(cg), "wall lift mismatch");
        }
    }));
}

void suite_classify(Rng&, int, std::vector<CheckResult>& out) {
    out.push_back(run_check("dichotomy tables and verdicts", "", [] { criterion_dichotomy(); }));
    out.push_back(run_check("every consistent full assignment classifies", "", [] {
        using enum Finiteness;
        const Finiteness vals[2] = {finite, infinite};
        int classified = 0;
        for (int bits = 0; bits < 128; ++bits) {
            PatternClassFlags p;
            p.closure = PatternClosure::hereditary;
            p.size = vals[bits & 1];
            p.matching = vals[bits >> 1 & 1];
            p.induced_matching = vals[bits >> 2 & 1];
            p.induced_biclique = vals[bits >> 3 & 1];
            p.clique = vals[bits >> 4 & 1];
            p.independence = vals[bits >> 5 & 1];
            p.treewidth = vals[bits >> 6 & 1];
            try {
                validate_pattern_flags(p);
            } catch (const FlagError&) {
                continue;
            }
            for (int hb = 0; hb < 16; ++hb) {
                HostClassFlags g;
                g.density = (hb & 1) ? Density::somewhere_dense : Density::nowhere_dense;
                g.clique = vals[hb >> 1 & 1];
                g.biclique = vals[hb >> 2 & 1];
                g.independence = vals[hb >> 3 & 1];
                try {
                    validate_host_flags(g);
                } catch (const FlagError&) {
                    continue;
                }
                Verdict vs = classify_sub(p, g);
                Verdict vi = classify_indsub(p, g);
                expect(vs.klass != VerdictClass::unclassified,
                       "fully declared flags left subgraph counting unclassified");
                expect(vi.klass != VerdictClass::unclassified,
                       "fully declared flags left induced counting unclassified");
                ++classified;
            }
        }
        expect(classified > 0, "no consistent assignments found");
    }));
    out.push_back(run_check("density relaxation never turns hard into tractable", "", [] {
        for (int row = 1; row <= 4; ++row) {
            Verdict sparse = classify_sub(sub_pattern_row(row), host_column(1));
            for (int col = 2; col <= 4; ++col) {
                Verdict dense = classify_sub(sub_pattern_row(row), host_column(col));
                expect(!(sparse.hard() && dense.tractable()),
                       "hard on nowhere dense but tractable on somewhere dense");
            }
        }
    }));
}

} // namespace

std::vector<CheckResult> acceptance_suite(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Rng rng(seed);
    std::vector<LoggedQuery> queries;

    out.push_back(run_check("matching-pipeline soundness",
                            "4 patterns x r in {0,1} x 20 random hosts, exact equality",
                            [&] { criterion_matching_pipeline(rng, queries); }));
    out.push_back(run_check("indset-pipeline soundness",
                            "4 patterns x r in {0,1} x 20 random hosts, exact equality",
                            [&] { criterion_indset_pipeline(rng); }));
    int dets = 0;
    out.push_back(run_check("basis non-singularity", "", [&] { criterion_nonsingular(&dets); }));
    if (out.back().pass)
        out.back().detail = std::to_string(dets) + " patterns, both determinants non-zero";
    int coeffs = 0;
    out.push_back(run_check("coefficient identities", "", [&] { criterion_coefficients(&coeffs); }));
    if (out.back().pass)
        out.back().detail = std::to_string(coeffs) + " patterns, closed form and non-vanishing hold";
    out.push_back(run_check("tensor multiplicativity", "200 random triples, exact product identity",
                            [&] { criterion_tensor_multiplicativity(rng); }));
    out.push_back(run_check("subdivision invariance",
                            "100 random lifts plus 20 non-uniform wall lifts, exact equality",
                            [&] { criterion_subdivision_invariance(rng); }));
    out.push_back(run_check("promise discipline",
                            std::to_string(queries.size()) +
                                " logged queries, chain condition and clique embedding",
                            [&] { criterion_promise_discipline(queries); }));
    out.push_back(run_check("treewidth ground truth",
                            "grids, cliques, 20 trees, 50 DP-vs-direct comparisons",
                            [&] { criterion_treewidth(rng); }));
    out.push_back(run_check("uncolouring identities",
                            "50 trials for each of the three reductions, subgraph-only queries",
                            [&] { criterion_uncolouring(rng); }));
    out.push_back(run_check("dichotomy fidelity",
                            "16 + 9 table cells, hom verdicts, inconsistent flags rejected",
                            [] { criterion_dichotomy(); }));
    return out;
}

std::vector<std::string> suite_names() {
    return {"graphcore", "invariants", "counters", "hombasis", "reductions", "classify"};
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed, int trials) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    if (name == "graphcore") suite_graphcore(rng, trials, out);
    else if (name == "invariants") suite_invariants(rng, trials, out);
    else if (name == "counters") suite_counters(rng, trials, out);
    else if (name == "hombasis") suite_hombasis(rng, std::max(1, trials / 5), out);
    else if (name == "reductions") suite_reductions(rng, std::max(1, trials / 5), out);
    else if (name == "classify") suite_classify(rng, trials, out);
    else if (name == "acceptance") return acceptance_suite(seed);
    else throw std::invalid_argument("unknown suite: " + name);
    return out;
}

} // namespace countlab
