#include "countlab/reductions.hpp"

#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/hombasis.hpp"
#include "countlab/linalg.hpp"
#include "countlab/transforms.hpp"

#include <numeric>
#include <stdexcept>

namespace countlab {

namespace {

void check_pipeline_input(const ColouredGraph& cg, int r, const char* what) {
    if (r < 0) throw std::invalid_argument(std::string(what) + ": negative r");
    if (!cg.surjective())
        throw std::invalid_argument(std::string(what) + ": colouring must be surjective");
    if (cg.pattern().has_isolated_vertex())
        throw std::invalid_argument(std::string(what) + ": pattern has an isolated vertex");
}

BigCount exact_integer(const Rational& value, const char* what) {
    if (value.get_den() != 1)
        throw ConsistencyError(std::string(what) + ": recovered value is not an integer");
    return value.get_num();
}

} // namespace

CountingOracle matching_pipeline_oracle(int r, Guards guards) {
    return brute_force_oracle(OracleProblem::colourful_matchings, SubdividedCliqueSubgraphs{r},
                              guards);
}

CountingOracle indset_pipeline_oracle(Graph lifted_host, Guards guards) {
    return brute_force_oracle(OracleProblem::colourful_indsets,
                              EdgeSubgraphsOf{std::move(lifted_host)}, guards);
}

BigCount recover_cphom_via_matchings(const ColouredGraph& cg, int r, CountingOracle& oracle,
                                     const Guards& guards) {
    check_pipeline_input(cg, r, "matching pipeline");
    ColouredGraph lifted = lift_colouring(cg, r);
    const Graph& hr = lifted.pattern();

    auto fractures = enumerate_fractures(hr, guards.fractures);
    const int k = hr.edge_count();

    std::vector<Rational> rhs;
    rhs.reserve(fractures.size());
    for (const auto& sigma : fractures) {
        ColouredGraph t = tensor(lifted, fractured_graph(hr, sigma));
        OracleQuery q{OracleProblem::colourful_matchings, t.host(), t, std::nullopt, {}, k};
        rhs.push_back(Rational(oracle.ask(q)));
    }

    RationalMatrix m = matrix_M(hr, guards.fractures);
    std::vector<Rational> coeff;
    try {
        coeff = solve_exact(m.transposed(), rhs);
    } catch (const SingularError&) {
        throw ConsistencyError("matching pipeline: fracture system is singular");
    }
    return exact_integer(coeff.front() / coarsest_fracture_coefficient(hr), "matching pipeline");
}

BigCount recover_cphom_via_indsets(const ColouredGraph& cg, int r, CountingOracle& oracle,
                                   const Guards& guards) {
    check_pipeline_input(cg, r, "indset pipeline");
    ColouredGraph lifted = lift_colouring(cg, r);
    const Graph& hr = lifted.pattern();

    auto subsets = enumerate_edge_subsets(hr, guards.edge_subsets);
    const int k = hr.vertex_count();

    std::vector<Rational> rhs;
    rhs.reserve(subsets.size());
    for (const auto& b : subsets) {
        ColouredGraph t = tensor(lifted, edge_subgraph(hr, b));
        OracleQuery q{OracleProblem::colourful_indsets, t.host(), t, std::nullopt, {}, k};
        rhs.push_back(Rational(oracle.ask(q)));
    }

    RationalMatrix n = matrix_N(hr, guards.edge_subsets);
    std::vector<Rational> coeff;
    try {
        coeff = solve_exact(n.transposed(), rhs);
    } catch (const SingularError&) {
        throw ConsistencyError("indset pipeline: edge-subset system is singular");
    }
    IndsetCoefficients ahat = indset_coefficients(hr, guards.edge_subsets);
    return exact_integer(coeff.back() / ahat.full(), "indset pipeline");
}

namespace {
void check_subset_width(int k, const char* what) {
    if (k > 24)
        throw GuardError(std::string(what) + ": 2^" + std::to_string(k) +
                         " colour subsets exceed the enumeration guard");
}
} // namespace

BigCount colourful_from_uncoloured_matchings(const ColouredGraph& cg, CountingOracle& oracle) {
    const Graph& h = cg.pattern();
    const Graph& g = cg.host();
    const int k = h.edge_count();
    check_subset_width(k, "colourful matchings via inclusion-exclusion");

    // edge colour of a host edge = index of its pattern edge
    std::vector<int> edge_colour(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        edge_colour[e] = h.edge_index(cg.colour_of(u), cg.colour_of(v));
    }
    std::vector<int> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);

    BigCount total = 0;
    for (unsigned long s = 0; s < (1ul << k); ++s) {
        std::vector<Edge> kept;
        for (int e = 0; e < g.edge_count(); ++e)
            if (s >> edge_colour[e] & 1) kept.push_back(g.edges()[e]);
        Graph restricted(g.vertex_count(), std::move(kept));
        OracleQuery q{OracleProblem::matchings, std::move(restricted), std::nullopt, std::nullopt,
                      identity, k};
        BigCount term = oracle.ask(q);
        if ((k - __builtin_popcountl(s)) % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

BigCount colourful_from_uncoloured_indsets(const ColouredGraph& cg, CountingOracle& oracle) {
    const Graph& g = cg.host();
    const int k = cg.pattern().vertex_count();
    check_subset_width(k, "colourful indsets via inclusion-exclusion");

    BigCount total = 0;
    for (unsigned long s = 0; s < (1ul << k); ++s) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (s >> cg.colour_of(v) & 1) keep.push_back(v);
        std::vector<int> pos(g.vertex_count(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (const auto& [u, v] : g.edges())
            if (pos[u] >= 0 && pos[v] >= 0)
                edges.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v])});
        Graph induced(static_cast<int>(keep.size()), std::move(edges));
        OracleQuery q{OracleProblem::indsets, std::move(induced), std::nullopt, std::nullopt, keep,
                      k};
        BigCount term = oracle.ask(q);
        if ((k - __builtin_popcountl(s)) % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

BigCount cphom_from_hom(const ColouredGraph& cg, CountingOracle& oracle, const Guards& guards) {
    if (!cg.surjective())
        throw std::invalid_argument("cphom from hom: colouring must be surjective");
    const Graph& h = cg.pattern();
    const Graph& g = cg.host();
    const int k = h.vertex_count();
    check_subset_width(k, "cphom via inclusion-exclusion");

    BigCount colourful = 0;
    for (unsigned long s = 0; s < (1ul << k); ++s) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (s >> cg.colour_of(v) & 1) keep.push_back(v);
        std::vector<int> pos(g.vertex_count(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (const auto& [u, v] : g.edges())
            if (pos[u] >= 0 && pos[v] >= 0)
                edges.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v])});
        Graph induced(static_cast<int>(keep.size()), std::move(edges));
        OracleQuery q{OracleProblem::hom, std::move(induced), std::nullopt, h, keep, k};
        BigCount term = oracle.ask(q);
        if ((k - __builtin_popcountl(s)) % 2 == 1) colourful -= term;
        else colourful += term;
    }
    BigCount aut = automorphism_count(h, guards.automorphism_vertices);
    if (colourful % aut != 0)
        throw ConsistencyError("cphom from hom: colourful count not divisible by automorphisms");
    return colourful / aut;
}

WallLift wall_lift(int k, const std::vector<int>& divisors, int r, const ColouredGraph& cg) {
    if (r <= 0) throw std::invalid_argument("wall lift: r must be positive");
    Graph wall = make_wall(k, k);
    if (!(cg.pattern() == wall))
        throw std::invalid_argument("wall lift: pattern is not the height-" + std::to_string(k) +
                                    " wall");
    if (static_cast<int>(divisors.size()) != wall.edge_count())
        throw std::invalid_argument("wall lift: need one divisor per wall edge");
    for (int d : divisors)
        if (d <= 0) throw std::invalid_argument("wall lift: divisors must be positive");
    if (!cg.surjective())
        throw std::invalid_argument("wall lift: colouring must be surjective");

    std::vector<int> counts(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) counts[i] = divisors[i] * r;
    ColouredGraph lifted = lift_colouring_each(cg, counts);
    return {lifted.pattern(), std::move(lifted)};
}

} // namespace countlab
