#include "countlab/hombasis.hpp"

#include "countlab/counting.hpp"
#include "countlab/errors.hpp"

#include <stdexcept>

namespace countlab {

namespace {

void require_no_isolated(const Graph& h, const char* what) {
    if (h.has_isolated_vertex())
        throw std::invalid_argument(std::string(what) + ": pattern has an isolated vertex");
}

} // namespace

RationalMatrix matrix_M(const Graph& h, std::size_t fracture_guard) {
    require_no_isolated(h, "matrix M");
    auto fractures = enumerate_fractures(h, fracture_guard);
    const int d = static_cast<int>(fractures.size());
    std::vector<ColouredGraph> fg;
    fg.reserve(d);
    for (const auto& f : fractures) fg.push_back(fractured_graph(h, f));
    RationalMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = Rational(coloured_hom_count(fg[i], fg[j]));
    return m;
}

RationalMatrix matrix_N(const Graph& h, int edge_guard) {
    auto subsets = enumerate_edge_subsets(h, edge_guard);
    const int d = static_cast<int>(subsets.size());
    std::vector<ColouredGraph> eg;
    eg.reserve(d);
    for (const auto& s : subsets) eg.push_back(edge_subgraph(h, s));
    RationalMatrix n(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) n.at(i, j) = Rational(coloured_hom_count(eg[i], eg[j]));
    return n;
}

Rational coarsest_fracture_coefficient(const Graph& h) {
    require_no_isolated(h, "coarsest fracture coefficient");
    Rational out(1);
    for (int v = 0; v < h.vertex_count(); ++v) {
        int d = h.degree(v);
        Rational term(factorial(d - 1));
        if ((d - 1) % 2 == 1) term = -term;
        out *= term;
    }
    return out;
}

MatchCoefficients match_coefficients(const Graph& h, std::size_t fracture_guard) {
    require_no_isolated(h, "match coefficients");
    auto fractures = enumerate_fractures(h, fracture_guard);
    RationalMatrix m = matrix_M(h, fracture_guard);

    std::vector<Rational> rhs;
    rhs.reserve(fractures.size());
    for (const auto& sigma : fractures)
        rhs.push_back(Rational(count_colourful_matchings(fractured_graph(h, sigma))));

    std::vector<Rational> a;
    try {
        a = solve_exact(m.transposed(), rhs);
    } catch (const SingularError&) {
        throw ConsistencyError("match coefficients: fracture matrix is singular");
    }
    if (a.front() != coarsest_fracture_coefficient(h))
        throw ConsistencyError(
            "match coefficients: coarsest coefficient disagrees with its closed form");
    return {std::move(fractures), std::move(a)};
}

IndsetCoefficients indset_coefficients(const Graph& h, int edge_guard) {
    auto subsets = enumerate_edge_subsets(h, edge_guard);
    RationalMatrix n = matrix_N(h, edge_guard);

    std::vector<Rational> rhs;
    rhs.reserve(subsets.size());
    for (const auto& b : subsets)
        rhs.push_back(Rational(count_colourful_indsets(edge_subgraph(h, b))));

    std::vector<Rational> a;
    try {
        a = solve_exact(n.transposed(), rhs);
    } catch (const SingularError&) {
        throw ConsistencyError("indset coefficients: edge-subset matrix is singular");
    }
    if (a.back() == 0)
        throw ConsistencyError("indset coefficients: full-edge-set coefficient vanishes");
    return {std::move(subsets), std::move(a)};
}

} // namespace countlab
