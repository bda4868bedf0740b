#pragma once

#include "countlab/fracture.hpp"
#include "countlab/graph.hpp"
#include "countlab/linalg.hpp"
#include "countlab/transforms.hpp"

#include <cstddef>
#include <vector>

namespace countlab {

// Interpolation core. The fracture matrix M has entries
//   M[rho, sigma] = #Hom((H # rho, c_rho) -> (H # sigma, c_sigma)),
// rows and columns ordered like enumerate_fractures (coarsest first). The
// edge-subset matrix N has entries
//   N[A, B] = #Hom((H[A], id) -> (H[B], id)),
// ordered like enumerate_edge_subsets (empty set first, full set last).
// Both are non-singular; the solvers below rely on that and treat singular
// systems as internal bugs.

RationalMatrix matrix_M(const Graph& h, std::size_t fracture_guard = 100000);
RationalMatrix matrix_N(const Graph& h, int edge_guard = 12);

// Product over vertices of (-1)^(deg-1) * (deg-1)!; the value the coarsest
// fracture's coefficient must take.
Rational coarsest_fracture_coefficient(const Graph& h);

struct MatchCoefficients {
    std::vector<Fracture> fractures;  // enumerate_fractures order
    std::vector<Rational> value;      // aligned with fractures
    const Rational& coarsest() const { return value.front(); }
};

struct IndsetCoefficients {
    std::vector<EdgeSubset> subsets;  // enumerate_edge_subsets order
    std::vector<Rational> value;      // aligned with subsets
    const Rational& full() const { return value.back(); }
};

// The unique weights a with, for every surjectively H-coloured host (G,c),
//   #colourful-matchings(G,c) = sum_rho a(rho) * #Hom((H#rho,c_rho) -> (G,c)).
// Solved from the transposed M system whose right-hand side is the
// brute-force colourful matching count of each fractured graph; the coarsest
// entry is checked against its closed form.
MatchCoefficients match_coefficients(const Graph& h, std::size_t fracture_guard = 100000);

// The unique weights a-hat with, for every surjectively H-coloured host,
//   #colourful-indsets(G,c) = sum_A a-hat(A) * #Hom((H[A],id) -> (G,c)).
// Solved from the transposed N system; the full-edge-set entry must be
// non-zero.
IndsetCoefficients indset_coefficients(const Graph& h, int edge_guard = 12);

} // namespace countlab
