#pragma once

#include "countlab/bigint.hpp"

#include <string>
#include <vector>

namespace countlab {

// Dense square matrix of exact rationals, row-major.
struct RationalMatrix {
    int dim = 0;
    std::vector<Rational> cells;

    RationalMatrix() = default;
    explicit RationalMatrix(int d) : dim(d), cells(static_cast<std::size_t>(d) * d, Rational(0)) {}

    Rational& at(int i, int j) { return cells[static_cast<std::size_t>(i) * dim + j]; }
    const Rational& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * dim + j]; }
    RationalMatrix transposed() const;
    // One line per row, entries as num/den separated by spaces.
    std::string to_text() const;
};

// Exact solve of M x = rhs by fraction-free (Bareiss) elimination after
// clearing row denominators. Singular systems raise SingularError whose kind
// distinguishes inconsistent from underdetermined (decided by a rational
// Gauss-Jordan rank analysis).
std::vector<Rational> solve_exact(const RationalMatrix& m, const std::vector<Rational>& rhs);

Rational determinant_exact(const RationalMatrix& m);

} // namespace countlab
