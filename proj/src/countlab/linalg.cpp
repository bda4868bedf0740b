#include "countlab/linalg.hpp"

#include "countlab/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace countlab {

namespace {

// Row-scaled integer copy: each row multiplied by the LCM of its denominators.
// Returns the scale factors (solutions are unaffected; determinants divide).
std::vector<BigCount> to_integer_rows(const RationalMatrix& m, const std::vector<Rational>* rhs,
                                      std::vector<std::vector<BigCount>>& rows) {
    const int n = m.dim;
    const int cols = rhs ? n + 1 : n;
    rows.assign(n, std::vector<BigCount>(cols));
    std::vector<BigCount> scales(n);
    for (int i = 0; i < n; ++i) {
        BigCount lcm = 1;
        for (int j = 0; j < n; ++j) {
            BigCount den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        if (rhs) {
            BigCount den = (*rhs)[i].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        scales[i] = lcm;
        for (int j = 0; j < n; ++j) {
            Rational v = m.at(i, j) * Rational(lcm);
            rows[i][j] = v.get_num(); // exact: denominator divides lcm
        }
        if (rhs) {
            Rational v = (*rhs)[i] * Rational(lcm);
            rows[i][n] = v.get_num();
        }
    }
    return scales;
}

// Classifies a singular system by rational Gauss-Jordan rank comparison.
[[noreturn]] void classify_singular(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    const int n = m.dim;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = rhs[i];
    }
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (int j = col; j <= n; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    for (int r = rank; r < n; ++r)
        if (a[r][n] != 0)
            throw SingularError(SingularKind::inconsistent, "singular system: no solution");
    throw SingularError(SingularKind::underdetermined, "singular system: infinitely many solutions");
}

} // namespace

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::string RationalMatrix::to_text() const {
    std::ostringstream out;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (j) out << ' ';
            out << at(i, j).get_num().get_str() << '/' << at(i, j).get_den().get_str();
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Rational> solve_exact(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    const int n = m.dim;
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_exact: dimension mismatch");
    if (n == 0) return {};

    std::vector<std::vector<BigCount>> a;
    to_integer_rows(m, &rhs, a);

    // fraction-free forward elimination
    BigCount prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) classify_singular(m, rhs);
        std::swap(a[k], a[piv]);
        for (int i = k + 1; i < n; ++i) {
            // rows already reduced in this column stay unchanged when the
            // scale factor cancels
            if (a[i][k] == 0 && a[k][k] == prev) continue;
            for (int j = k + 1; j <= n; ++j) {
                BigCount t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    std::vector<Rational> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rational sum(a[i][n]);
        for (int j = i + 1; j < n; ++j) sum -= Rational(a[i][j]) * x[j];
        x[i] = sum / Rational(a[i][i]);
        x[i].canonicalize();
    }
    return x;
}

Rational determinant_exact(const RationalMatrix& m) {
    const int n = m.dim;
    if (n == 0) return Rational(1);
    std::vector<std::vector<BigCount>> a;
    std::vector<BigCount> scales = to_integer_rows(m, nullptr, a);

    BigCount prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0 && a[k][k] == prev) continue;
            for (int j = k + 1; j < n; ++j) {
                BigCount t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    // Bareiss leaves det(scaled matrix) in the last pivot
    Rational det(sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1]);
    for (const BigCount& s : scales) det /= Rational(s);
    det.canonicalize();
    return det;
}

} // namespace countlab
