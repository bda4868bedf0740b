#pragma once

#include <gmpxx.h>

namespace countlab {

// Exact arbitrary-precision counts and rationals. All counting results are
// BigCount; all linear algebra is over Rational. No floating point anywhere.
using BigCount = mpz_class;
using Rational = mpq_class;

inline BigCount factorial(unsigned n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigCount binomial(unsigned n, unsigned k) {
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace countlab
