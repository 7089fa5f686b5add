#pragma once

#include <gmpxx.h>

namespace bumpkit {

// Exact arbitrary-precision integer / rational. Tableau counts and polynomial
// coefficients exceed 64-bit range well below the sizes this library handles.
using Bigint = mpz_class;
using Rational = mpq_class;

inline Bigint factorial(unsigned long n) {
    Bigint r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Bigint binomial(unsigned long n, unsigned long k) {
    Bigint r;
    if (k > n) return r; // 0
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace bumpkit
