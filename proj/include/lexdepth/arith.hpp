#pragma once

#include <gmpxx.h>

#include "lexdepth/errors.hpp"

namespace lexdepth {

/// Exact arbitrary-precision integer used for all counts and sequence values.
using Int = mpz_class;

/**
 * Binomial coefficient with the combinatorial zero convention:
 * C(a, k) = 0 whenever k < 0 or a < k (in particular for negative a).
 */
inline Int binomial(const Int& top, long k) {
    if (k < 0 || top < k) return Int(0);
    Int r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Int binomial(long top, long k) { return binomial(Int(top), k); }

/// Narrows an Int to long, rejecting values that do not fit.
inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw DomainError("integer value too large for this context");
    return v.get_si();
}

}  // namespace lexdepth
