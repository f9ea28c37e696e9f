#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace recurlab {

/// Arbitrary-precision integer scalar used by all exact sequence algebra.
using Int = mpz_class;

/// Exact rational scalar; carries shifted-sequence coefficients and
/// recovered initial values, so non-integer inputs stay exact.
using Rat = mpq_class;

/// Largest index magnitude accepted by term evaluation. Terms near the cap
/// already run to ~10^5 digits; anything beyond is almost certainly a bug
/// in the caller, so we fail loudly instead of eating all memory.
inline constexpr long long kIndexLimit = 1'000'000;

inline Rat make_rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rat rat_of(const Int& z) { return Rat(z); }

/// (-1)^n as an exact integer.
inline Int neg_one_pow(long long n) { return (n % 2 == 0) ? Int(1) : Int(-1); }

inline std::string to_decimal(const Int& z) { return z.get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace recurlab
