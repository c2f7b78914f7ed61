// Arbitrary-precision integers: GMP's mpz_class plus the ring-element hooks
// the series layer expects of every coefficient type.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qpartition {

using big_int = mpz_class;

inline big_int zero_like(const big_int&) { return big_int(0); }
inline big_int one_like(const big_int&) { return big_int(1); }
inline bool is_zero(const big_int& x) { return mpz_sgn(x.get_mpz_t()) == 0; }
inline bool ring_compatible(const big_int&, const big_int&) { return true; }

// Units of Z are +-1, each its own inverse.
inline std::optional<big_int> unit_inverse(const big_int& x) {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
}

inline std::string to_decimal(const big_int& x) { return x.get_str(); }

} // namespace qpartition
