// Truncated formal power series in one variable over an exact coefficient ring.
//
// A series of order N retains the coefficients of x^0 .. x^{N-1}. Binary
// operations truncate to the smaller operand order; no operation ever reads or
// writes an exponent at or beyond the order. Series are immutable values and
// every operation here is a pure function.
#pragma once

#include <concepts>
#include <type_traits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "modint.hpp"

namespace qpartition {

template <typename R>
concept ring_element =
    std::copyable<R> && std::equality_comparable<R> &&
    requires(R& m, const R& a, const R& b) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        m += a;
        m -= a;
        { zero_like(a) } -> std::convertible_to<R>;
        { one_like(a) } -> std::convertible_to<R>;
        { is_zero(a) } -> std::same_as<bool>;
        { ring_compatible(a, b) } -> std::same_as<bool>;
        { unit_inverse(a) } -> std::same_as<std::optional<R>>;
    };

// Exponent class r mod q; the support set of a "type r mod q" series.
struct progression {
    std::uint32_t modulus;
    std::uint32_t residue;

    progression(std::uint32_t q, std::uint32_t r) : modulus(q), residue(r) {
        if (q < 2) throw std::invalid_argument("progression: modulus must be >= 2");
        if (r >= q) throw std::invalid_argument("progression: residue must satisfy r < modulus");
    }
};

enum class extract_mode { keep, compress };

template <ring_element R>
class truncated_series {
public:
    explicit truncated_series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("truncated_series: need at least one coefficient");
        check_order(c_.size());
        for (const auto& x : c_)
            if (!ring_compatible(x, c_.front()))
                throw ring_mismatch_error("truncated_series: coefficients from different rings");
    }

    static truncated_series one(const R& like, std::size_t order) {
        check_order(order);
        std::vector<R> c(order, zero_like(like));
        c[0] = one_like(like);
        return truncated_series(std::move(c));
    }

    static truncated_series zeroes(const R& like, std::size_t order) {
        check_order(order);
        return truncated_series(std::vector<R>(order, zero_like(like)));
    }

    std::size_t order() const { return c_.size(); }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& front() const { return c_.front(); }

    friend bool operator==(const truncated_series& a, const truncated_series& b) {
        return a.c_ == b.c_;  // same order and element-wise equal; element == carries the ring
    }

private:
    std::vector<R> c_;
};

namespace detail {

template <ring_element R>
void require_same_ring(const truncated_series<R>& a, const truncated_series<R>& b) {
    if (!ring_compatible(a.front(), b.front()))
        throw ring_mismatch_error("series operands belong to different rings");
}

} // namespace detail

template <ring_element R>
truncated_series<R> operator+(const truncated_series<R>& a, const truncated_series<R>& b) {
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a[i] + b[i]);
    return truncated_series<R>(std::move(out));
}

template <ring_element R>
truncated_series<R> operator-(const truncated_series<R>& a, const truncated_series<R>& b) {
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a[i] - b[i]);
    return truncated_series<R>(std::move(out));
}

template <ring_element R>
truncated_series<R> operator-(const truncated_series<R>& s) {
    std::vector<R> out;
    out.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.push_back(-s[i]);
    return truncated_series<R>(std::move(out));
}

template <ring_element R>
truncated_series<R> scale(const truncated_series<R>& s, const std::type_identity_t<R>& k) {
    if (!ring_compatible(s.front(), k))
        throw ring_mismatch_error("scale: scalar from a different ring");
    std::vector<R> out;
    out.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.push_back(s[i] * k);
    return truncated_series<R>(std::move(out));
}

// Cauchy product, truncated to the smaller order. Zero coefficients are
// skipped, so products against sparse series cost O(support * order).
template <ring_element R>
truncated_series<R> operator*(const truncated_series<R>& a, const truncated_series<R>& b) {
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n, zero_like(a.front()));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j + i < n; ++j) {
            if (is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return truncated_series<R>(std::move(out));
}

// Multiplicative inverse to the series' own order, by the forward recurrence
//   t_0 = c_0^{-1},  t_n = -c_0^{-1} * sum_{k=1..n} c_k t_{n-k}.
template <ring_element R>
truncated_series<R> inverse(const truncated_series<R>& s) {
    const auto inv0 = unit_inverse(s.front());
    if (!inv0)
        throw not_invertible_error("inverse: constant term is not a unit of the coefficient ring");
    const std::size_t n = s.order();
    std::vector<R> t;
    t.reserve(n);
    t.push_back(*inv0);
    for (std::size_t m = 1; m < n; ++m) {
        R acc = zero_like(s.front());
        for (std::size_t k = 1; k <= m; ++k) {
            if (is_zero(s[k])) continue;
            acc += s[k] * t[m - k];
        }
        t.push_back(-(*inv0 * acc));
    }
    return truncated_series<R>(std::move(t));
}

template <ring_element R>
truncated_series<R> pow(const truncated_series<R>& s, std::int64_t e) {
    if (e < 0) return pow(inverse(s), -e);
    auto result = truncated_series<R>::one(s.front(), s.order());
    auto base = s;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

// x -> x^k substitution: output coefficient at k*n is the input coefficient at
// n; everything else is zero. The order stays that of the input.
template <ring_element R>
truncated_series<R> substitute_power(const truncated_series<R>& s, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be >= 1");
    if (k == 1) return s;
    const std::size_t n = s.order();
    std::vector<R> out(n, zero_like(s.front()));
    for (std::size_t i = 0; i * k < n; ++i) out[i * k] = s[i];
    return truncated_series<R>(std::move(out));
}

// Multiply by x^t, truncating at the original order.
template <ring_element R>
truncated_series<R> shift(const truncated_series<R>& s, std::size_t t) {
    if (t == 0) return s;
    const std::size_t n = s.order();
    std::vector<R> out(n, zero_like(s.front()));
    for (std::size_t i = 0; i + t < n; ++i) out[i + t] = s[i];
    return truncated_series<R>(std::move(out));
}

template <ring_element R>
truncated_series<R> truncate(const truncated_series<R>& s, std::size_t new_order) {
    if (new_order == 0 || new_order > s.order())
        throw std::invalid_argument("truncate: new order must be in [1, order]");
    std::vector<R> out(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(new_order));
    return truncated_series<R>(std::move(out));
}

// Zero out every coefficient whose exponent is not congruent to p.residue mod
// p.modulus; order unchanged.
template <ring_element R>
truncated_series<R> keep_progression(const truncated_series<R>& s, progression p) {
    std::vector<R> out(s.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (i % p.modulus != p.residue) out[i] = zero_like(s.front());
    return truncated_series<R>(std::move(out));
}

// Take the subseries supported on exponents q*n + r and relabel x^{q*n+r} as
// x^n; output order is ceil((order - r) / q). This also absorbs the division
// by x^r, so no negative exponents ever arise.
template <ring_element R>
truncated_series<R> compress_progression(const truncated_series<R>& s, progression p) {
    if (p.residue >= s.order())
        throw std::invalid_argument("compress_progression: residue exceeds series order");
    const std::size_t m = (s.order() - p.residue + p.modulus - 1) / p.modulus;
    std::vector<R> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.push_back(s[p.residue + i * p.modulus]);
    return truncated_series<R>(std::move(out));
}

template <ring_element R>
truncated_series<R> extract_progression(const truncated_series<R>& s, progression p, extract_mode mode) {
    return mode == extract_mode::keep ? keep_progression(s, p) : compress_progression(s, p);
}

// ---- ring maps (Z -> Z/m, Z -> Z[zeta_q], Z[zeta_q] -> Z) ----

inline truncated_series<mod_int> to_mod(const truncated_series<big_int>& s, std::uint64_t modulus) {
    std::vector<mod_int> out;
    out.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.push_back(mod_int::reduce(s[i], modulus));
    return truncated_series<mod_int>(std::move(out));
}

inline truncated_series<cyclotomic_int> to_cyclotomic(const truncated_series<big_int>& s, std::uint32_t q) {
    std::vector<cyclotomic_int> out;
    out.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.emplace_back(q, s[i]);
    return truncated_series<cyclotomic_int>(std::move(out));
}

// Fails with not_rational_integer_error if any coefficient kept a zeta component.
inline truncated_series<big_int> to_integer(const truncated_series<cyclotomic_int>& s) {
    std::vector<big_int> out;
    out.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.push_back(s[i].to_integer());
    return truncated_series<big_int>(std::move(out));
}

} // namespace qpartition
