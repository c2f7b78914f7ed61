// Z[zeta_q] for prime q, stored on the reduced basis 1, zeta, ..., zeta^{q-2}.
// zeta^{q-1} never appears: it is rewritten as -(1 + zeta + ... + zeta^{q-2}),
// so equality is plain component-wise comparison. q = 3 is the Eisenstein ring
// (zeta^2 = -1 - zeta); q = 2 degenerates to Z with zeta = -1.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace qpartition {

inline bool is_small_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class cyclotomic_int {
public:
    explicit cyclotomic_int(std::uint32_t q, big_int constant = big_int(0))
        : q_(checked(q)), c_(static_cast<std::size_t>(q) - 1, big_int(0)) {
        c_[0] = std::move(constant);
    }

    cyclotomic_int(std::uint32_t q, std::vector<big_int> coeffs) : q_(checked(q)), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(q_) - 1)
            throw std::invalid_argument("cyclotomic_int: expected q-1 basis coefficients");
    }

    // zeta_q^e in reduced form; e is taken mod q, so negative exponents work.
    static cyclotomic_int root_power(std::uint32_t q, std::int64_t e) {
        cyclotomic_int z(q);
        std::int64_t r = e % q;
        if (r < 0) r += q;
        if (r == static_cast<std::int64_t>(q) - 1) {
            for (auto& c : z.c_) c = -1;
        } else {
            z.c_[static_cast<std::size_t>(r)] = 1;
        }
        return z;
    }

    std::uint32_t root_order() const { return q_; }
    const std::vector<big_int>& coeffs() const { return c_; }

    // Rational-integer extraction; any residual zeta component is an error.
    big_int to_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!qpartition::is_zero(c_[i]))
                throw not_rational_integer_error("cyclotomic value has a nonzero zeta^" +
                                                 std::to_string(i) + " component");
        return c_[0];
    }

    friend cyclotomic_int operator+(const cyclotomic_int& a, const cyclotomic_int& b) {
        a.require_same(b);
        cyclotomic_int r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend cyclotomic_int operator-(const cyclotomic_int& a, const cyclotomic_int& b) {
        a.require_same(b);
        cyclotomic_int r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend cyclotomic_int operator-(const cyclotomic_int& a) {
        cyclotomic_int r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend cyclotomic_int operator*(const cyclotomic_int& a, const cyclotomic_int& b) {
        a.require_same(b);
        const std::size_t n = a.c_.size();
        std::vector<big_int> raw(2 * n - 1, big_int(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (qpartition::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (qpartition::is_zero(b.c_[j])) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        // fold zeta^e, e >= q-1, back onto the basis via
        // zeta^e = -(zeta^{e-q+1} + ... + zeta^{e-1})
        for (std::size_t e = 2 * n - 2; e >= n && e < raw.size(); --e) {
            if (qpartition::is_zero(raw[e])) continue;
            const big_int t = std::move(raw[e]);
            raw[e] = 0;
            for (std::size_t i = 0; i < n; ++i) raw[e - n + i] -= t;
        }
        cyclotomic_int r(a.q_);
        for (std::size_t i = 0; i < n; ++i) r.c_[i] = std::move(raw[i]);
        return r;
    }

    cyclotomic_int& operator+=(const cyclotomic_int& o) { return *this = *this + o; }
    cyclotomic_int& operator-=(const cyclotomic_int& o) { return *this = *this - o; }
    cyclotomic_int& operator*=(const cyclotomic_int& o) { return *this = *this * o; }

    friend bool operator==(const cyclotomic_int&, const cyclotomic_int&) = default;

    friend std::ostream& operator<<(std::ostream& os, const cyclotomic_int& x) {
        os << x.c_[0];
        for (std::size_t i = 1; i < x.c_.size(); ++i) {
            if (qpartition::is_zero(x.c_[i])) continue;
            os << " + " << x.c_[i] << "*z^" << i;
        }
        return os;
    }

private:
    static std::uint32_t checked(std::uint32_t q) {
        if (!is_small_prime(q))
            throw std::invalid_argument("cyclotomic_int: q must be prime, got " + std::to_string(q));
        return q;
    }
    void require_same(const cyclotomic_int& o) const {
        if (q_ != o.q_)
            throw ring_mismatch_error("cyclotomic_int: root orders differ (" + std::to_string(q_) +
                                      " vs " + std::to_string(o.q_) + ")");
    }

    std::uint32_t q_;
    std::vector<big_int> c_;
};

inline cyclotomic_int zero_like(const cyclotomic_int& x) { return cyclotomic_int(x.root_order()); }
inline cyclotomic_int one_like(const cyclotomic_int& x) { return cyclotomic_int(x.root_order(), 1); }
inline bool is_zero(const cyclotomic_int& x) {
    for (const auto& c : x.coeffs())
        if (!is_zero(c)) return false;
    return true;
}
inline bool ring_compatible(const cyclotomic_int& a, const cyclotomic_int& b) {
    return a.root_order() == b.root_order();
}

// The only units this library ever inverts are +-zeta^e (series constant terms).
inline std::optional<cyclotomic_int> unit_inverse(const cyclotomic_int& x) {
    const std::uint32_t q = x.root_order();
    for (std::uint32_t e = 0; e < q; ++e) {
        const cyclotomic_int z = cyclotomic_int::root_power(q, e);
        if (x == z) return cyclotomic_int::root_power(q, static_cast<std::int64_t>(q) - e);
        if (x == -z) return -cyclotomic_int::root_power(q, static_cast<std::int64_t>(q) - e);
    }
    return std::nullopt;
}

} // namespace qpartition
