// Z/m with a runtime modulus; values are canonical representatives in [0, m).
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bigint.hpp"
#include "errors.hpp"

namespace qpartition {

class mod_int {
public:
    mod_int(std::uint64_t modulus, std::int64_t value) : m_(checked(modulus)) {
        const auto m = static_cast<std::int64_t>(m_);
        std::int64_t r = value % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    static mod_int reduce(const big_int& value, std::uint64_t modulus) {
        mod_int r(modulus, 0);
        r.v_ = mpz_fdiv_ui(value.get_mpz_t(), modulus);
        return r;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return m_; }

    friend mod_int operator+(const mod_int& a, const mod_int& b) {
        a.require_same(b);
        std::uint64_t r = a.v_ + b.v_;  // both < m <= 2^62, no wrap
        if (r >= a.m_) r -= a.m_;
        return with(a.m_, r);
    }
    friend mod_int operator-(const mod_int& a, const mod_int& b) {
        a.require_same(b);
        return with(a.m_, a.v_ >= b.v_ ? a.v_ - b.v_ : a.m_ - (b.v_ - a.v_));
    }
    friend mod_int operator*(const mod_int& a, const mod_int& b) {
        a.require_same(b);
        const auto p = static_cast<unsigned __int128>(a.v_) * b.v_;
        return with(a.m_, static_cast<std::uint64_t>(p % a.m_));
    }
    friend mod_int operator-(const mod_int& a) {
        return with(a.m_, a.v_ == 0 ? 0 : a.m_ - a.v_);
    }
    mod_int& operator+=(const mod_int& o) { return *this = *this + o; }
    mod_int& operator-=(const mod_int& o) { return *this = *this - o; }
    mod_int& operator*=(const mod_int& o) { return *this = *this * o; }

    friend bool operator==(const mod_int&, const mod_int&) = default;

    friend std::ostream& operator<<(std::ostream& os, const mod_int& x) {
        return os << x.v_ << " (mod " << x.m_ << ")";
    }

private:
    static std::uint64_t checked(std::uint64_t m) {
        if (m < 2) throw std::invalid_argument("mod_int: modulus must be >= 2");
        if (m > (std::uint64_t{1} << 62)) throw std::invalid_argument("mod_int: modulus too large");
        return m;
    }
    void require_same(const mod_int& o) const {
        if (m_ != o.m_)
            throw ring_mismatch_error("mod_int: moduli differ (" + std::to_string(m_) + " vs " +
                                      std::to_string(o.m_) + ")");
    }
    static mod_int with(std::uint64_t m, std::uint64_t v) {
        mod_int r(m, 0);
        r.v_ = v;
        return r;
    }

    std::uint64_t m_;
    std::uint64_t v_;
};

inline mod_int zero_like(const mod_int& x) { return mod_int(x.modulus(), 0); }
inline mod_int one_like(const mod_int& x) { return mod_int(x.modulus(), 1); }
inline bool is_zero(const mod_int& x) { return x.value() == 0; }
inline bool ring_compatible(const mod_int& a, const mod_int& b) { return a.modulus() == b.modulus(); }

// Extended Euclid; a unit iff gcd(v, m) = 1.
inline std::optional<mod_int> unit_inverse(const mod_int& x) {
    std::int64_t r0 = static_cast<std::int64_t>(x.modulus()), r1 = static_cast<std::int64_t>(x.value());
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) return std::nullopt;
    return mod_int(x.modulus(), s0);
}

} // namespace qpartition
