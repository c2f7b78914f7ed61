// Named q-series over exact integers:
//
//   * Euler products E(x^j) = prod_{n>=1} (1 - x^{jn}) built sparsely from the
//     pentagonal-number theorem,
//   * q-Pochhammer products (c; x^s)_inf,
//   * Ramanujan's theta f(a,b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2} for monomial
//     arguments a = sign_a * x^{exp_a}, b = sign_b * x^{exp_b},
//   * the root-of-unity products prod_n prod_h (1 - x^n z^{nh})(1 - x^{2n} z^{nh})
//     in both direct (cyclotomic) and closed Euler-quotient form.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "limits.hpp"
#include "report.hpp"
#include "series.hpp"

namespace qpartition {

// w(k) = (3k^2 + k) / 2, the exponents of the pentagonal expansion of E(x).
inline std::int64_t pentagonal_exponent(std::int64_t k) { return k * (3 * k + 1) / 2; }

// E(x^j) truncated to `order`: sum_{k in Z} (-1)^k x^{j * w(k)}. Sparse by
// construction, O(sqrt(order / j)) nonzero terms.
inline truncated_series<big_int> euler_product(std::uint32_t j, std::size_t order) {
    if (j == 0) throw std::invalid_argument("euler_product: j must be >= 1");
    check_table_order(order);
    std::vector<big_int> c(order, big_int(0));
    c[0] = 1;
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t lo = pentagonal_exponent(-k);  // (3k^2 - k)/2, the smaller of the pair
        const std::int64_t hi = pentagonal_exponent(k);
        const int sign = (k % 2 == 0) ? 1 : -1;
        if (static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(lo) >= order) break;
        c[static_cast<std::size_t>(j * lo)] += sign;
        if (static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(hi) < order)
            c[static_cast<std::size_t>(j * hi)] += sign;
    }
    return truncated_series<big_int>(std::move(c));
}

// (sign_c * x^{exp_c}; x^{step})_inf = prod_{k>=0} (1 - sign_c x^{exp_c + k*step}).
// sign_c = +1 with exp_c = 0 would contribute a vanishing factor (1 - 1) and is
// rejected; sign_c = -1 with exp_c = 0 contributes the constant factor 2.
struct pochhammer_spec {
    int sign_c;
    std::uint32_t exp_c;
    std::uint32_t step;

    void validate() const {
        if (sign_c != 1 && sign_c != -1)
            throw std::invalid_argument("pochhammer_spec: sign must be +-1");
        if (step < 1) throw std::invalid_argument("pochhammer_spec: step must be >= 1");
        if (sign_c == 1 && exp_c == 0)
            throw std::invalid_argument("pochhammer_spec: (x^0; q)_inf has a vanishing factor");
    }

    std::string display() const {
        std::string a = (sign_c < 0 ? "-" : "");
        a += exp_c == 0 ? "1" : "x^" + std::to_string(exp_c);
        return "(" + a + "; x^" + std::to_string(step) + ")";
    }
};

inline truncated_series<big_int> pochhammer(const pochhammer_spec& spec, std::size_t order) {
    spec.validate();
    check_table_order(order);
    std::vector<big_int> c(order, big_int(0));
    c[0] = 1;
    for (std::uint64_t e = spec.exp_c; e < order; e += spec.step) {
        if (e == 0) {
            for (auto& v : c) v *= 2;  // factor (1 - (-1)) = 2
            continue;
        }
        // in place by (1 - sign x^e); descending targets never re-read a written slot
        for (std::size_t i = order - static_cast<std::size_t>(e); i-- > 0;) {
            if (is_zero(c[i])) continue;
            if (spec.sign_c > 0)
                c[i + e] -= c[i];
            else
                c[i + e] += c[i];
        }
    }
    return truncated_series<big_int>(std::move(c));
}

// f(sign_a x^{exp_a}, sign_b x^{exp_b}); exp_a + exp_b >= 1 keeps the bilateral
// sum convergent (the |ab| < 1 condition for monomial arguments).
struct theta_spec {
    int sign_a;
    std::uint32_t exp_a;
    int sign_b;
    std::uint32_t exp_b;

    void validate() const {
        if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
            throw std::invalid_argument("theta_spec: signs must be +-1");
        if (exp_a + exp_b < 1)
            throw std::invalid_argument("theta_spec: exp_a + exp_b must be >= 1");
    }

    std::string display() const {
        auto arg = [](int s, std::uint32_t e) {
            std::string r = s < 0 ? "-" : "";
            r += e == 0 ? "1" : (e == 1 ? "x" : "x^" + std::to_string(e));
            return r;
        };
        return "f(" + arg(sign_a, exp_a) + "," + arg(sign_b, exp_b) + ")";
    }
};

// Bilateral theta sum. The term at n has exponent
//   exp_a * n(n+1)/2 + exp_b * n(n-1)/2
// and sign sign_a^{n(n+1)/2} * sign_b^{n(n-1)/2}; both triangular factors are
// >= 0 for every integer n, so no negative exponents occur.
inline truncated_series<big_int> theta_f(const theta_spec& spec, std::size_t order) {
    spec.validate();
    check_table_order(order);
    std::vector<big_int> c(order, big_int(0));
    const auto term = [&](std::int64_t n) -> bool {
        const std::int64_t t1 = n * (n + 1) / 2;
        const std::int64_t t2 = n * (n - 1) / 2;
        const std::int64_t e = spec.exp_a * t1 + spec.exp_b * t2;
        if (e >= static_cast<std::int64_t>(order)) return false;
        int s = 1;
        if (t1 % 2 != 0) s *= spec.sign_a;
        if (t2 % 2 != 0) s *= spec.sign_b;
        c[static_cast<std::size_t>(e)] += s;
        return true;
    };
    // walk n = 0, -1, 1, -2, 2, ... until both tails have left the window;
    // the exponent grows monotonically in |n| past the first step, so once a
    // tail misses it never returns.
    for (std::int64_t t = 0;; ++t) {
        const bool up = term(t);
        const bool down = term(-t - 1);
        if (!up && !down) break;
    }
    return truncated_series<big_int>(std::move(c));
}

// Checks the triple-product factorization f(a,b) = (-a; ab)(-b; ab)(ab; ab)
// coefficient-wise; disagreement is a reported outcome, not an error.
inline verification_report jacobi_triple_check(const theta_spec& spec, std::size_t order) {
    spec.validate();
    detail::stopwatch timer;
    const std::uint32_t step = spec.exp_a + spec.exp_b;
    const pochhammer_spec p1{-spec.sign_a, spec.exp_a, step};
    const pochhammer_spec p2{-spec.sign_b, spec.exp_b, step};
    const pochhammer_spec p3{spec.sign_a * spec.sign_b, step, step};
    p1.validate();
    p2.validate();
    p3.validate();

    const auto lhs = theta_f(spec, order);
    const auto rhs = pochhammer(p1, order) * pochhammer(p2, order) * pochhammer(p3, order);

    verification_report report;
    report.claim = "jacobi " + spec.display();
    report.checked_range = "order " + std::to_string(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (lhs[i] == rhs[i]) continue;
        report.status = check_status::fail;
        report.first_counterexample =
            counterexample{static_cast<std::int64_t>(i),
                           {"theta side " + to_decimal(lhs[i]), "product side " + to_decimal(rhs[i])}};
        break;
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// E(x^j * zeta_q^h) as the literal product prod_{n>=1} (1 - x^{jn} zeta^{nh})
// over Z[zeta_q], truncated to `order`.
inline truncated_series<cyclotomic_int> euler_product_at_root(std::uint32_t q, std::uint32_t h,
                                                              std::uint32_t j, std::size_t order) {
    if (j == 0) throw std::invalid_argument("euler_product_at_root: j must be >= 1");
    check_table_order(order);
    std::vector<cyclotomic_int> c(order, cyclotomic_int(q));
    c[0] = cyclotomic_int(q, 1);
    for (std::uint64_t n = 1; j * n < order; ++n) {
        const auto root = cyclotomic_int::root_power(q, static_cast<std::int64_t>(n) * h);
        const std::size_t e = static_cast<std::size_t>(j * n);
        for (std::size_t i = order - e; i-- > 0;) {
            if (is_zero(c[i])) continue;
            c[i + e] -= root * c[i];
        }
    }
    return truncated_series<cyclotomic_int>(std::move(c));
}

enum class h_product_mode {
    literal,  // multiply every (1 - x^n zeta^{nh}) factor; nothing assumed
    grouped   // collapse each inner h-product to its closed gcd form first
};

// prod_{n>=1} prod_{h=1..q} (1 - x^n zeta^{nh})(1 - x^{2n} zeta^{nh}) for prime
// q, mapped back to integer coefficients. Every zeta component must cancel;
// a survivor raises not_rational_integer_error (it never should).
inline truncated_series<big_int> roots_product_direct(std::uint32_t q, std::size_t order,
                                                      h_product_mode mode = h_product_mode::literal) {
    if (!is_small_prime(q)) throw std::invalid_argument("roots_product_direct: q must be prime");
    if (q > 13) throw std::invalid_argument("roots_product_direct: q > 13 is too costly");
    check_table_order(order);

    if (mode == h_product_mode::grouped) {
        // prod_{h=1..q}(1 - y zeta^{nh}) = (1 - y^{q/d})^d with d = gcd(n, q),
        // applied at y = x^n and y = x^{2n}; integer arithmetic throughout.
        auto acc = truncated_series<big_int>::one(big_int(0), order);
        for (std::uint64_t n = 1; n < order; ++n) {
            const std::uint64_t d = std::gcd<std::uint64_t>(n, q);
            for (const std::uint64_t base : {n, 2 * n}) {
                const std::uint64_t e = base * (q / d);
                if (e >= order) continue;
                std::vector<big_int> f(order, big_int(0));
                f[0] = 1;
                f[static_cast<std::size_t>(e)] = -1;
                acc = acc * pow(truncated_series<big_int>(std::move(f)), static_cast<std::int64_t>(d));
            }
        }
        return acc;
    }

    if (q == 2) {
        // zeta_2 = -1 keeps everything in Z: h = 1 contributes (1 - (-1)^n x^n)
        // factors, h = 2 the plain Euler factors.
        std::vector<big_int> c(order, big_int(0));
        c[0] = 1;
        auto mul_factor = [&](std::uint64_t e, int sign) {
            if (e >= order) return;
            for (std::size_t i = order - static_cast<std::size_t>(e); i-- > 0;) {
                if (is_zero(c[i])) continue;
                if (sign > 0)
                    c[i + e] -= c[i];
                else
                    c[i + e] += c[i];
            }
        };
        for (std::uint64_t n = 1; n < order; ++n) {
            const int rn = (n % 2 == 0) ? 1 : -1;
            mul_factor(n, rn);      // (1 - (-1)^n x^n)
            mul_factor(2 * n, rn);  // (1 - (-1)^n x^{2n})
            mul_factor(n, 1);       // (1 - x^n)
            mul_factor(2 * n, 1);   // (1 - x^{2n})
        }
        return truncated_series<big_int>(std::move(c));
    }

    auto acc = truncated_series<cyclotomic_int>::one(cyclotomic_int(q), order);
    for (std::uint32_t h = 1; h <= q; ++h) {
        acc = acc * euler_product_at_root(q, h, 1, order);
        acc = acc * euler_product_at_root(q, h, 2, order);
    }
    return to_integer(acc);
}

// The closed form of the same double product:
//   E(x^q)^{q+1} E(x^{2q})^{q+1} / (E(x^{q^2}) E(x^{2q^2})).
inline truncated_series<big_int> roots_product_closed(std::uint32_t q, std::size_t order) {
    if (!is_small_prime(q)) throw std::invalid_argument("roots_product_closed: q must be prime");
    check_table_order(order);
    const auto num = pow(euler_product(q, order), q + 1) * pow(euler_product(2 * q, order), q + 1);
    const auto den = euler_product(q * q, order) * euler_product(2 * q * q, order);
    return num * inverse(den);
}

// prod_{h=1..k} (1 - x zeta_k^{nh})(1 - x^2 zeta_k^{nh}) in closed form:
// (1 - x^{k/d})^d (1 - x^{2k/d})^d with d = gcd(n, k). Valid for any k >= 1.
inline truncated_series<big_int> finite_root_product(std::uint32_t k, std::uint32_t n,
                                                     std::size_t order) {
    if (k == 0 || n == 0) throw std::invalid_argument("finite_root_product: k, n must be >= 1");
    check_table_order(order);
    const std::uint32_t d = std::gcd(n, k);
    auto binomial = [&](std::uint64_t e) {
        std::vector<big_int> f(order, big_int(0));
        f[0] = 1;
        if (e < order) f[static_cast<std::size_t>(e)] = -1;
        return truncated_series<big_int>(std::move(f));
    };
    return pow(binomial(k / d), d) * pow(binomial(2 * (k / d)), d);
}

// The same finite product evaluated literally over Z[zeta_k]; prime k only.
inline truncated_series<cyclotomic_int> finite_root_product_direct(std::uint32_t k, std::uint32_t n,
                                                                   std::size_t order) {
    if (!is_small_prime(k))
        throw std::invalid_argument("finite_root_product_direct: k must be prime");
    if (n == 0) throw std::invalid_argument("finite_root_product_direct: n must be >= 1");
    check_table_order(order);
    const auto binomial_at = [&](std::size_t e, const cyclotomic_int& root) {
        std::vector<cyclotomic_int> f(order, cyclotomic_int(k));
        f[0] = cyclotomic_int(k, 1);
        if (e < order) f[e] = -root;
        return truncated_series<cyclotomic_int>(std::move(f));
    };
    auto acc = truncated_series<cyclotomic_int>::one(cyclotomic_int(k), order);
    for (std::uint32_t h = 1; h <= k; ++h) {
        const auto root = cyclotomic_int::root_power(k, static_cast<std::int64_t>(n) * h);
        acc = acc * binomial_at(1, root) * binomial_at(2, root);
    }
    return acc;
}

} // namespace qpartition
