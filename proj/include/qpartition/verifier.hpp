// Orchestrates every check the library ships: progression-type decomposition,
// the root-of-unity factor identities, theta closed forms, the generating
// function of a(3n+2), congruence scans, the convexity inequality, and the
// exp(pi sqrt(n)) growth bound. All series checks compare coefficients
// exactly; the growth bound uses directed rounding so a pass is rigorous.
#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "partitions.hpp"
#include "qfunctions.hpp"
#include "report.hpp"
#include "series.hpp"

namespace qpartition {

namespace detail {

template <ring_element R>
std::optional<std::size_t> first_mismatch(const truncated_series<R>& a, const truncated_series<R>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i)
        if (!(a[i] == b[i])) return i;
    return std::nullopt;
}

inline verification_report series_equal_report(std::string claim, std::string range,
                                               const truncated_series<big_int>& lhs,
                                               const truncated_series<big_int>& rhs,
                                               const stopwatch& timer) {
    verification_report report;
    report.claim = std::move(claim);
    report.checked_range = std::move(range);
    if (const auto i = first_mismatch(lhs, rhs)) {
        report.status = check_status::fail;
        report.first_counterexample = counterexample{
            static_cast<std::int64_t>(*i), {"lhs " + to_decimal(lhs[*i]), "rhs " + to_decimal(rhs[*i])}};
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

} // namespace detail

// E(x)E(x^2) splits into the three progression classes mod 3; checks the
// partition of unity and the leading terms of each class:
//   I0 = 1 + x^3 + x^6 - 2x^9 - ..., I1 = -x + x^10 + ..., I2 = -2x^2 + 2x^5 - ...
inline verification_report verify_type_decomposition(std::size_t order) {
    detail::stopwatch timer;
    verification_report report;
    report.claim = "type-decomposition";
    report.checked_range = "order " + std::to_string(order);

    const auto product = euler_product(1, order) * euler_product(2, order);
    const auto i0 = keep_progression(product, progression(3, 0));
    const auto i1 = keep_progression(product, progression(3, 1));
    const auto i2 = keep_progression(product, progression(3, 2));

    const auto fail = [&](std::int64_t n, std::string lhs, std::string rhs) {
        report.status = check_status::fail;
        report.first_counterexample = counterexample{n, {std::move(lhs), std::move(rhs)}};
        report.elapsed_ms = timer.elapsed_ms();
        return report;
    };

    if (!(i0 + i1 + i2 == product)) {
        const auto i = detail::first_mismatch(i0 + i1 + i2, product);
        return fail(static_cast<std::int64_t>(*i), "sum of classes", "E(x)E(x^2)");
    }

    static constexpr int opening[12] = {1, -1, -2, 1, 0, 2, 1, 0, 0, -2, 1, -2};
    for (std::size_t i = 0; i < order && i < 12; ++i)
        if (product[i] != opening[i])
            return fail(static_cast<std::int64_t>(i), "E(x)E(x^2) " + to_decimal(product[i]),
                        "expected " + std::to_string(opening[i]));

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// Per-factor identity behind the roots-of-unity filter at q = 3: with
// z = zeta_3 and I_k the progression classes of F(x) = E(x)E(x^2),
//   F(x z^h) = E(x z^h) E(x^2 z^{2h}) = I0 + I1 z^h + I2 z^{2h}.
// Both Euler factors are expanded as literal products over Z[zeta_3].
inline verification_report verify_eisenstein_factor(std::uint32_t h, std::size_t order) {
    if (h != 1 && h != 2) throw std::invalid_argument("verify_eisenstein_factor: h must be 1 or 2");
    detail::stopwatch timer;
    verification_report report;
    report.claim = "eisenstein-factor";
    report.checked_range = "order " + std::to_string(order) + ", h = " + std::to_string(h);

    const auto product = euler_product(1, order) * euler_product(2, order);
    const auto lhs = euler_product_at_root(3, h, 1, order) *
                     euler_product_at_root(3, (2 * h) % 3, 2, order);

    auto rhs = to_cyclotomic(keep_progression(product, progression(3, 0)), 3);
    rhs = rhs + scale(to_cyclotomic(keep_progression(product, progression(3, 1)), 3),
                      cyclotomic_int::root_power(3, h));
    rhs = rhs + scale(to_cyclotomic(keep_progression(product, progression(3, 2)), 3),
                      cyclotomic_int::root_power(3, 2 * h));

    if (const auto i = detail::first_mismatch(lhs, rhs)) {
        report.status = check_status::fail;
        report.first_counterexample = counterexample{static_cast<std::int64_t>(*i),
                                                     {"coefficient of x^" + std::to_string(*i)}};
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// Both h-factors at once, as the CLI claim.
inline verification_report verify_eisenstein_factors(std::size_t order) {
    detail::stopwatch timer;
    for (const std::uint32_t h : {1u, 2u}) {
        auto report = verify_eisenstein_factor(h, order);
        if (!report.passed()) {
            report.elapsed_ms = timer.elapsed_ms();
            return report;
        }
    }
    verification_report report;
    report.claim = "eisenstein-factor";
    report.checked_range = "order " + std::to_string(order) + ", h in {1,2}";
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// The theta-function closed forms of the progression classes of E(x)E(x^2):
//   I0 = f(x^3,x^6) f(-x^9,-x^9)
//   I1 = -x f(x^3,x^6) f(-x^15,-x^3) = -x E(x^9) E(x^18)
//   I2 = -x^2 f(1,x^9) f(-x^15,-x^3) = -2x^2 psi(x^9) f(-x^15,-x^3)
//   f(x^3,x^6) f(-x^3,-x^15) = E(x^9) E(x^18)
//   I0 I2 = -2 I1^2, hence B2 = I1^2 - I2 I0 = 3 I1^2.
inline verification_report verify_theta_forms(std::size_t order) {
    if (order < 20) throw std::invalid_argument("verify_theta_forms: order must be >= 20");
    detail::stopwatch timer;
    verification_report report;
    report.claim = "theta-forms";
    report.checked_range = "order " + std::to_string(order);

    const auto product = euler_product(1, order) * euler_product(2, order);
    const auto i0 = keep_progression(product, progression(3, 0));
    const auto i1 = keep_progression(product, progression(3, 1));
    const auto i2 = keep_progression(product, progression(3, 2));

    const auto f36 = theta_f({1, 3, 1, 6}, order);
    const auto phi_m9 = theta_f({-1, 9, -1, 9, }, order);
    const auto f_m15_m3 = theta_f({-1, 15, -1, 3}, order);
    const auto f_1_9 = theta_f({1, 0, 1, 9}, order);
    const auto psi9 = theta_f({1, 9, 1, 27}, order);
    const auto eta_pair = euler_product(9, order) * euler_product(18, order);
    const big_int two(2), three(3);

    const std::pair<const char*, bool> checks[] = {
        {"I0 = f(x^3,x^6) f(-x^9,-x^9)", i0 == f36 * phi_m9},
        {"I1 = -x f(x^3,x^6) f(-x^15,-x^3)", i1 == -shift(f36 * f_m15_m3, 1)},
        {"I2 = -x^2 f(1,x^9) f(-x^15,-x^3)", i2 == -shift(f_1_9 * f_m15_m3, 2)},
        {"f(1,x^9) = 2 psi(x^9)", f_1_9 == scale(psi9, two)},
        {"f(x^3,x^6) f(-x^3,-x^15) = E(x^9) E(x^18)",
         f36 * theta_f({-1, 3, -1, 15}, order) == eta_pair},
        {"I1 = -x E(x^9) E(x^18)", i1 == -shift(eta_pair, 1)},
        {"I0 I2 = -2 I1^2", i0 * i2 == scale(i1 * i1, -two)},
        {"B2 = I1^2 - I2 I0 = 3 I1^2", i1 * i1 - i2 * i0 == scale(i1 * i1, three)},
    };
    for (const auto& [name, ok] : checks) {
        if (ok) continue;
        report.status = check_status::fail;
        report.first_counterexample = counterexample{-1, {std::string("identity failed: ") + name}};
        break;
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// The headline generating function: sum_m a(3m+2) x^m = 3 E(x^3)^3 E(x^6)^3 /
// (E(x)^4 E(x^2)^4). Left side from the exact table by compress-extraction,
// right side from Euler products; every coefficient is a multiple of 3.
inline verification_report verify_cubic_gf(std::size_t order) {
    if (order < 2) throw std::invalid_argument("verify_cubic_gf: order must be >= 2");
    detail::stopwatch timer;

    auto table = cubic_table(3 * order + 2);
    const truncated_series<big_int> cubic(std::move(table.values));
    const auto lhs = compress_progression(cubic, progression(3, 2));

    const auto num = pow(euler_product(3, order), 3) * pow(euler_product(6, order), 3);
    const auto den = pow(euler_product(1, order), 4) * pow(euler_product(2, order), 4);
    const auto rhs = scale(num * inverse(den), big_int(3));

    return detail::series_equal_report("cubic-gf", "order " + std::to_string(order),
                                       truncate(lhs, order), rhs, timer);
}

// Finite root products, direct vs closed: prod_{h=1..k} (1 - x z^{nh})(1 - x^2 z^{nh})
// = (1 - x^{k/d})^d (1 - x^{2k/d})^d, d = gcd(n, k). Prime k is compared
// against the literal cyclotomic product; k = 4, n = 2 reduces to integer
// signs z^{2h} = (-1)^h and is expanded directly too.
inline verification_report verify_lemma_finite_products(std::size_t order) {
    detail::stopwatch timer;
    verification_report report;
    report.claim = "lemma-products";
    report.checked_range = "order " + std::to_string(order);

    const std::pair<std::uint32_t, std::uint32_t> cases[] = {{3, 1}, {3, 2}, {3, 3},
                                                             {5, 1}, {5, 5}, {4, 2}};
    for (const auto& [k, n] : cases) {
        const auto closed = finite_root_product(k, n, order);
        bool ok = true;
        if (is_small_prime(k)) {
            ok = finite_root_product_direct(k, n, order) == to_cyclotomic(closed, k);
        } else {
            // k = 4, n = 2: zeta_4^{2h} alternates -1, +1
            auto direct = truncated_series<big_int>::one(big_int(0), order);
            for (std::uint32_t h = 1; h <= k; ++h) {
                const int sign = (h % 2 == 1) ? -1 : 1;
                std::vector<big_int> f1(order, big_int(0)), f2(order, big_int(0));
                f1[0] = 1;
                f2[0] = 1;
                if (order > 1) f1[1] = -sign;
                if (order > 2) f2[2] = -sign;
                direct = direct * truncated_series<big_int>(std::move(f1)) *
                         truncated_series<big_int>(std::move(f2));
            }
            ok = direct == closed;
        }
        if (!ok) {
            report.status = check_status::fail;
            report.first_counterexample = counterexample{
                -1, {"k = " + std::to_string(k) + ", n = " + std::to_string(n)}};
            break;
        }
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// Triple-product check over every theta spec the identities above rely on.
inline verification_report verify_jacobi_all(std::size_t order) {
    detail::stopwatch timer;
    const theta_spec specs[] = {{1, 3, 1, 6},  {-1, 9, -1, 9}, {-1, 15, -1, 3},
                                {1, 0, 1, 9},  {-1, 1, -1, 2}, {-1, 2, -1, 4}};
    for (const auto& spec : specs) {
        auto report = jacobi_triple_check(spec, order);
        if (!report.passed()) {
            report.claim = "jacobi";
            report.elapsed_ms = timer.elapsed_ms();
            return report;
        }
    }
    verification_report report;
    report.claim = "jacobi";
    report.checked_range = "order " + std::to_string(order) + ", 6 specs";
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// Direct cyclotomic evaluation against the closed Euler-quotient form for
// q in {2, 3, 5}.
inline verification_report verify_roots_product(std::size_t order) {
    detail::stopwatch timer;
    verification_report report;
    report.claim = "roots-product";
    report.checked_range = "order " + std::to_string(order) + ", q in {2,3,5}";
    for (const std::uint32_t q : {2u, 3u, 5u}) {
        const auto direct = roots_product_direct(q, order);
        const auto closed = roots_product_closed(q, order);
        if (const auto i = detail::first_mismatch(direct, closed)) {
            report.status = check_status::fail;
            report.first_counterexample =
                counterexample{static_cast<std::int64_t>(*i),
                               {"q = " + std::to_string(q), "direct " + to_decimal(direct[*i]),
                                "closed " + to_decimal(closed[*i])}};
            break;
        }
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// Reconstruction of the full generating function through the filter:
//   sum a(m) x^m  =  E(x^9)E(x^18) / (E(x^3)^4 E(x^6)^4)
//                    * prod_{h=1,2} prod_n (1 - x^n z^{nh})(1 - x^{2n} z^{nh}),
// plus the expansion of the h-product into (I0^2 - I1 I2) + (I2^2 - I0 I1) +
// (I1^2 - I2 I0), one summand per progression class.
inline verification_report verify_eq3_reconstruction(std::size_t order) {
    detail::stopwatch timer;
    verification_report report;
    report.claim = "eq3-reconstruction";
    report.checked_range = "order " + std::to_string(order);

    const auto fail = [&](const std::string& what) {
        report.status = check_status::fail;
        report.first_counterexample = counterexample{-1, {what}};
        report.elapsed_ms = timer.elapsed_ms();
        return report;
    };

    auto table = cubic_table(order);
    const truncated_series<big_int> cubic(std::move(table.values));
    const auto e1 = euler_product(1, order);
    const auto e2 = euler_product(2, order);

    if (!(cubic * e1 * e2 == truncated_series<big_int>::one(big_int(0), order)))
        return fail("sum a(m) x^m * E(x) E(x^2) != 1");

    // literal h-product over Z[zeta_3], every zeta component must cancel
    auto h_product = truncated_series<cyclotomic_int>::one(cyclotomic_int(3), order);
    for (const std::uint32_t h : {1u, 2u})
        h_product = h_product * euler_product_at_root(3, h, 1, order) *
                    euler_product_at_root(3, h, 2, order);
    const auto filter = to_integer(h_product);

    const auto prefactor = euler_product(9, order) * euler_product(18, order) *
                           inverse(pow(euler_product(3, order), 4) * pow(euler_product(6, order), 4));
    if (!(prefactor * filter == cubic)) return fail("filtered reconstruction != sum a(m) x^m");

    const auto pair_product = e1 * e2;
    const auto i0 = keep_progression(pair_product, progression(3, 0));
    const auto i1 = keep_progression(pair_product, progression(3, 1));
    const auto i2 = keep_progression(pair_product, progression(3, 2));
    const auto s0 = i0 * i0 - i1 * i2;
    const auto s1 = i2 * i2 - i0 * i1;
    const auto s2 = i1 * i1 - i2 * i0;
    if (!(s0 + s1 + s2 == filter)) return fail("summand expansion != h-product");
    if (!(keep_progression(s0, progression(3, 0)) == s0)) return fail("I0^2 - I1 I2 not of type 0");
    if (!(keep_progression(s1, progression(3, 1)) == s1)) return fail("I2^2 - I0 I1 not of type 1");
    if (!(keep_progression(s2, progression(3, 2)) == s2)) return fail("I1^2 - I2 I0 not of type 2");

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// a(M n + r) == 0 (mod d) for 0 <= n <= n_max, scanned over the Z/d table.
inline verification_report scan_congruence(const congruence_claim& claim, std::uint64_t n_max) {
    detail::stopwatch timer;
    verification_report report;
    report.claim = "congruence(" + std::to_string(claim.progression_modulus) + "," +
                   std::to_string(claim.residue) + "," + std::to_string(claim.divisor) + ")";
    report.checked_range = "n in [0.." + std::to_string(n_max) + "]";

    const std::uint64_t need = claim.progression_modulus * n_max + claim.residue + 1;
    const auto table = cubic_table_mod(need, claim.divisor);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t idx = claim.progression_modulus * n + claim.residue;
        if (table.values[idx] == 0) continue;
        report.status = check_status::fail;
        report.first_counterexample = counterexample{
            static_cast<std::int64_t>(n),
            {"a(" + std::to_string(idx) + ") mod " + std::to_string(claim.divisor) + " = " +
             std::to_string(table.values[idx])}};
        break;
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// Strict convexity: a(n+2) + a(n-2) > 2 a(n) for 2 <= n <= n_max, on exact values.
inline verification_report check_inequality(std::uint64_t n_max) {
    if (n_max < 2) throw std::invalid_argument("check_inequality: n_max must be >= 2");
    detail::stopwatch timer;
    verification_report report;
    report.claim = "convexity-inequality";
    report.checked_range = "n in [2.." + std::to_string(n_max) + "]";

    const auto table = cubic_table(n_max + 3);
    const auto& a = table.values;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        if (a[n + 2] + a[n - 2] > 2 * a[n]) continue;
        report.status = check_status::fail;
        report.first_counterexample =
            counterexample{static_cast<std::int64_t>(n),
                           {"a(n+2) = " + to_decimal(a[n + 2]), "a(n-2) = " + to_decimal(a[n - 2]),
                            "a(n) = " + to_decimal(a[n])}};
        break;
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

namespace detail {

class mpfr_value {
public:
    explicit mpfr_value(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~mpfr_value() { mpfr_clear(v_); }
    mpfr_value(const mpfr_value&) = delete;
    mpfr_value& operator=(const mpfr_value&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

enum class bound_outcome { holds, violated, undecided };

// Compare ln a(n) against pi sqrt(n) with outward rounding on both reads:
// "holds" and "violated" are certificates; "undecided" asks for more bits.
inline bound_outcome bound_at(const big_int& value, std::uint64_t n, mpfr_prec_t prec,
                              double* ratio_upper) {
    mpfr_value ln_up(prec), ln_down(prec), target_down(prec), target_up(prec), tmp(prec);

    mpfr_set_z(ln_up.get(), value.get_mpz_t(), MPFR_RNDU);
    mpfr_log(ln_up.get(), ln_up.get(), MPFR_RNDU);
    mpfr_set_z(ln_down.get(), value.get_mpz_t(), MPFR_RNDD);
    mpfr_log(ln_down.get(), ln_down.get(), MPFR_RNDD);

    mpfr_const_pi(target_down.get(), MPFR_RNDD);
    mpfr_sqrt_ui(tmp.get(), n, MPFR_RNDD);
    mpfr_mul(target_down.get(), target_down.get(), tmp.get(), MPFR_RNDD);

    mpfr_const_pi(target_up.get(), MPFR_RNDU);
    mpfr_sqrt_ui(tmp.get(), n, MPFR_RNDU);
    mpfr_mul(target_up.get(), target_up.get(), tmp.get(), MPFR_RNDU);

    if (mpfr_less_p(ln_up.get(), target_down.get())) {
        if (ratio_upper != nullptr) {
            mpfr_div(tmp.get(), ln_up.get(), target_down.get(), MPFR_RNDU);
            *ratio_upper = mpfr_get_d(tmp.get(), MPFR_RNDU);
        }
        return bound_outcome::holds;
    }
    if (mpfr_greaterequal_p(ln_down.get(), target_up.get())) return bound_outcome::violated;
    return bound_outcome::undecided;
}

} // namespace detail

// ln a(n) < pi sqrt(n) for 1 <= n <= n_max. Each comparison rounds ln a(n) up
// and pi sqrt(n) down, so a pass is a proof at that n; an undecided comparison
// retries once at double precision before reporting precision exhaustion.
inline verification_report check_bound(std::uint64_t n_max, unsigned precision_bits = 128) {
    if (n_max < 1) throw std::invalid_argument("check_bound: n_max must be >= 1");
    if (precision_bits < 100)
        throw std::invalid_argument("check_bound: need at least 100 significand bits");
    detail::stopwatch timer;
    verification_report report;
    report.claim = "exp-sqrt-bound";
    report.checked_range = "n in [1.." + std::to_string(n_max) + "], " +
                           std::to_string(precision_bits) + " bits";

    const auto table = cubic_table(n_max + 1);
    double max_ratio = 0.0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        double ratio = 0.0;
        auto outcome = detail::bound_at(table.values[n], n, precision_bits, &ratio);
        if (outcome == detail::bound_outcome::undecided)
            outcome = detail::bound_at(table.values[n], n, 2 * precision_bits, &ratio);
        if (outcome == detail::bound_outcome::holds) {
            if (ratio > max_ratio) max_ratio = ratio;
            continue;
        }
        report.status = outcome == detail::bound_outcome::violated
                            ? check_status::fail
                            : check_status::precision_exhausted;
        report.first_counterexample =
            counterexample{static_cast<std::int64_t>(n), {"a(n) = " + to_decimal(table.values[n])}};
        break;
    }
    report.max_ratio = max_ratio;
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// ---- CLI-facing claim registry ----

struct identity_claim {
    std::string id;
    std::size_t default_order;
};

// Cyclotomic products dominate the cost, so those claims default lower.
inline const std::vector<identity_claim>& identity_claims() {
    static const std::vector<identity_claim> claims = {
        {"type-decomposition", 200}, {"eisenstein-factor", 120}, {"theta-forms", 200},
        {"cubic-gf", 500},           {"lemma-products", 60},     {"jacobi", 200},
        {"roots-product", 120},      {"eq3-reconstruction", 120},
    };
    return claims;
}

inline verification_report run_identity_claim(const std::string& id, std::size_t order) {
    if (id == "type-decomposition") return verify_type_decomposition(order);
    if (id == "eisenstein-factor") return verify_eisenstein_factors(order);
    if (id == "theta-forms") return verify_theta_forms(order);
    if (id == "cubic-gf") return verify_cubic_gf(order);
    if (id == "lemma-products") return verify_lemma_finite_products(order);
    if (id == "jacobi") return verify_jacobi_all(order);
    if (id == "roots-product") return verify_roots_product(order);
    if (id == "eq3-reconstruction") return verify_eq3_reconstruction(order);
    throw std::invalid_argument("unknown claim id: " + id);
}

} // namespace qpartition
