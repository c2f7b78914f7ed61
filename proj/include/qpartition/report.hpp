// Machine-readable outcomes of identity / congruence / inequality checks.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpartition {

enum class check_status { pass, fail, precision_exhausted };

inline const char* to_string(check_status s) {
    switch (s) {
        case check_status::pass: return "pass";
        case check_status::fail: return "fail";
        case check_status::precision_exhausted: return "fail-precision";
    }
    return "unknown";
}

struct counterexample {
    std::int64_t n = 0;                // exponent / index where the claim first breaks
    std::vector<std::string> witness;  // the values involved, as decimal strings
};

struct verification_report {
    std::string claim;
    check_status status = check_status::pass;
    std::string checked_range;
    std::optional<counterexample> first_counterexample;
    std::optional<double> max_ratio;  // set only by the growth-bound check
    std::int64_t elapsed_ms = 0;

    bool passed() const { return status == check_status::pass; }
};

// Claim a(M*n + r) == 0 (mod d) for all n >= 0.
struct congruence_claim {
    std::uint32_t progression_modulus;
    std::uint32_t residue;
    std::uint64_t divisor;

    congruence_claim(std::uint32_t m, std::uint32_t r, std::uint64_t d)
        : progression_modulus(m), residue(r), divisor(d) {
        if (m < 1) throw std::invalid_argument("congruence_claim: progression modulus must be >= 1");
        if (r >= m) throw std::invalid_argument("congruence_claim: residue must satisfy r < M");
        if (d < 2) throw std::invalid_argument("congruence_claim: divisor must be >= 2");
    }

    std::string display() const {
        return "a(" + std::to_string(progression_modulus) + "n+" + std::to_string(residue) +
               ") == 0 (mod " + std::to_string(divisor) + ")";
    }
};

namespace detail {

class stopwatch {
public:
    stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

} // namespace qpartition
