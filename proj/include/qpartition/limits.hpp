// Resource caps for series orders and partition enumeration.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace qpartition {

// Series arithmetic refuses orders above this unconditionally.
inline constexpr std::size_t hard_order_limit = 10'000'000;

// Explicit colored-partition enumeration is exponential in n.
inline constexpr std::uint32_t enumeration_limit = 30;

// Cap for table builders and series generators. QPARTITION_MAX_ORDER
// overrides the default, clamped to the hard limit.
inline std::size_t max_table_order() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("QPARTITION_MAX_ORDER")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1)
                return std::min<std::size_t>(static_cast<std::size_t>(v), hard_order_limit);
        }
        return std::size_t{1'000'000};
    }();
    return cap;
}

inline void check_order(std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("series order must be positive");
    if (order > hard_order_limit)
        throw resource_limit_error("series order " + std::to_string(order) +
                                   " exceeds the hard limit " + std::to_string(hard_order_limit));
}

inline void check_table_order(std::size_t order) {
    check_order(order);
    if (order > max_table_order())
        throw resource_limit_error("requested size " + std::to_string(order) +
                                   " exceeds the configured cap " + std::to_string(max_table_order()) +
                                   " (set QPARTITION_MAX_ORDER to raise it)");
}

} // namespace qpartition
