// Cubic partitions: exact tables for a(n) and the classic p(n), a brute-force
// enumeration of colored partitions, and the max-part growth injection behind
// the convexity inequality.
//
// A cubic partition may give each even part one of two labels; odd parts are
// always label 1. Canonical order is non-increasing by value with label 1
// before label 2 on ties (4_1 > 4_2 > 3 > 2_1 > 2_2 > 1).
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "qfunctions.hpp"

namespace qpartition {

struct colored_part {
    std::uint32_t value;
    std::uint8_t label;  // 1 or 2; 2 only on even values

    // strictly decreasing key over the canonical order above
    std::uint64_t rank() const { return 2 * static_cast<std::uint64_t>(value) - (label == 2 ? 1 : 0); }

    friend bool operator==(const colored_part&, const colored_part&) = default;
};

class colored_partition {
public:
    colored_partition() = default;  // the empty partition of 0

    explicit colored_partition(std::vector<colored_part> parts) : parts_(std::move(parts)) {
        for (const auto& p : parts_) {
            if (p.value == 0) throw std::invalid_argument("colored_partition: parts must be positive");
            if (p.label != 1 && p.label != 2)
                throw std::invalid_argument("colored_partition: labels are 1 or 2");
            if (p.label == 2 && p.value % 2 != 0)
                throw std::invalid_argument("colored_partition: label 2 is only for even parts");
        }
        std::sort(parts_.begin(), parts_.end(),
                  [](const colored_part& a, const colored_part& b) { return a.rank() > b.rank(); });
    }

    const std::vector<colored_part>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& p : parts_) s += p.value;
        return s;
    }

    bool contains(std::uint32_t value, std::uint8_t label) const {
        for (const auto& p : parts_)
            if (p.value == value && p.label == label) return true;
        return false;
    }

    bool all_ones() const {
        for (const auto& p : parts_)
            if (p.value != 1) return false;
        return !parts_.empty();
    }

    std::string display() const {
        if (parts_.empty()) return "()";
        std::string s;
        for (const auto& p : parts_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(p.value);
            if (p.value % 2 == 0) s += (p.label == 1 ? "_1" : "_2");
        }
        return s;
    }

    friend bool operator==(const colored_partition&, const colored_partition&) = default;
    friend bool operator<(const colored_partition& a, const colored_partition& b) {
        return std::lexicographical_compare(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
            [](const colored_part& x, const colored_part& y) { return x.rank() > y.rank(); });
    }

    friend std::ostream& operator<<(std::ostream& os, const colored_partition& p) {
        return os << p.display();
    }

private:
    std::vector<colored_part> parts_;
};

enum class partition_kind { cubic, classic };

struct partition_table {
    partition_kind kind;
    std::vector<big_int> values;  // index n -> a(n) or p(n)
};

struct partition_table_mod {
    std::uint64_t modulus;
    std::vector<std::uint64_t> values;  // residues in [0, modulus)
};

// p(0..count-1) by the sparse pentagonal recurrence
//   p(n) = sum_{k>=1} (-1)^{k+1} (p(n - w(k)) + p(n - w(-k))).
inline partition_table classic_table(std::size_t count) {
    check_table_order(count);
    std::vector<big_int> p(count, big_int(0));
    p[0] = 1;
    for (std::size_t n = 1; n < count; ++n) {
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t lo = pentagonal_exponent(-k);
            if (lo > static_cast<std::int64_t>(n)) break;
            const std::int64_t hi = pentagonal_exponent(k);
            if (k % 2 == 1) {
                p[n] += p[n - lo];
                if (hi <= static_cast<std::int64_t>(n)) p[n] += p[n - hi];
            } else {
                p[n] -= p[n - lo];
                if (hi <= static_cast<std::int64_t>(n)) p[n] -= p[n - hi];
            }
        }
    }
    return {partition_kind::classic, std::move(p)};
}

// a(0..count-1), the inverse of E(x) E(x^2). Evaluated by a second sparse
// stage on top of the classic table: from A(x) E(x^2) = 1/E(x),
//   a(n) = p(n) + sum_{k>=1} (-1)^{k+1} (a(n - 2w(k)) + a(n - 2w(-k))).
// The same coefficients as inverse(euler_product(1,N) * euler_product(2,N)),
// at O(n^{3/2}) total cost instead of O(n^2).
inline partition_table cubic_table(std::size_t count) {
    check_table_order(count);
    auto classic = classic_table(count);
    std::vector<big_int> a(count, big_int(0));
    for (std::size_t n = 0; n < count; ++n) {
        big_int v = std::move(classic.values[n]);
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t lo = 2 * pentagonal_exponent(-k);
            if (lo > static_cast<std::int64_t>(n)) break;
            const std::int64_t hi = 2 * pentagonal_exponent(k);
            if (k % 2 == 1) {
                v += a[n - lo];
                if (hi <= static_cast<std::int64_t>(n)) v += a[n - hi];
            } else {
                v -= a[n - lo];
                if (hi <= static_cast<std::int64_t>(n)) v -= a[n - hi];
            }
        }
        a[n] = std::move(v);
    }
    return {partition_kind::cubic, std::move(a)};
}

// The cubic recurrence carried out in Z/m; entry-wise equal to the exact
// table reduced mod m.
inline partition_table_mod cubic_table_mod(std::size_t count, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("cubic_table_mod: modulus must be >= 2");
    check_table_order(count);
    std::vector<std::uint64_t> p(count, 0), a(count, 0);
    const auto add = [&](std::uint64_t x, std::uint64_t y) {
        const std::uint64_t r = x + y;
        return r >= modulus ? r - modulus : r;
    };
    const auto sub = [&](std::uint64_t x, std::uint64_t y) { return x >= y ? x - y : modulus - (y - x); };
    p[0] = 1 % modulus;
    for (std::size_t n = 1; n < count; ++n) {
        std::uint64_t v = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t lo = pentagonal_exponent(-k);
            if (lo > static_cast<std::int64_t>(n)) break;
            const std::int64_t hi = pentagonal_exponent(k);
            if (k % 2 == 1) {
                v = add(v, p[n - lo]);
                if (hi <= static_cast<std::int64_t>(n)) v = add(v, p[n - hi]);
            } else {
                v = sub(v, p[n - lo]);
                if (hi <= static_cast<std::int64_t>(n)) v = sub(v, p[n - hi]);
            }
        }
        p[n] = v;
    }
    for (std::size_t n = 0; n < count; ++n) {
        std::uint64_t v = p[n];
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t lo = 2 * pentagonal_exponent(-k);
            if (lo > static_cast<std::int64_t>(n)) break;
            const std::int64_t hi = 2 * pentagonal_exponent(k);
            if (k % 2 == 1) {
                v = add(v, a[n - lo]);
                if (hi <= static_cast<std::int64_t>(n)) v = add(v, a[n - hi]);
            } else {
                v = sub(v, a[n - lo]);
                if (hi <= static_cast<std::int64_t>(n)) v = sub(v, a[n - hi]);
            }
        }
        a[n] = v;
    }
    return {modulus, std::move(a)};
}

// All cubic partitions of n in canonical (lexicographically descending)
// order, generated without duplicates: each part's rank bounds the next.
inline std::vector<colored_partition> enumerate_cubic(std::uint32_t n) {
    if (n > enumeration_limit)
        throw resource_limit_error("enumerate_cubic: n > " + std::to_string(enumeration_limit) +
                                   " (output has a(n) entries)");
    std::vector<colored_partition> out;
    std::vector<colored_part> cur;
    const auto rec = [&](auto&& self, std::uint32_t remaining, std::uint64_t max_rank) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::uint32_t v = remaining; v >= 1; --v) {
            for (const std::uint8_t label : {std::uint8_t{1}, std::uint8_t{2}}) {
                if (label == 2 && v % 2 != 0) continue;
                const colored_part part{v, label};
                if (part.rank() > max_rank) continue;
                cur.push_back(part);
                self(self, remaining - v, part.rank());
                cur.pop_back();
            }
        }
    };
    rec(rec, n, std::uint64_t{2} * n);
    return out;
}

// Adds 2 to the maximal part (ties prefer label 1, so the canonical head).
// The grown part keeps its label; the result never contains a 2 with label 1,
// so it lands in the target set of partitions free of that part.
inline colored_partition injection_map(const colored_partition& y) {
    if (y.empty()) throw std::domain_error("injection_map: partition must be nonempty");
    if (y.contains(2, 1)) throw std::domain_error("injection_map: partition contains 2 with label 1");
    auto parts = y.parts();
    parts.front().value += 2;
    return colored_partition(std::move(parts));
}

} // namespace qpartition
