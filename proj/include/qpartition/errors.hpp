// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace qpartition {

// Operands belong to different runtime rings (moduli or root orders differ).
class ring_mismatch_error : public std::logic_error {
public:
    explicit ring_mismatch_error(const std::string& what) : std::logic_error(what) {}
};

// A series inverse (or negative power) was requested on a non-unit constant term.
class not_invertible_error : public std::domain_error {
public:
    explicit not_invertible_error(const std::string& what) : std::domain_error(what) {}
};

// A cyclotomic value with a nonzero root component was coerced to a rational integer.
class not_rational_integer_error : public std::domain_error {
public:
    explicit not_rational_integer_error(const std::string& what) : std::domain_error(what) {}
};

// Requested order or enumeration size exceeds the configured cap.
class resource_limit_error : public std::length_error {
public:
    explicit resource_limit_error(const std::string& what) : std::length_error(what) {}
};

} // namespace qpartition
