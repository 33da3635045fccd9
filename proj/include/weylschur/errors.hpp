#pragma once

#include <stdexcept>
#include <string>

namespace weylschur {

/// Caller passed something outside an operation's contract (bad rank,
/// malformed weight, ring-size mismatch, ...).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An identity that must hold exactly did not: inexact division, a singular
/// or inconsistent multiplicity system, a non-integral multiplicity.
class inconsistency_error : public std::logic_error {
public:
    explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

class inexact_division : public inconsistency_error {
public:
    explicit inexact_division(const std::string& what) : inconsistency_error(what) {}
};

} // namespace weylschur
