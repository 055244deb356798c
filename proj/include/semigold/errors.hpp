#pragma once

#include <stdexcept>
#include <string>

namespace semigold {

/// Raised when a bounded search ran out of budget before reaching a verdict.
class search_exhausted : public std::runtime_error {
public:
    explicit search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a bounded procedure cannot decide either way within its window.
class inconclusive_error : public std::runtime_error {
public:
    explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation requires a capability the coefficient ring lacks
/// (e.g. unit splits over a ring whose additive atoms are not units).
class not_applicable : public std::runtime_error {
public:
    explicit not_applicable(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by exhaustive oracles on rings without finite split enumeration.
class unsupported_instance : public std::runtime_error {
public:
    explicit unsupported_instance(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an oracle input exceeds the configured degree/mass bounds.
class degree_bound_exceeded : public std::runtime_error {
public:
    explicit degree_bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a constructed series summand cannot be expressed in the
/// head + tail-rule format.
class unrepresentable_split : public std::runtime_error {
public:
    explicit unrepresentable_split(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a two-summand series split is requested but the spacing or
/// coefficient conditions do not hold.
class condition_not_met : public std::runtime_error {
public:
    explicit condition_not_met(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by heuristic probes that ran out of attempts.
class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semigold
