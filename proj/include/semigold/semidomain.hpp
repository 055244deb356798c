#pragma once

/**
 * @file semidomain.hpp
 * @brief The coefficient-ring interface the rest of the library is generic
 *        over, plus the capability descriptors of the shipped instances.
 *
 * A coefficient ring here is a commutative semiring without zero divisors
 * that embeds in an integral domain (so exact subtraction and division are
 * partial operations). The decomposition engine additionally cares about
 * three additive properties, recorded per instance:
 *   - additively_reduced:  a + b = 0 forces a = b = 0;
 *   - additively_atomic:   every element is a finite sum of additive atoms;
 *   - atoms_are_units:     the additive atoms are exactly the units.
 * The last flag is what makes unit splits s = u + v available.
 */

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "natural.hpp"
#include "quadratic.hpp"
#include "rational.hpp"
#include "two_thirds.hpp"

namespace semigold {

template <class S>
concept semidomain_scalar = requires(const S a, const S b) {
    { S::zero() } -> std::convertible_to<S>;
    { S::one() } -> std::convertible_to<S>;
    { a + b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
};

/// Runtime capability record for a registered instance.
struct SemidomainDescriptor {
    std::string name;
    bool additively_reduced = false;
    bool additively_atomic = false;
    bool atoms_are_units = false;
    bool supports_exhaustive_split = false;
};

template <class S>
struct semidomain_traits;  // specialized per instance

template <>
struct semidomain_traits<Nat> {
    static constexpr bool additively_reduced = true;
    static constexpr bool additively_atomic = true;
    static constexpr bool atoms_are_units = true;
    static constexpr bool supports_exhaustive_split = true;
    static std::string name() { return "n0"; }
};

template <>
struct semidomain_traits<NonnegRational> {
    static constexpr bool additively_reduced = true;
    static constexpr bool additively_atomic = false;  // antimatter: no additive atoms
    static constexpr bool atoms_are_units = false;
    static constexpr bool supports_exhaustive_split = false;
    static std::string name() { return "q+"; }
};

template <>
struct semidomain_traits<QuadraticNat> {
    static constexpr bool additively_reduced = true;
    static constexpr bool additively_atomic = true;
    static constexpr bool atoms_are_units = false;  // atoms {1, sqrt2} are not all units
    static constexpr bool supports_exhaustive_split = true;
    static std::string name() { return "n0sqrt2"; }
};

template <>
struct semidomain_traits<TwoThirds> {
    static constexpr bool additively_reduced = true;
    static constexpr bool additively_atomic = true;
    static constexpr bool atoms_are_units = true;
    static constexpr bool supports_exhaustive_split = false;  // infinitely many splits
    static std::string name() { return "two-thirds"; }
};

template <class S>
SemidomainDescriptor descriptor_of() {
    using T = semidomain_traits<S>;
    static_assert(!T::atoms_are_units || T::additively_atomic,
                  "atoms_are_units implies additively_atomic");
    return SemidomainDescriptor{T::name(), T::additively_reduced, T::additively_atomic,
                                T::atoms_are_units, T::supports_exhaustive_split};
}

/// A unit split s = u + v with u a unit (v possibly zero).
template <class S>
struct UnitSplit {
    S unit;
    S rest;
};

// --- unit_split: canonical unit decompositions -----------------------------

/// Nat: the only unit is 1, so s = 1 + (s-1).
inline UnitSplit<Nat> unit_split(const Nat& s) {
    if (s.is_zero()) throw std::domain_error("unit_split: zero input");
    return {Nat::one(), *s.try_sub(Nat::one())};
}

/// TwoThirds: peel the minimum-exponent atom of the witness.
inline UnitSplit<TwoThirds> unit_split(const TwoThirds& s) {
    if (s.is_zero()) throw std::domain_error("unit_split: zero input");
    const std::int64_t kmin = s.witness().begin()->first;
    return {TwoThirds::atom(kmin), s.peel_atom(kmin)};
}

inline UnitSplit<NonnegRational> unit_split(const NonnegRational&) {
    throw not_applicable("unit_split: additive atoms of q+ are not units (there are none)");
}

inline UnitSplit<QuadraticNat> unit_split(const QuadraticNat&) {
    throw not_applicable("unit_split: additive atoms of n0sqrt2 are not all units");
}

// --- gcd_contains_one: is 1 a greatest common divisor? ----------------------

/// Nat: plain integer gcd.
inline bool gcd_contains_one(const std::vector<Nat>& xs,
                             const search_limits& = search_limits::defaults()) {
    big_int g = 0;
    for (const auto& x : xs) {
        if (x.is_zero()) throw std::invalid_argument("gcd_contains_one: zero element");
        g = boost::multiprecision::gcd(g, x.value());
        if (g == 1) return true;
    }
    return g == 1;
}

/// q+: every nonzero element is a unit, so all common divisors are units.
inline bool gcd_contains_one(const std::vector<NonnegRational>& xs,
                             const search_limits& = search_limits::defaults()) {
    for (const auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("gcd_contains_one: zero element");
    return true;
}

/// n0sqrt2: exhaustive search for a common non-unit divisor. Divisors of a
/// nonzero element have value at most the element's value, which bounds both
/// components, so the search space is finite and complete.
inline bool gcd_contains_one(const std::vector<QuadraticNat>& xs,
                             const search_limits& lim = search_limits::defaults()) {
    if (xs.empty()) throw std::invalid_argument("gcd_contains_one: empty set");
    for (const auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("gcd_contains_one: zero element");
    for (const auto& x : xs)
        if (x.is_unit()) return true;
    // component bound from the first element: a + 2b dominates a + b*sqrt2
    const big_int bound = xs.front().a() + 2 * xs.front().b();
    step_counter steps(lim.step_budget);
    for (big_int a = 0; a <= bound; ++a) {
        for (big_int b = 0; b <= bound; ++b) {
            if (!steps.spend()) throw search_exhausted("gcd_contains_one: n0sqrt2 divisor search");
            QuadraticNat d(a, b);
            if (d.is_zero() || d.is_unit()) continue;
            bool common = true;
            for (const auto& x : xs) {
                if (!x.try_div(d)) { common = false; break; }
            }
            if (common) return false;
        }
    }
    return true;
}

/// two-thirds: sound only when the set contains a unit (divisors of a unit
/// are units). Deciding the general case would need membership testing for
/// the underlying monoid, which the bounded machinery does not attempt.
inline bool gcd_contains_one(const std::vector<TwoThirds>& xs,
                             const search_limits& = search_limits::defaults()) {
    if (xs.empty()) throw std::invalid_argument("gcd_contains_one: empty set");
    for (const auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("gcd_contains_one: zero element");
    for (const auto& x : xs)
        if (x.is_unit()) return true;
    throw search_exhausted("gcd_contains_one: two-thirds set without a unit member");
}

// --- min_unit_summands ------------------------------------------------------

/// Smallest k <= cap with s a sum of k units, when one exists.
inline std::optional<int> min_unit_summands(const Nat& s, int cap) {
    if (s.is_zero()) throw std::invalid_argument("min_unit_summands: zero input");
    if (s.value() <= cap) return static_cast<int>(s.value());
    return std::nullopt;
}

inline std::optional<int> min_unit_summands(const TwoThirds& s, int cap) {
    if (s.is_zero()) throw std::invalid_argument("min_unit_summands: zero input");
    return min_unit_summands_value(s.value(), cap);
}

inline std::optional<int> min_unit_summands(const NonnegRational&, int) {
    throw not_applicable("min_unit_summands: q+ has no additive atoms");
}

inline std::optional<int> min_unit_summands(const QuadraticNat&, int) {
    throw not_applicable("min_unit_summands: n0sqrt2 atoms are not all units");
}

}  // namespace semigold
