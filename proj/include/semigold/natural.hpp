#pragma once

/**
 * @file natural.hpp
 * @brief Arbitrary-precision nonnegative integers as a coefficient ring.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace semigold {

using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

/// The semiring of nonnegative integers. Additively reduced and atomic;
/// the only unit is 1, which is also the only additive atom.
class Nat {
    big_int v_;

public:
    Nat() : v_(0) {}
    Nat(const big_int& v) : v_(v) {
        if (v_ < 0) throw std::domain_error("Nat: negative value");
    }
    Nat(std::int64_t v) : Nat(big_int(v)) {}
    Nat(int v) : Nat(big_int(v)) {}
    Nat(unsigned long long v) : v_(v) {}

    static Nat zero() { return Nat(); }
    static Nat one() { return Nat(1); }

    const big_int& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ == 1; }

    Nat operator+(const Nat& o) const { return Nat(v_ + o.v_); }
    Nat operator*(const Nat& o) const { return Nat(v_ * o.v_); }
    Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }

    bool operator==(const Nat& o) const { return v_ == o.v_; }
    bool operator!=(const Nat& o) const { return v_ != o.v_; }
    bool operator<(const Nat& o) const { return v_ < o.v_; }
    bool operator<=(const Nat& o) const { return v_ <= o.v_; }

    /// a.try_sub(b): the c with b + c = a, when it exists.
    std::optional<Nat> try_sub(const Nat& o) const {
        if (v_ < o.v_) return std::nullopt;
        return Nat(v_ - o.v_);
    }

    /// Exact division, absent when not divisible (or dividing by zero).
    std::optional<Nat> try_div(const Nat& o) const {
        if (o.is_zero()) return std::nullopt;
        if (v_ % o.v_ != 0) return std::nullopt;
        return Nat(v_ / o.v_);
    }

    std::string str() const { return v_.str(); }
};

inline std::string to_text(const Nat& n) { return n.str(); }

inline big_int below_count(const Nat& bound) { return bound.value() + 1; }

/// All s with s + t = bound solvable, i.e. 0..bound.
inline std::vector<Nat> additive_below(const Nat& bound) {
    std::vector<Nat> out;
    for (big_int i = 0; i <= bound.value(); ++i) out.emplace_back(i);
    return out;
}

}  // namespace semigold
