#pragma once

/**
 * @file rational.hpp
 * @brief Nonnegative rationals. Additively reduced but antimatter: no additive
 *        atoms exist, so unit-split based operations refuse this ring.
 */

#include <optional>
#include <stdexcept>
#include <string>

#include "natural.hpp"

namespace semigold {

/// Nonnegative rationals in lowest terms. Every nonzero element is a unit.
class NonnegRational {
    big_rat v_;  // cpp_rational keeps lowest terms, positive denominator

public:
    NonnegRational() : v_(0) {}
    NonnegRational(const big_rat& v) : v_(v) {
        if (v_ < 0) throw std::domain_error("NonnegRational: negative value");
    }
    NonnegRational(const big_int& num, const big_int& den) : v_(num, den) {
        if (v_ < 0) throw std::domain_error("NonnegRational: negative value");
    }
    NonnegRational(std::int64_t v) : NonnegRational(big_rat(v)) {}
    NonnegRational(int v) : NonnegRational(big_rat(v)) {}
    NonnegRational(const Nat& n) : v_(n.value()) {}

    static NonnegRational zero() { return NonnegRational(); }
    static NonnegRational one() { return NonnegRational(1); }

    const big_rat& value() const { return v_; }
    big_int numerator() const { return boost::multiprecision::numerator(v_); }
    big_int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ != 0; }

    NonnegRational operator+(const NonnegRational& o) const { return NonnegRational(v_ + o.v_); }
    NonnegRational operator*(const NonnegRational& o) const { return NonnegRational(v_ * o.v_); }

    bool operator==(const NonnegRational& o) const { return v_ == o.v_; }
    bool operator!=(const NonnegRational& o) const { return v_ != o.v_; }
    bool operator<(const NonnegRational& o) const { return v_ < o.v_; }

    std::optional<NonnegRational> try_sub(const NonnegRational& o) const {
        if (v_ < o.v_) return std::nullopt;
        return NonnegRational(v_ - o.v_);
    }

    std::optional<NonnegRational> try_div(const NonnegRational& o) const {
        if (o.is_zero()) return std::nullopt;
        return NonnegRational(v_ / o.v_);
    }

    std::string str() const {
        if (denominator() == 1) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }
};

inline std::string to_text(const NonnegRational& q) { return q.str(); }

}  // namespace semigold
