#pragma once

/**
 * @file two_thirds.hpp
 * @brief The additive monoid generated by all integer powers of 2/3, viewed
 *        as a semiring of rationals.
 *
 * Elements carry both their exact rational value and a witness multiset
 * {exponent -> multiplicity} recording one way to write the value as a sum
 * of powers of 2/3. Equality is by value; the witness feeds the
 * constructive operations (atom peeling, the 2*(2/3)^n = 3*(2/3)^(n+1)
 * rewrites).
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "natural.hpp"

namespace semigold {

/// Exact (2/3)^k for any integer k.
inline big_rat pow_two_thirds(std::int64_t k) {
    big_int num = 1, den = 1;
    if (k >= 0) {
        for (std::int64_t i = 0; i < k; ++i) { num *= 2; den *= 3; }
    } else {
        for (std::int64_t i = 0; i < -k; ++i) { num *= 3; den *= 2; }
    }
    return big_rat(num, den);
}

/// If r equals (2/3)^k exactly, the exponent k.
inline std::optional<std::int64_t> two_thirds_exponent(const big_rat& r) {
    if (r <= 0) return std::nullopt;
    big_int num = boost::multiprecision::numerator(r);
    big_int den = boost::multiprecision::denominator(r);
    std::int64_t n2 = 0, n3 = 0;
    while (num % 2 == 0) { num /= 2; ++n2; }
    while (num % 3 == 0) { num /= 3; ++n3; }
    while (den % 2 == 0) { den /= 2; --n2; }
    while (den % 3 == 0) { den /= 3; --n3; }
    if (num != 1 || den != 1) return std::nullopt;
    if (n3 != -n2) return std::nullopt;
    return n2;
}

class TwoThirds {
public:
    using witness_map = std::map<std::int64_t, big_int>;  // exponent -> multiplicity > 0

private:
    big_rat value_;
    witness_map witness_;

    TwoThirds(big_rat v, witness_map w) : value_(std::move(v)), witness_(std::move(w)) {}

public:
    TwoThirds() : value_(0) {}
    TwoThirds(int v) : TwoThirds() {  // n = n * (2/3)^0; needed for generic code
        if (v < 0) throw std::domain_error("TwoThirds: negative value");
        if (v > 0) { value_ = v; witness_[0] = v; }
    }

    static TwoThirds zero() { return TwoThirds(); }
    static TwoThirds one() { return atom(0); }
    static TwoThirds atom(std::int64_t k) {
        witness_map w;
        w[k] = 1;
        return TwoThirds(pow_two_thirds(k), std::move(w));
    }
    static TwoThirds from_witness(const witness_map& w) {
        big_rat v = 0;
        for (const auto& [k, m] : w) {
            if (m <= 0) throw std::domain_error("TwoThirds: nonpositive multiplicity");
            v += big_rat(m) * pow_two_thirds(k);
        }
        return TwoThirds(std::move(v), w);
    }

    const big_rat& value() const { return value_; }
    const witness_map& witness() const { return witness_; }

    bool is_zero() const { return value_ == 0; }
    bool is_unit() const { return two_thirds_exponent(value_).has_value(); }

    TwoThirds operator+(const TwoThirds& o) const {
        witness_map w = witness_;
        for (const auto& [k, m] : o.witness_) w[k] += m;
        return TwoThirds(value_ + o.value_, std::move(w));
    }

    TwoThirds operator*(const TwoThirds& o) const {
        witness_map w;
        for (const auto& [k1, m1] : witness_)
            for (const auto& [k2, m2] : o.witness_) w[k1 + k2] += m1 * m2;
        return TwoThirds(value_ * o.value_, std::move(w));
    }

    // equality is by value, not by witness
    bool operator==(const TwoThirds& o) const { return value_ == o.value_; }
    bool operator!=(const TwoThirds& o) const { return value_ != o.value_; }
    bool operator<(const TwoThirds& o) const { return value_ < o.value_; }

    /// 2*(2/3)^k -> 3*(2/3)^(k+1): value-preserving witness rewrite.
    TwoThirds rewrite_split(std::int64_t k) const {
        auto it = witness_.find(k);
        if (it == witness_.end() || it->second < 2)
            throw std::domain_error("TwoThirds: rewrite needs multiplicity >= 2");
        witness_map w = witness_;
        w[k] -= 2;
        if (w[k] == 0) w.erase(k);
        w[k + 1] += 3;
        return TwoThirds(value_, std::move(w));
    }

    /// 3*(2/3)^(k+1) -> 2*(2/3)^k: the inverse rewrite.
    TwoThirds rewrite_merge(std::int64_t k) const {
        auto it = witness_.find(k + 1);
        if (it == witness_.end() || it->second < 3)
            throw std::domain_error("TwoThirds: merge needs multiplicity >= 3");
        witness_map w = witness_;
        w[k + 1] -= 3;
        if (w[k + 1] == 0) w.erase(k + 1);
        w[k] += 2;
        return TwoThirds(value_, std::move(w));
    }

    /// Removes one atom at exponent k from the witness.
    TwoThirds peel_atom(std::int64_t k) const {
        auto it = witness_.find(k);
        if (it == witness_.end()) throw std::domain_error("TwoThirds: no atom at exponent");
        witness_map w = witness_;
        w[k] -= 1;
        if (w[k] == 0) w.erase(k);
        return TwoThirds(value_ - pow_two_thirds(k), std::move(w));
    }

    std::optional<TwoThirds> try_sub(const TwoThirds&) const { return std::nullopt; }

    /// Division by units (atoms) shifts witness exponents; anything else is
    /// outside what the bounded machinery can decide.
    std::optional<TwoThirds> try_div(const TwoThirds& o) const {
        if (o.is_zero()) return std::nullopt;
        if (value_ == o.value_) return one();
        auto k = two_thirds_exponent(o.value_);
        if (!k) return std::nullopt;
        witness_map w;
        for (const auto& [e, m] : witness_) w[e - *k] = m;
        return TwoThirds(value_ / o.value_, std::move(w));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [k, m] : witness_) {
            if (!s.empty()) s += " + ";
            if (m != 1) s += m.str() + "*";
            s += "(2/3)^" + std::to_string(k);
        }
        return s;
    }
};

inline std::string to_text(const TwoThirds& t) { return t.str(); }

/// Smallest k with (2/3)^k < v (v > 0). Exact rational walk.
inline std::int64_t first_exponent_below(const big_rat& v) {
    std::int64_t k = 0;
    if (pow_two_thirds(k) < v) {
        while (pow_two_thirds(k - 1) < v) --k;
    } else {
        while (!(pow_two_thirds(k) < v)) ++k;
    }
    return k;
}

namespace detail {
/// Is v a sum of exactly two powers of 2/3? The larger one lies in [v/2, v),
/// a window holding at most two atoms, so the check is exact.
inline bool is_two_atom_sum(const big_rat& v) {
    if (v <= 0) return false;
    const std::int64_t k0 = first_exponent_below(v);
    for (std::int64_t k = k0; k <= k0 + 1; ++k) {
        const big_rat rem = v - pow_two_thirds(k);
        if (rem <= 0) continue;
        if (two_thirds_exponent(rem)) return true;
    }
    return false;
}
}  // namespace detail

/// Minimum number of unit summands for a TwoThirds value, capped at 3.
/// Decided exactly: the largest atom of a j-atom sum lies in [v/j, v),
/// a window holding at most a constant number of candidate atoms.
inline std::optional<int> min_unit_summands_value(const big_rat& v, int cap) {
    if (v <= 0) return std::nullopt;
    if (cap >= 1 && two_thirds_exponent(v)) return 1;
    if (cap >= 2 && detail::is_two_atom_sum(v)) return 2;
    if (cap >= 3) {
        const std::int64_t k0 = first_exponent_below(v);
        for (std::int64_t k = k0; 3 * pow_two_thirds(k) >= v; ++k) {
            const big_rat rem = v - pow_two_thirds(k);
            if (rem <= 0) continue;
            if (detail::is_two_atom_sum(rem)) return 3;
        }
    }
    return std::nullopt;
}

}  // namespace semigold
