#pragma once

/**
 * @file quadratic.hpp
 * @brief The semiring of numbers a + b*sqrt(2) with natural a, b.
 *
 * Additively reduced and atomic, but the additive atoms {1, sqrt(2)} are not
 * units, which is exactly what breaks two-summand decompositions over it.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "natural.hpp"

namespace semigold {

class QuadraticNat {
    big_int a_;  // rational part
    big_int b_;  // coefficient of sqrt(2)

public:
    QuadraticNat() : a_(0), b_(0) {}
    QuadraticNat(const big_int& a, const big_int& b) : a_(a), b_(b) {
        if (a_ < 0 || b_ < 0) throw std::domain_error("QuadraticNat: negative component");
    }
    QuadraticNat(std::int64_t a, std::int64_t b = 0) : QuadraticNat(big_int(a), big_int(b)) {}
    QuadraticNat(int a) : QuadraticNat(big_int(a), big_int(0)) {}

    static QuadraticNat zero() { return QuadraticNat(); }
    static QuadraticNat one() { return QuadraticNat(1, 0); }
    static QuadraticNat sqrt2() { return QuadraticNat(0, 1); }

    const big_int& a() const { return a_; }
    const big_int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_unit() const { return a_ == 1 && b_ == 0; }

    QuadraticNat operator+(const QuadraticNat& o) const {
        return QuadraticNat(a_ + o.a_, b_ + o.b_);
    }
    QuadraticNat operator*(const QuadraticNat& o) const {
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r  with r = sqrt(2)
        return QuadraticNat(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }

    bool operator==(const QuadraticNat& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadraticNat& o) const { return !(*this == o); }
    bool operator<(const QuadraticNat& o) const {
        // order by value: a1 + b1*sqrt2 < a2 + b2*sqrt2  iff  da < db*sqrt2
        // with da = a1-a2, db = b2-b1; squaring resolves the mixed-sign-free cases
        const big_int da = a_ - o.a_, db = o.b_ - b_;
        if (da <= 0 && db >= 0) return !(da == 0 && db == 0);
        if (da >= 0 && db <= 0) return false;
        if (da > 0) return da * da < 2 * db * db;   // da>0, db>0
        return da * da > 2 * db * db;               // da<0, db<0
    }

    std::optional<QuadraticNat> try_sub(const QuadraticNat& o) const {
        if (a_ < o.a_ || b_ < o.b_) return std::nullopt;
        return QuadraticNat(a_ - o.a_, b_ - o.b_);
    }

    /// Exact division in N[sqrt(2)]: solve (this) = (o) * q with q in the ring.
    std::optional<QuadraticNat> try_div(const QuadraticNat& o) const {
        if (o.is_zero()) return std::nullopt;
        // q = (c + d r): o.a*c + 2 o.b*d = a,  o.a*d + o.b*c = b.
        // Determinant o.a^2 - 2 o.b^2 is nonzero for nonzero o.
        const big_int det = o.a_ * o.a_ - 2 * o.b_ * o.b_;
        if (det == 0) return std::nullopt;  // cannot happen for integer o != 0
        const big_int cn = o.a_ * a_ - 2 * o.b_ * b_;
        const big_int dn = o.a_ * b_ - o.b_ * a_;
        if (cn % det != 0 || dn % det != 0) return std::nullopt;
        const big_int c = cn / det, d = dn / det;
        if (c < 0 || d < 0) return std::nullopt;
        return QuadraticNat(c, d);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (a_ != 0) s += a_.str();
        if (b_ != 0) {
            if (!s.empty()) s += "+";
            if (b_ != 1) s += b_.str();
            s += "r2";
        }
        return s;
    }
};

inline std::string to_text(const QuadraticNat& q) { return q.str(); }

inline big_int below_count(const QuadraticNat& bound) {
    return (bound.a() + 1) * (bound.b() + 1);
}

/// Componentwise sub-box: all s with s + t = bound for some t in the ring.
inline std::vector<QuadraticNat> additive_below(const QuadraticNat& bound) {
    std::vector<QuadraticNat> out;
    for (big_int x = 0; x <= bound.a(); ++x)
        for (big_int y = 0; y <= bound.b(); ++y) out.emplace_back(x, y);
    return out;
}

}  // namespace semigold
