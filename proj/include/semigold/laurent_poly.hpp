#pragma once

/**
 * @file laurent_poly.hpp
 * @brief Sparse exact Laurent polynomials over any registered coefficient
 *        ring. Multivariate polynomials are nested univariate ones: the last
 *        declared variable is outermost.
 */

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semidomain.hpp"

namespace semigold {

template <semidomain_scalar S>
class LaurentPoly {
public:
    using coeff_type = S;
    using term_map = std::map<std::int64_t, S>;  // ascending exponents, no zero coeffs

private:
    term_map terms_;

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        if ((b > 0 && a > std::numeric_limits<std::int64_t>::max() - b) ||
            (b < 0 && a < std::numeric_limits<std::int64_t>::min() - b))
            throw std::overflow_error("LaurentPoly: exponent overflow");
        return a + b;
    }

public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, S::one()); }
    static LaurentPoly monomial(std::int64_t exp, const S& c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[exp] = c;
        return p;
    }

    const term_map& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const { return terms_.size() == 1 && terms_.begin()->second.is_unit(); }
    bool is_monomial() const { return terms_.size() == 1; }

    S coeff(std::int64_t exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? S::zero() : it->second;
    }

    void add_term(std::int64_t exp, const S& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::int64_t min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    std::int64_t max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    std::vector<std::int64_t> support() const {
        std::vector<std::int64_t> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.push_back(e);
        return out;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) out.add_term(checked_add(e1, e2), c1 * c2);
        return out;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Support-lexicographic order (used only to canonicalize output sets).
    bool operator<(const LaurentPoly& o) const {
        auto it = terms_.begin(), jt = o.terms_.begin();
        for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return it->first < jt->first;
            if (!(it->second == jt->second)) return it->second < jt->second;
        }
        return terms_.size() < o.terms_.size();
    }

    /// f * x^k.
    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_[checked_add(e, k)] = c;
        return out;
    }

    /// f(1/x): exponents negated. Swaps the roles of the two half lemmas.
    LaurentPoly reversed() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_[-e] = c;
        return out;
    }

    /// (f * x^(-min_exp), min_exp): shift so the minimum exponent is 0.
    std::pair<LaurentPoly, std::int64_t> normalize_shift() const {
        if (is_zero()) throw std::domain_error("normalize_shift of zero polynomial");
        const std::int64_t k = min_exp();
        return {shifted(-k), k};
    }

    /// Coefficientwise partial subtraction; absent when any term would leave
    /// the coefficient ring.
    std::optional<LaurentPoly> try_sub(const LaurentPoly& o) const {
        LaurentPoly out = *this;
        for (const auto& [e, c] : o.terms_) {
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) return std::nullopt;
            auto d = it->second.try_sub(c);
            if (!d) return std::nullopt;
            if (d->is_zero())
                out.terms_.erase(it);
            else
                it->second = *d;
        }
        return out;
    }

    /// Exact division. The quotient in the enclosing integral domain is
    /// unique, so eliminating lowest terms greedily finds it exactly when it
    /// exists with coefficients in the ring.
    std::optional<LaurentPoly> try_div(const LaurentPoly& g) const {
        if (g.is_zero()) return std::nullopt;
        LaurentPoly rem = *this;
        LaurentPoly q;
        const auto& [ge, gc] = *g.terms_.begin();
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.begin();
            auto qc = rc.try_div(gc);
            if (!qc) return std::nullopt;
            const std::int64_t qe = re - ge;
            q.add_term(qe, *qc);
            auto next = rem.try_sub(g * monomial(qe, *qc));
            if (!next) return std::nullopt;
            rem = *next;
        }
        return q;
    }

    std::vector<S> coefficients() const {
        std::vector<S> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.push_back(c);
        return out;
    }
};

// --- nesting depth and the flat multi-index view ----------------------------

template <class S>
struct poly_depth {
    static constexpr int value = 0;
    using leaf = S;
};
template <class S>
struct poly_depth<LaurentPoly<S>> {
    static constexpr int value = 1 + poly_depth<S>::value;
    using leaf = typename poly_depth<S>::leaf;
};

template <class S>
inline constexpr int var_count_v = poly_depth<S>::value;

template <class S>
using leaf_scalar_t = typename poly_depth<S>::leaf;

template <class S>
struct is_laurent_poly : std::false_type {};
template <class S>
struct is_laurent_poly<LaurentPoly<S>> : std::true_type {};

/// Sum of all coefficients, flattened to the leaf ring. Equals evaluation at
/// all-ones, so it is additive and multiplicative.
template <class S>
leaf_scalar_t<S> mass(const S& s) {
    if constexpr (is_laurent_poly<S>::value) {
        auto acc = leaf_scalar_t<S>::zero();
        for (const auto& [e, c] : s.terms()) acc = acc + mass(c);
        return acc;
    } else {
        return s;
    }
}

template <class Leaf>
using flat_terms_t = std::vector<std::pair<std::vector<std::int64_t>, Leaf>>;

namespace detail {
template <class S>
void flatten_into(const S& s, std::vector<std::int64_t>& tail_exps,
                  flat_terms_t<leaf_scalar_t<S>>& out) {
    if constexpr (is_laurent_poly<S>::value) {
        for (const auto& [e, c] : s.terms()) {
            tail_exps.push_back(e);
            flatten_into(c, tail_exps, out);
            tail_exps.pop_back();
        }
    } else {
        // exponents were collected outermost-first; emit in declared order
        std::vector<std::int64_t> exps(tail_exps.rbegin(), tail_exps.rend());
        out.emplace_back(std::move(exps), s);
    }
}
}  // namespace detail

/// Read-only flat view: declared-order exponent vectors with leaf coefficients.
template <class S>
flat_terms_t<leaf_scalar_t<S>> flat_terms(const S& s) {
    flat_terms_t<leaf_scalar_t<S>> out;
    std::vector<std::int64_t> prefix;
    detail::flatten_into(s, prefix, out);
    return out;
}

/// Rebuild a nested polynomial from flat terms (inverse of flat_terms; terms
/// with equal exponent vectors accumulate).
template <class P>
P from_flat_terms(const flat_terms_t<leaf_scalar_t<P>>& terms) {
    if constexpr (is_laurent_poly<P>::value) {
        using Inner = typename P::coeff_type;
        std::map<std::int64_t, flat_terms_t<leaf_scalar_t<P>>> groups;
        for (const auto& [exps, c] : terms) {
            if (exps.empty()) throw std::invalid_argument("from_flat_terms: exponent arity");
            std::vector<std::int64_t> rest(exps.begin(), exps.end() - 1);
            groups[exps.back()].emplace_back(std::move(rest), c);
        }
        P out;
        for (const auto& [e, g] : groups) out.add_term(e, from_flat_terms<Inner>(g));
        return out;
    } else {
        P acc = P::zero();
        for (const auto& [exps, c] : terms) {
            if (!exps.empty()) throw std::invalid_argument("from_flat_terms: exponent arity");
            acc = acc + c;
        }
        return acc;
    }
}

/// Number of flat terms (the multivariate support size).
template <class S>
std::size_t flat_support_size(const S& s) {
    if constexpr (is_laurent_poly<S>::value) {
        std::size_t n = 0;
        for (const auto& [e, c] : s.terms()) n += flat_support_size(c);
        return n;
    } else {
        return s.is_zero() ? 0 : 1;
    }
}

// --- semidomain interface for nested polynomials ----------------------------

template <semidomain_scalar S>
struct semidomain_traits<LaurentPoly<S>> {
    static constexpr bool additively_reduced = semidomain_traits<S>::additively_reduced;
    static constexpr bool additively_atomic = semidomain_traits<S>::additively_atomic;
    static constexpr bool atoms_are_units = semidomain_traits<S>::atoms_are_units;
    static constexpr bool supports_exhaustive_split =
        semidomain_traits<S>::supports_exhaustive_split;
    static std::string name() { return semidomain_traits<S>::name() + "[x^±1]"; }
};

/// Lowest-exponent term, reduced to a unit monomial via the inner split.
template <semidomain_scalar S>
UnitSplit<LaurentPoly<S>> unit_split(const LaurentPoly<S>& p) {
    if (p.is_zero()) throw std::domain_error("unit_split: zero input");
    const auto& [e, c] = *p.terms().begin();
    UnitSplit<S> inner = unit_split(c);
    LaurentPoly<S> rest = *p.try_sub(LaurentPoly<S>::monomial(e, c));
    rest.add_term(e, inner.rest);
    return {LaurentPoly<S>::monomial(e, inner.unit), rest};
}

/// Units at distinct exponents cannot merge over a reduced coefficient ring,
/// so the minimum decomposes termwise.
template <semidomain_scalar S>
std::optional<int> min_unit_summands(const LaurentPoly<S>& p, int cap) {
    if (p.is_zero()) throw std::invalid_argument("min_unit_summands: zero input");
    int total = 0;
    for (const auto& [e, c] : p.terms()) {
        auto m = min_unit_summands(c, cap - total);
        if (!m) return std::nullopt;
        total += *m;
        if (total > cap) return std::nullopt;
    }
    return total;
}

template <semidomain_scalar S>
big_int below_count(const LaurentPoly<S>& bound) {
    big_int n = 1;
    for (const auto& [e, c] : bound.terms()) n *= below_count(c);
    return n;
}

/// All polynomials coefficientwise additively below the bound.
template <semidomain_scalar S>
std::vector<LaurentPoly<S>> additive_below(const LaurentPoly<S>& bound) {
    std::vector<LaurentPoly<S>> out{LaurentPoly<S>::zero()};
    for (const auto& [e, c] : bound.terms()) {
        std::vector<LaurentPoly<S>> next;
        for (const auto& partial : out)
            for (const auto& cc : additive_below(c)) {
                LaurentPoly<S> q = partial;
                q.add_term(e, cc);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace semigold
