#pragma once

/**
 * @file goldbach.hpp
 * @brief Constructive decomposition of Laurent polynomials into at most two
 *        multiplicative irreducibles, with certified summands.
 *
 * The engine needs the coefficient ring to be additively reduced and atomic
 * with additive atoms equal to units: unit splits s = u + v then exist for
 * every nonzero s, and the binomial/trinomial constructions plus the
 * upper/lower support split settle every polynomial with more than one term
 * apart from the two exceptional shapes (a unit-coefficient binomial and a
 * three-unit trinomial), which are themselves irreducible.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irreducibility.hpp"

namespace semigold {

enum class VerdictKind {
    irreducible_itself,
    sum_of_two,
    exceptional_form_a,
    exceptional_form_b,
    out_of_scope_monomial,
    not_applicable_instance,
};

inline const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::irreducible_itself: return "IrreducibleItself";
        case VerdictKind::sum_of_two: return "SumOfTwo";
        case VerdictKind::exceptional_form_a: return "ExceptionalFormA";
        case VerdictKind::exceptional_form_b: return "ExceptionalFormB";
        case VerdictKind::out_of_scope_monomial: return "OutOfScopeMonomial";
        case VerdictKind::not_applicable_instance: return "NotApplicableInstance";
    }
    return "?";
}

template <class P>
struct GoldbachVerdict {
    VerdictKind kind;
    std::vector<std::pair<P, Certificate>> summands;  // exactly two for sum_of_two
    std::optional<Certificate> self_certificate;      // for irreducible verdicts
};

namespace detail {

template <semidomain_scalar S>
Certificate certify_or_fail(const LaurentPoly<S>& p, const search_limits& lim,
                            const char* where) {
    auto r = certify_irreducible(p, lim);
    if (r.status != CertifyResult<LaurentPoly<S>>::Status::certified)
        throw std::logic_error(std::string("summand failed certification in ") + where);
    return *r.cert;
}

template <semidomain_scalar S>
GoldbachVerdict<LaurentPoly<S>> sum_of_two_checked(const LaurentPoly<S>& f,
                                                   const LaurentPoly<S>& g1,
                                                   const LaurentPoly<S>& g2,
                                                   const search_limits& lim, const char* where) {
    if (!(g1 + g2 == f)) throw std::logic_error(std::string("summands do not add up in ") + where);
    auto c1 = certify_or_fail(g1, lim, where);
    auto c2 = certify_or_fail(g2, lim, where);
    // canonical unordered pair: serialize in support-lexicographic order
    if (g2 < g1)
        return {VerdictKind::sum_of_two, {{g2, c2}, {g1, c1}}, std::nullopt};
    return {VerdictKind::sum_of_two, {{g1, c1}, {g2, c2}}, std::nullopt};
}

}  // namespace detail

/// Decomposition into at most two multiplicative irreducibles.
template <semidomain_scalar S>
GoldbachVerdict<LaurentPoly<S>> goldbach(const LaurentPoly<S>& f,
                                         const search_limits& lim = search_limits::defaults()) {
    using P = LaurentPoly<S>;
    using T = semidomain_traits<S>;
    if constexpr (!(T::additively_reduced && T::additively_atomic && T::atoms_are_units)) {
        (void)lim;
        return {VerdictKind::not_applicable_instance, {}, std::nullopt};
    } else {
        if (f.is_zero()) throw std::invalid_argument("goldbach: zero polynomial");
        const auto supp = f.support();
        const std::size_t n = supp.size();
        if (n == 1) return {VerdictKind::out_of_scope_monomial, {}, std::nullopt};

        if (n == 2) {
            const std::int64_t klo = supp[0], khi = supp[1];
            const S a = f.coeff(khi), b = f.coeff(klo);
            if (a.is_unit() || b.is_unit())
                return {VerdictKind::exceptional_form_a, {},
                        detail::certify_or_fail(f, lim, "binomial exceptional form")};
            auto sa = unit_split(a);
            auto sb = unit_split(b);
            P g1 = P::monomial(khi, sa.unit) + P::monomial(klo, sb.rest);
            P g2 = P::monomial(khi, sa.rest) + P::monomial(klo, sb.unit);
            return detail::sum_of_two_checked(f, g1, g2, lim, "binomial split");
        }

        if (n == 3) {
            const std::int64_t k2 = supp[0], k1 = supp[1], k0 = supp[2];  // k0 highest
            const S a = f.coeff(k0), b = f.coeff(k1), c = f.coeff(k2);
            if (a.is_unit() && b.is_unit() && c.is_unit())
                return {VerdictKind::exceptional_form_b, {},
                        detail::certify_or_fail(f, lim, "three-unit trinomial")};
            if (b.is_unit()) {
                // middle coefficient is a unit; split whichever end is not
                if (!a.is_unit()) {
                    auto sa = unit_split(a);
                    P g1 = P::monomial(k0, sa.unit) + P::monomial(k2, c);
                    P g2 = P::monomial(k0, sa.rest) + P::monomial(k1, b);
                    return detail::sum_of_two_checked(f, g1, g2, lim, "trinomial unit-middle");
                }
                auto sc = unit_split(c);
                P g1 = P::monomial(k2, sc.unit) + P::monomial(k0, a);
                P g2 = P::monomial(k2, sc.rest) + P::monomial(k1, b);
                return detail::sum_of_two_checked(f, g1, g2, lim, "trinomial unit-middle mirror");
            }
            // middle coefficient is not a unit: peel a unit off both top and middle
            auto sb = unit_split(b);
            auto sa = unit_split(a);
            P g1 = P::monomial(k0, sa.unit) + P::monomial(k1, sb.rest);
            P g2 = P::monomial(k1, sb.unit) + P::monomial(k2, c);
            g2.add_term(k0, sa.rest);  // may be zero when a is a unit
            return detail::sum_of_two_checked(f, g1, g2, lim, "trinomial general");
        }

        // more than three terms: split the support around the midpoint
        const std::int64_t lo = supp.front(), hi = supp.back();
        auto s_top = unit_split(f.coeff(hi));  // u0 + v0
        auto s_bot = unit_split(f.coeff(lo));  // un + vn

        P upper = P::monomial(hi, s_top.rest);  // drops if v0 = 0
        upper.add_term(lo, s_bot.unit);
        P lower = P::monomial(hi, s_top.unit);
        lower.add_term(lo, s_bot.rest);  // drops if vn = 0
        std::optional<std::int64_t> midpoint;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const std::int64_t e = supp[i];
            if (2 * e > hi + lo)
                upper.add_term(e, f.coeff(e));
            else if (2 * e < hi + lo)
                lower.add_term(e, f.coeff(e));
            else
                midpoint = e;
        }

        if (upper.is_unit()) {
            // top coefficient is a unit and everything else sits at or below
            // the midpoint: pair the second-highest term with the bottom unit
            const std::int64_t k1 = supp[n - 2];
            P first = P::monomial(k1, f.coeff(k1)) + P::monomial(lo, s_bot.unit);
            P second = P::monomial(hi, f.coeff(hi));
            for (std::size_t i = 1; i + 2 < n; ++i) second.add_term(supp[i], f.coeff(supp[i]));
            second.add_term(lo, s_bot.rest);
            return detail::sum_of_two_checked(f, first, second, lim, "unit upper part");
        }
        if (lower.is_unit()) {
            // mirror case: bottom coefficient is a unit, everything else at or
            // above the midpoint
            const std::int64_t k1 = supp[1];
            P first = P::monomial(k1, f.coeff(k1)) + P::monomial(hi, s_top.unit);
            P second = P::monomial(lo, f.coeff(lo));
            for (std::size_t i = 2; i + 1 < n; ++i) second.add_term(supp[i], f.coeff(supp[i]));
            second.add_term(hi, s_top.rest);
            return detail::sum_of_two_checked(f, first, second, lim, "unit lower part");
        }

        if (midpoint) {
            const S mc = f.coeff(*midpoint);
            P cand = upper;
            cand.add_term(*midpoint, mc);
            if (certify_irreducible(cand, lim).status ==
                CertifyResult<P>::Status::certified)
                return detail::sum_of_two_checked(f, cand, lower, lim, "midpoint to upper");
            P cand2 = lower;
            cand2.add_term(*midpoint, mc);
            return detail::sum_of_two_checked(f, upper, cand2, lim, "midpoint to lower");
        }
        return detail::sum_of_two_checked(f, upper, lower, lim, "upper/lower split");
    }
}

// --- multivariate wrapper -------------------------------------------------------

/// Decomposition for nested polynomials over Nat. Beyond the generic engine
/// this adds the two multivariate-only steps: recursion through outer
/// monomials, and the three-way unit peel for a binomial whose one
/// coefficient is a unit but whose mass exceeds three.
template <class P>
GoldbachVerdict<P> goldbach_multi(const P& f,
                                  const search_limits& lim = search_limits::defaults()) {
    static_assert(std::is_same_v<leaf_scalar_t<P>, Nat>, "goldbach_multi expects Nat leaves");
    if (f.is_zero()) throw std::invalid_argument("goldbach_multi: zero polynomial");
    if (flat_support_size(f) == 1) return {VerdictKind::out_of_scope_monomial, {}, std::nullopt};

    if constexpr (var_count_v<P> == 1) {
        return goldbach(f, lim);
    } else {
        using Inner = typename P::coeff_type;
        if (f.term_count() == 1) {
            // a monomial in the outermost variable: decompose its coefficient
            const auto& [e, c] = *f.terms().begin();
            GoldbachVerdict<Inner> inner = goldbach_multi(c, lim);
            GoldbachVerdict<P> out{inner.kind, {}, inner.self_certificate};
            for (const auto& [p, cert] : inner.summands)
                out.summands.emplace_back(P::monomial(e, p), cert);
            return out;
        }
        if (f.term_count() == 2) {
            const auto supp = f.support();
            const Inner a = f.coeff(supp[1]), b = f.coeff(supp[0]);
            const bool au = a.is_unit(), bu = b.is_unit();
            if (au || bu) {
                if (mass(f).value() <= 3)
                    return {VerdictKind::exceptional_form_a, {},
                            detail::certify_or_fail(f, lim, "multivariate exceptional binomial")};
                // one unit coefficient, total mass beyond three: peel two
                // units off the non-unit side; they form an irreducible
                // monomial coefficient of their own
                const std::int64_t tu = au ? supp[1] : supp[0];
                const std::int64_t tb = au ? supp[0] : supp[1];
                const Inner& unit_side = au ? a : b;
                const Inner& bulk = au ? b : a;
                auto s1 = unit_split(bulk);
                auto s2 = unit_split(s1.rest);
                if (s2.rest.is_zero())
                    throw std::logic_error("goldbach_multi: mass accounting is off");
                P first = P::monomial(tu, unit_side) + P::monomial(tb, s2.rest);
                P second = P::monomial(tb, s1.unit + s2.unit);
                if (!(first + second == f))
                    throw std::logic_error("goldbach_multi: binomial peel does not add up");
                auto c1 = detail::certify_or_fail(first, lim, "multivariate binomial peel");
                Certificate c2{CertKind::monomial_unit_pair, true, std::nullopt};
                if (!validate_certificate(second, c2))
                    throw std::logic_error("goldbach_multi: unit-pair certificate invalid");
                if (second < first) return {VerdictKind::sum_of_two, {{second, c2}, {first, c1}}, {}};
                return {VerdictKind::sum_of_two, {{first, c1}, {second, c2}}, {}};
            }
        }
        return goldbach(f, lim);
    }
}

// --- the nonnegative-rational route ----------------------------------------------

/// q+ has no additive atoms, so the unit-split engine refuses it. Scaling by
/// a common denominator lands in Nat, where the engine applies; the summands
/// divide back and stay irreducible because the support criteria survive
/// scaling and every nonzero rational is a unit.
inline GoldbachVerdict<LaurentPoly<NonnegRational>> goldbach_rational(
    const LaurentPoly<NonnegRational>& f, const search_limits& lim = search_limits::defaults()) {
    using PR = LaurentPoly<NonnegRational>;
    using PN = LaurentPoly<Nat>;
    if (f.is_zero()) throw std::invalid_argument("goldbach_rational: zero polynomial");
    const auto supp = f.support();
    const std::size_t n = supp.size();
    if (n == 1) return {VerdictKind::out_of_scope_monomial, {}, std::nullopt};

    auto lemma_cert = [&](const PR& p, const char* where) {
        auto r = certify_irreducible(p, lim);
        if (r.status != CertifyResult<PR>::Status::certified ||
            r.cert->kind == CertKind::brute_force_no_factor)
            throw std::logic_error(std::string("rational summand not lemma-certified in ") + where);
        return *r.cert;
    };

    if (n == 2)
        return {VerdictKind::irreducible_itself, {}, lemma_cert(f, "rational binomial")};

    if (n == 3) {
        auto r = certify_irreducible(f, lim);
        if (r.status == CertifyResult<PR>::Status::certified)
            return {VerdictKind::irreducible_itself, {}, *r.cert};
        // reducible trinomial: halving the middle coefficient yields two
        // irreducible binomials
        const NonnegRational b = f.coeff(supp[1]);
        const NonnegRational half(b.value() / 2);
        PR g1 = PR::monomial(supp[2], f.coeff(supp[2])) + PR::monomial(supp[1], half);
        PR g2 = PR::monomial(supp[1], half) + PR::monomial(supp[0], f.coeff(supp[0]));
        if (!(g1 + g2 == f)) throw std::logic_error("goldbach_rational: trinomial halving");
        auto c1 = lemma_cert(g1, "rational trinomial");
        auto c2 = lemma_cert(g2, "rational trinomial");
        if (g2 < g1) return {VerdictKind::sum_of_two, {{g2, c2}, {g1, c1}}, {}};
        return {VerdictKind::sum_of_two, {{g1, c1}, {g2, c2}}, {}};
    }

    // scale by the least common denominator
    big_int N = 1;
    for (const auto& c : f.coefficients())
        N = boost::multiprecision::lcm(N, c.denominator());
    PN fn;
    for (const auto& [e, c] : f.terms()) {
        const big_rat scaled = c.value() * big_rat(N);
        fn.add_term(e, Nat(boost::multiprecision::numerator(scaled)));
    }
    auto v = goldbach(fn, lim);
    if (v.kind != VerdictKind::sum_of_two)
        throw std::logic_error("goldbach_rational: scaled polynomial was not a two-sum");
    GoldbachVerdict<PR> out{VerdictKind::sum_of_two, {}, std::nullopt};
    for (const auto& [g, cert] : v.summands) {
        PR gr;
        for (const auto& [e, c] : g.terms())
            gr.add_term(e, NonnegRational(big_rat(c.value()) / big_rat(N)));
        out.summands.emplace_back(gr, lemma_cert(gr, "rational scaled summand"));
    }
    if (!(out.summands[0].first + out.summands[1].first == f))
        throw std::logic_error("goldbach_rational: summands do not add up");
    return out;
}

// --- the two-thirds family -------------------------------------------------------

/// One member of the infinite decomposition family of (4/3)x + 2 over the
/// two-thirds semiring: [(2/3)^n x + 1] + [s_n x + 1] with
/// s_n = 4/3 - (2/3)^n realized by witness rewrites.
struct TwoThirdsFamilyItem {
    int index;
    std::pair<LaurentPoly<TwoThirds>, Certificate> first;
    std::pair<LaurentPoly<TwoThirds>, Certificate> second;
};

inline LaurentPoly<TwoThirds> two_thirds_family_target() {
    using PT = LaurentPoly<TwoThirds>;
    return PT::monomial(1, TwoThirds::from_witness({{1, 2}})) + PT::monomial(0, TwoThirds(2));
}

inline TwoThirdsFamilyItem two_thirds_family(int n,
                                             const search_limits& lim = search_limits::defaults()) {
    using PT = LaurentPoly<TwoThirds>;
    if (n < 1) throw std::invalid_argument("two_thirds_family: index must be positive");
    // drive 4/3 = 2*(2/3) through the rewrite chain until an atom at level n
    // appears, then peel it
    TwoThirds a = TwoThirds::from_witness({{1, 2}});
    for (int k = 1; k < n; ++k) a = a.rewrite_split(k);
    const TwoThirds s_n = a.peel_atom(n);
    PT g1 = PT::monomial(1, TwoThirds::atom(n)) + PT::monomial(0, TwoThirds(1));
    PT g2 = PT::monomial(1, s_n) + PT::monomial(0, TwoThirds(1));
    if (!(g1 + g2 == two_thirds_family_target()))
        throw std::logic_error("two_thirds_family: summands do not reach the target");
    auto c1 = detail::certify_or_fail(g1, lim, "two-thirds family");
    auto c2 = detail::certify_or_fail(g2, lim, "two-thirds family");
    return {n, {g1, c1}, {g2, c2}};
}

}  // namespace semigold
