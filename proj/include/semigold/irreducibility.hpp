#pragma once

/**
 * @file irreducibility.hpp
 * @brief Irreducibility certificates and the independent brute-force oracles.
 *
 * Certificates are sufficient criteria re-checkable from the polynomial
 * alone. The brute-force factorizer is complete over rings with finite split
 * enumeration: coefficients cannot cancel, so every candidate factor is
 * support- and coefficient-bounded by the input, and exact division verifies
 * each candidate.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laurent_poly.hpp"

namespace semigold {

// --- certificates ------------------------------------------------------------

enum class CertKind {
    binomial_monolithic,
    monolithic_lower_half,
    monolithic_upper_half,
    trinomial_unit_middle,
    monomial_unit_pair,
    trinomial_no_rational_root,
    brute_force_no_factor,
    hyper_monolithic,
    eventually_increasing_gaps,
};

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::binomial_monolithic: return "binomial_monolithic";
        case CertKind::monolithic_lower_half: return "monolithic_lower_half";
        case CertKind::monolithic_upper_half: return "monolithic_upper_half";
        case CertKind::trinomial_unit_middle: return "trinomial_unit_middle";
        case CertKind::monomial_unit_pair: return "monomial_unit_pair";
        case CertKind::trinomial_no_rational_root: return "trinomial_no_rational_root";
        case CertKind::brute_force_no_factor: return "brute_force_no_factor";
        case CertKind::hyper_monolithic: return "hyper_monolithic";
        case CertKind::eventually_increasing_gaps: return "eventually_increasing_gaps";
    }
    return "?";
}

struct SearchBounds {
    std::int64_t degree_bound = 0;
    std::uint64_t mass_bound = 0;
};

struct Certificate {
    CertKind kind;
    bool gcd_ok = true;
    std::optional<SearchBounds> bounds;  // present for brute_force_no_factor
};

/// Sufficient support criteria for being monolithic (every factorization has
/// a monomial factor). Absence does not mean non-monolithic.
template <semidomain_scalar S>
std::optional<CertKind> monolithic_sufficient(const LaurentPoly<S>& f) {
    const auto supp = f.support();
    const std::size_t n = supp.size();
    if (n < 2) throw std::invalid_argument("monolithic_sufficient: fewer than 2 terms");
    if (n == 2) return CertKind::binomial_monolithic;
    const std::int64_t lo = supp.front(), hi = supp.back();
    const std::int64_t second_hi = supp[n - 2], second_lo = supp[1];
    // exponent comparisons doubled to stay in integers
    if (2 * second_hi < hi + lo || (n > 3 && 2 * second_hi <= hi + lo))
        return CertKind::monolithic_lower_half;
    if (2 * second_lo > hi + lo || (n > 3 && 2 * second_lo >= hi + lo))
        return CertKind::monolithic_upper_half;
    return std::nullopt;
}

// --- scalar helpers for the oracles -------------------------------------------

/// Rough magnitude used for the oracle mass guard.
inline big_int scalar_weight(const Nat& n) { return n.value(); }
inline big_int scalar_weight(const QuadraticNat& q) { return q.a() + 2 * q.b(); }
inline big_int scalar_weight(const NonnegRational&) { return 1; }
inline big_int scalar_weight(const TwoThirds&) { return 1; }

/// Nonzero candidate coefficients for a factor position: g_a * h_0 sits
/// additively below bound and h_0 is at least the minimal nonzero element.
inline std::vector<Nat> factor_coeff_candidates(const Nat& bound) {
    std::vector<Nat> out;
    for (big_int i = 1; i <= bound.value(); ++i) out.emplace_back(i);
    return out;
}
inline std::vector<QuadraticNat> factor_coeff_candidates(const QuadraticNat& bound) {
    const big_int m = std::max(bound.a(), bound.b());
    std::vector<QuadraticNat> out;
    for (big_int x = 0; x <= m; ++x)
        for (big_int y = 0; y <= m; ++y)
            if (x != 0 || y != 0) out.emplace_back(x, y);
    return out;
}

// --- univariate brute-force factorization -------------------------------------

template <class P>
std::optional<std::pair<P, P>> factor_bruteforce_flat(
    const P& f, const search_limits& lim = search_limits::defaults());

/// A nontrivial factorization f = g * h with neither factor a unit, if one
/// exists. Complete: after normalizing, one factor has degree at most half
/// the span, its support lies inside supp(f), and each coefficient is bounded
/// by the matching coefficient of f. Nested inputs route through the flat
/// multivariate scan.
template <semidomain_scalar S>
std::optional<std::pair<LaurentPoly<S>, LaurentPoly<S>>> factor_bruteforce(
    const LaurentPoly<S>& f, const search_limits& lim = search_limits::defaults()) {
    using P = LaurentPoly<S>;
    if constexpr (!semidomain_traits<S>::supports_exhaustive_split) {
        throw unsupported_instance("factor_bruteforce: " + semidomain_traits<S>::name() +
                                   " has no finite split enumeration");
    } else if constexpr (is_laurent_poly<S>::value) {
        return factor_bruteforce_flat(f, lim);
    } else {
        if (f.is_zero()) throw std::invalid_argument("factor_bruteforce: zero polynomial");
        if (f.is_unit()) return std::nullopt;
        auto [fn, shift] = f.normalize_shift();
        const std::int64_t deg = fn.max_exp();
        if (deg > lim.degree_bound)
            throw degree_bound_exceeded("factor_bruteforce: degree " + std::to_string(deg));
        if (scalar_weight(mass(fn)) > big_int(lim.mass_bound))
            throw degree_bound_exceeded("factor_bruteforce: coefficient mass bound");

        std::vector<std::int64_t> positions;
        for (std::int64_t e : fn.support())
            if (2 * e <= deg) positions.push_back(e);  // positions for the smaller factor
        // candidate supports: subsets containing 0, by increasing degree then lex
        std::vector<std::vector<std::int64_t>> supports;
        const std::size_t extra = positions.size() - 1;  // position 0 is forced
        for (std::size_t maskv = 0; maskv < (std::size_t{1} << extra); ++maskv) {
            std::vector<std::int64_t> a{0};
            for (std::size_t i = 0; i < extra; ++i)
                if (maskv & (std::size_t{1} << i)) a.push_back(positions[i + 1]);
            supports.push_back(std::move(a));
        }
        std::sort(supports.begin(), supports.end(),
                  [](const auto& a, const auto& b) {
                      if (a.back() != b.back()) return a.back() < b.back();
                      return a < b;
                  });

        step_counter steps(lim.step_budget);
        for (const auto& a : supports) {
            std::vector<std::vector<S>> cand;
            cand.reserve(a.size());
            for (std::int64_t e : a) cand.push_back(factor_coeff_candidates(fn.coeff(e)));
            std::vector<std::size_t> idx(a.size(), 0);
            while (true) {
                if (!steps.spend()) throw search_exhausted("factor_bruteforce: step budget");
                P g;
                for (std::size_t i = 0; i < a.size(); ++i) g.add_term(a[i], cand[i][idx[i]]);
                if (!g.is_unit()) {
                    if (auto h = fn.try_div(g); h && !h->is_unit())
                        return std::make_pair(g.shifted(shift), *h);
                }
                std::size_t i = 0;
                for (; i < idx.size(); ++i) {
                    if (++idx[i] < cand[i].size()) break;
                    idx[i] = 0;
                }
                if (i == idx.size()) break;
            }
        }
        return std::nullopt;
    }
}

// --- flat multivariate brute-force factorization -------------------------------

namespace detail {

/// Lexicographic next k-combination of {0..n-1}; false when done.
inline bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    const std::size_t sz = pick.size();
    std::size_t i = sz;
    while (i-- > 0) {
        if (pick[i] < n - sz + i) {
            ++pick[i];
            for (std::size_t j = i + 1; j < sz; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
        if (i == 0) break;
    }
    return false;
}

/// Enumerates factorizations (or all proper divisors) of a nested polynomial
/// over Nat through its flat view. Completeness: the flat support of a
/// product is the Minkowski sum of the factors' supports, so a normalized
/// factor fits the input's Newton box, and the flattened mass is
/// multiplicative, which prunes coefficient assignments.
template <class P, class Visit>
void flat_factor_scan(const P& f, const search_limits& lim, bool divisors_only, Visit&& visit) {
    static_assert(std::is_same_v<leaf_scalar_t<P>, Nat>,
                  "flat oracle needs Nat leaf coefficients");
    const auto flat = flat_terms(f);
    const std::size_t k = flat.front().first.size();
    std::vector<std::int64_t> mins(k, std::numeric_limits<std::int64_t>::max());
    std::vector<std::int64_t> maxs(k, std::numeric_limits<std::int64_t>::min());
    for (const auto& [e, c] : flat)
        for (std::size_t j = 0; j < k; ++j) {
            mins[j] = std::min(mins[j], e[j]);
            maxs[j] = std::max(maxs[j], e[j]);
        }
    big_int cells = 1;
    for (std::size_t j = 0; j < k; ++j) {
        const std::int64_t span = maxs[j] - mins[j];
        if (span > lim.degree_bound)
            throw degree_bound_exceeded("flat oracle: span " + std::to_string(span));
        cells *= span + 1;
    }
    if (cells > 4096) throw degree_bound_exceeded("flat oracle: Newton box too large");

    // normalized flat support and coefficient lookup
    std::set<std::vector<std::int64_t>> suppN;
    flat_terms_t<Nat> flatN;
    for (const auto& [e, c] : flat) {
        std::vector<std::int64_t> en(k);
        for (std::size_t j = 0; j < k; ++j) en[j] = e[j] - mins[j];
        suppN.insert(en);
        flatN.emplace_back(en, c);
    }
    const P fN = from_flat_terms<P>(flatN);
    const big_int total_mass = mass(f).value();
    if (total_mass > big_int(lim.mass_bound))
        throw degree_bound_exceeded("flat oracle: mass bound");

    // all box points in lex order
    std::vector<std::vector<std::int64_t>> box;
    std::vector<std::int64_t> cur(k, 0);
    while (true) {
        box.push_back(cur);
        std::size_t j = 0;
        for (; j < k; ++j) {
            if (++cur[j] <= maxs[j] - mins[j]) break;
            cur[j] = 0;
        }
        if (j == k) break;
    }

    auto fits_shifted = [&](const std::vector<std::vector<std::int64_t>>& a) {
        // exists t >= 0 with a + t inside supp(fN)
        std::vector<std::int64_t> amax(k, 0);
        for (const auto& e : a)
            for (std::size_t j = 0; j < k; ++j) amax[j] = std::max(amax[j], e[j]);
        std::vector<std::int64_t> t(k, 0);
        while (true) {
            bool ok = true;
            for (const auto& e : a) {
                std::vector<std::int64_t> s(k);
                for (std::size_t j = 0; j < k; ++j) s[j] = e[j] + t[j];
                if (!suppN.count(s)) { ok = false; break; }
            }
            if (ok) return true;
            std::size_t j = 0;
            for (; j < k; ++j) {
                if (++t[j] <= (maxs[j] - mins[j]) - amax[j]) break;
                t[j] = 0;
            }
            if (j == k) return false;
        }
    };

    step_counter steps(lim.step_budget);
    std::vector<big_int> gmasses;
    for (big_int m = 2; m <= total_mass; ++m) {
        if (total_mass % m != 0) continue;
        // divisors may have a unit cofactor (mass = total); proper
        // factorizations need both masses >= 2, so the smaller is <= sqrt
        if (divisors_only ? true : (m * 2 <= total_mass && m * m <= total_mass))
            gmasses.push_back(m);
    }

    const std::size_t npts = box.size();
    for (const big_int& gm : gmasses) {
        const auto max_terms = static_cast<std::size_t>(
            std::min<big_int>(gm, big_int(static_cast<std::uint64_t>(npts))).convert_to<long>());
        // candidate supports: subsets of the box with per-dimension minimum 0
        for (std::size_t sz = 1; sz <= max_terms; ++sz) {
            std::vector<std::size_t> pick(sz);
            for (std::size_t i = 0; i < sz; ++i) pick[i] = i;
            do {
                if (!steps.spend()) throw search_exhausted("flat oracle: step budget");
                std::vector<std::vector<std::int64_t>> a;
                a.reserve(sz);
                for (std::size_t i : pick) a.push_back(box[i]);
                bool min_ok = true;
                for (std::size_t j = 0; j < k && min_ok; ++j) {
                    std::int64_t mn = a.front()[j];
                    for (const auto& e : a) mn = std::min(mn, e[j]);
                    if (mn != 0) min_ok = false;
                }
                if (!min_ok || !fits_shifted(a)) continue;
                // distribute the remaining mass over sz positions, each >= 1
                std::vector<big_int> extra(sz, 0);
                extra[0] = gm - big_int(static_cast<std::uint64_t>(sz));
                while (true) {
                    if (!steps.spend()) throw search_exhausted("flat oracle: step budget");
                    flat_terms_t<Nat> gt;
                    for (std::size_t i = 0; i < sz; ++i) gt.emplace_back(a[i], Nat(extra[i] + 1));
                    P g = from_flat_terms<P>(gt);
                    if (!g.is_unit()) {
                        if (auto h = fN.try_div(g); h && (divisors_only || !h->is_unit()))
                            if (visit(g, *h, mins)) return;
                    }
                    std::size_t i = 0;
                    while (i < sz && extra[i] == 0) ++i;
                    if (i + 1 >= sz) break;
                    const big_int take = extra[i];
                    extra[i] = 0;
                    extra[0] = take - 1;
                    extra[i + 1] += 1;
                }
            } while (next_combination(pick, npts));
        }
    }
}

}  // namespace detail

/// Brute-force factorization for nested (multivariate) polynomials over Nat.
template <class P>
std::optional<std::pair<P, P>> factor_bruteforce_flat(const P& f, const search_limits& lim) {
    if (f.is_zero()) throw std::invalid_argument("factor_bruteforce_flat: zero polynomial");
    if (f.is_unit()) return std::nullopt;
    std::optional<std::pair<P, P>> result;
    detail::flat_factor_scan(f, lim, /*divisors_only=*/false,
                             [&](const P& g, const P& h, const std::vector<std::int64_t>& mins) {
                                 // move the normalization shift onto g
                                 auto gf = flat_terms(g);
                                 for (auto& [e, c] : gf)
                                     for (std::size_t j = 0; j < e.size(); ++j) e[j] += mins[j];
                                 result = std::make_pair(from_flat_terms<P>(gf), h);
                                 return true;
                             });
    return result;
}

/// Irreducibility decided by the complete factor search (cacheable).
template <class P>
struct oracle_cache {
    std::map<P, bool> known;
};

template <class P>
bool oracle_irreducible(const P& f, const search_limits& lim = search_limits::defaults(),
                        oracle_cache<P>* cache = nullptr) {
    if (f.is_zero() || f.is_unit()) return false;
    if (cache) {
        auto it = cache->known.find(f);
        if (it != cache->known.end()) return it->second;
    }
    bool irred;
    if constexpr (var_count_v<P> >= 2) {
        irred = !factor_bruteforce_flat(f, lim).has_value();
    } else {
        irred = !factor_bruteforce(f, lim).has_value();
    }
    if (cache) cache->known[f] = irred;
    return irred;
}

// --- common divisors across coefficient sets ----------------------------------

inline std::optional<Nat> find_common_divisor(const std::vector<Nat>& xs,
                                              const search_limits& = search_limits::defaults()) {
    big_int g = 0;
    for (const auto& x : xs) g = boost::multiprecision::gcd(g, x.value());
    if (g > 1) return Nat(g);
    return std::nullopt;
}

inline std::optional<QuadraticNat> find_common_divisor(
    const std::vector<QuadraticNat>& xs, const search_limits& lim = search_limits::defaults()) {
    for (const auto& x : xs)
        if (x.is_unit()) return std::nullopt;
    const big_int bound = xs.front().a() + 2 * xs.front().b();
    step_counter steps(lim.step_budget);
    for (big_int a = 0; a <= bound; ++a)
        for (big_int b = 0; b <= bound; ++b) {
            if (!steps.spend()) throw search_exhausted("find_common_divisor: n0sqrt2");
            QuadraticNat d(a, b);
            if (d.is_zero() || d.is_unit()) continue;
            bool common = true;
            for (const auto& x : xs)
                if (!x.try_div(d)) { common = false; break; }
            if (common) return d;
        }
    return std::nullopt;
}

inline std::optional<NonnegRational> find_common_divisor(
    const std::vector<NonnegRational>&, const search_limits& = search_limits::defaults()) {
    return std::nullopt;  // every nonzero element is a unit
}

inline std::optional<TwoThirds> find_common_divisor(
    const std::vector<TwoThirds>& xs, const search_limits& = search_limits::defaults()) {
    for (const auto& x : xs)
        if (x.is_unit()) return std::nullopt;
    throw search_exhausted("find_common_divisor: two-thirds set without a unit member");
}

/// Common divisor of polynomial coefficients (the nested case). Checks the
/// unit shortcut, then monomial divisors via the inner rings, then full
/// divisors of the smallest element via the flat oracle when available.
template <semidomain_scalar S>
std::optional<LaurentPoly<S>> find_common_divisor(
    const std::vector<LaurentPoly<S>>& xs, const search_limits& lim = search_limits::defaults()) {
    using P = LaurentPoly<S>;
    for (const auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("find_common_divisor: zero element");
    for (const auto& x : xs)
        if (x.is_unit()) return std::nullopt;
    // monomial common divisors reduce to a common divisor of all coefficients
    std::vector<S> inner;
    for (const auto& x : xs)
        for (const auto& c : x.coefficients()) inner.push_back(c);
    if (auto d = find_common_divisor(inner, lim)) return P::monomial(0, *d);

    if constexpr (std::is_same_v<leaf_scalar_t<P>, Nat>) {
        // enumerate proper divisors of the smallest element, check the rest
        const P* smallest = &xs.front();
        for (const auto& x : xs)
            if (x.term_count() < smallest->term_count()) smallest = &x;
        std::optional<P> found;
        detail::flat_factor_scan(*smallest, lim, /*divisors_only=*/true,
                                 [&](const P& g, const P&, const std::vector<std::int64_t>&) {
                                     for (const auto& x : xs)
                                         if (!x.try_div(g)) return false;
                                     found = g;
                                     return true;
                                 });
        return found;
    } else {
        throw search_exhausted("find_common_divisor: no exhaustive divisor search here");
    }
}

template <semidomain_scalar S>
bool gcd_contains_one(const std::vector<LaurentPoly<S>>& xs,
                      const search_limits& lim = search_limits::defaults()) {
    return !find_common_divisor(xs, lim).has_value();
}

// --- certify_irreducible -------------------------------------------------------

template <class P>
struct CertifyResult {
    enum class Status { certified, not_irreducible, unknown };
    Status status;
    std::optional<Certificate> cert;          // when certified
    std::optional<std::pair<P, P>> witness;   // when not_irreducible
};

namespace detail {

inline std::optional<big_rat> rational_sqrt(const big_rat& r) {
    if (r < 0) return std::nullopt;
    const big_int num = boost::multiprecision::numerator(r);
    const big_int den = boost::multiprecision::denominator(r);
    const big_int sn = boost::multiprecision::sqrt(num);
    const big_int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return big_rat(sn, sd);
}

/// Midpoint trinomial over q+: the only possible nontrivial factorization is
/// binomial * binomial, which exists iff b^2 - 4ac is a rational square.
inline std::optional<std::pair<LaurentPoly<NonnegRational>, LaurentPoly<NonnegRational>>>
rational_trinomial_factor(const LaurentPoly<NonnegRational>& f) {
    using P = LaurentPoly<NonnegRational>;
    const auto supp = f.support();
    const big_rat a = f.coeff(supp[2]).value();
    const big_rat b = f.coeff(supp[1]).value();
    const big_rat c = f.coeff(supp[0]).value();
    const auto r = rational_sqrt(b * b - 4 * a * c);
    if (!r) return std::nullopt;
    const big_rat s = (b + *r) / (2 * a);
    const big_rat q = c / s;
    const std::int64_t m = supp[1] - supp[0];
    P g = P::monomial(m, NonnegRational(a)) + P::monomial(0, NonnegRational(q));
    P h = P::monomial(m, NonnegRational(1)) + P::monomial(0, NonnegRational(s));
    h = h.shifted(supp[0]);  // align g*h with f's exponents
    return std::make_pair(g, h);
}

}  // namespace detail

/// Tri-state irreducibility: a re-checkable certificate, a concrete
/// factorization witness, or unknown. The sufficient lemmas only ever
/// certify; the complete brute-force oracle settles small instances.
template <semidomain_scalar S>
CertifyResult<LaurentPoly<S>> certify_irreducible(
    const LaurentPoly<S>& f, const search_limits& lim = search_limits::defaults()) {
    using P = LaurentPoly<S>;
    using R = CertifyResult<P>;
    if (f.term_count() < 2)
        throw std::invalid_argument("certify_irreducible: fewer than 2 terms");

    const auto coeffs = f.coefficients();
    if (auto d = find_common_divisor(coeffs, lim)) {
        P content = P::monomial(0, *d);
        auto quot = f.try_div(content);
        if (!quot) throw std::logic_error("certify_irreducible: content does not divide");
        return R{R::Status::not_irreducible, std::nullopt,
                 std::make_pair(content, *quot)};
    }

    if (auto kind = monolithic_sufficient(f))
        return R{R::Status::certified, Certificate{*kind, true, std::nullopt}, std::nullopt};

    if constexpr (semidomain_traits<S>::atoms_are_units) {
        // trinomial with a unit middle coefficient: a factorization would
        // write that unit as a sum of two nonzero elements, impossible when
        // the additive atoms are the units
        if (f.term_count() == 3) {
            const auto supp = f.support();
            if (f.coeff(supp[1]).is_unit())
                return R{R::Status::certified,
                         Certificate{CertKind::trinomial_unit_middle, true, std::nullopt},
                         std::nullopt};
        }
    }

    if constexpr (std::is_same_v<S, NonnegRational>) {
        if (f.term_count() == 3) {
            // reaching here means the middle exponent is the exact midpoint
            if (auto w = detail::rational_trinomial_factor(f))
                return R{R::Status::not_irreducible, std::nullopt, w};
            return R{R::Status::certified,
                     Certificate{CertKind::trinomial_no_rational_root, true, std::nullopt},
                     std::nullopt};
        }
    }

    if constexpr (semidomain_traits<S>::supports_exhaustive_split) {
        try {
            if (auto w = factor_bruteforce(f, lim))
                return R{R::Status::not_irreducible, std::nullopt, w};
            SearchBounds b{lim.degree_bound, lim.mass_bound};
            return R{R::Status::certified,
                     Certificate{CertKind::brute_force_no_factor, true, b}, std::nullopt};
        } catch (const degree_bound_exceeded&) {
            return R{R::Status::unknown, std::nullopt, std::nullopt};
        }
    }
    return R{R::Status::unknown, std::nullopt, std::nullopt};
}

/// Re-checks a certificate against its polynomial from scratch.
template <semidomain_scalar S>
bool validate_certificate(const LaurentPoly<S>& f, const Certificate& cert,
                          const search_limits& lim = search_limits::defaults()) {
    if constexpr (is_laurent_poly<S>::value) {
        // an outer monomial inherits its coefficient's certificate: unit
        // monomial factors do not affect irreducibility
        if (f.term_count() == 1 && cert.kind != CertKind::monomial_unit_pair)
            return validate_certificate(f.terms().begin()->second, cert, lim);
    }
    switch (cert.kind) {
        case CertKind::binomial_monolithic:
        case CertKind::monolithic_lower_half:
        case CertKind::monolithic_upper_half: {
            if (f.term_count() < 2) return false;
            auto kind = monolithic_sufficient(f);
            if (!kind) return false;
            // any of the support lemmas certifies monolithicity; accept a
            // certificate naming a different one only if its own inequality holds
            if (*kind != cert.kind) {
                const auto supp = f.support();
                const std::size_t n = supp.size();
                const std::int64_t lo = supp.front(), hi = supp.back();
                if (cert.kind == CertKind::binomial_monolithic) return false;
                if (cert.kind == CertKind::monolithic_lower_half &&
                    !(2 * supp[n - 2] < hi + lo || (n > 3 && 2 * supp[n - 2] <= hi + lo)))
                    return false;
                if (cert.kind == CertKind::monolithic_upper_half &&
                    !(2 * supp[1] > hi + lo || (n > 3 && 2 * supp[1] >= hi + lo)))
                    return false;
            }
            return gcd_contains_one(f.coefficients(), lim);
        }
        case CertKind::trinomial_unit_middle: {
            if (!semidomain_traits<S>::atoms_are_units) return false;
            if (f.term_count() != 3) return false;
            const auto supp = f.support();
            return f.coeff(supp[1]).is_unit() && gcd_contains_one(f.coefficients(), lim);
        }
        case CertKind::monomial_unit_pair: {
            if (f.term_count() != 1) return false;
            auto m = min_unit_summands(f.coeff(f.support().front()), 2);
            return m.has_value() && *m == 2;
        }
        case CertKind::trinomial_no_rational_root: {
            if constexpr (std::is_same_v<S, NonnegRational>) {
                if (f.term_count() != 3) return false;
                const auto supp = f.support();
                if (2 * supp[1] != supp[0] + supp[2]) return false;
                return !detail::rational_trinomial_factor(f).has_value();
            } else {
                return false;
            }
        }
        case CertKind::brute_force_no_factor: {
            if constexpr (semidomain_traits<S>::supports_exhaustive_split) {
                search_limits l = lim;
                if (cert.bounds) {
                    l.degree_bound = cert.bounds->degree_bound;
                    l.mass_bound = cert.bounds->mass_bound;
                }
                return !factor_bruteforce(f, l).has_value() &&
                       gcd_contains_one(f.coefficients(), lim);
            } else {
                return false;
            }
        }
        default:
            return false;  // series kinds are validated by the series module
    }
}

// --- exhaustive decomposition enumeration --------------------------------------

/// Every way to write f as an unordered sum of `parts` multiplicative
/// irreducibles. Complete for rings with finite split enumeration: summands
/// are coefficientwise below f.
template <semidomain_scalar S>
std::set<std::vector<LaurentPoly<S>>> enumerate_goldbach_bruteforce(
    const LaurentPoly<S>& f, int parts, const search_limits& lim = search_limits::defaults(),
    oracle_cache<LaurentPoly<S>>* cache = nullptr) {
    using P = LaurentPoly<S>;
    if constexpr (!semidomain_traits<S>::supports_exhaustive_split) {
        throw unsupported_instance(
            "enumerate_goldbach_bruteforce: " + semidomain_traits<S>::name() +
            " has infinitely many splits (see the windowed family operations)");
    } else {
        if (parts != 2 && parts != 3)
            throw std::invalid_argument("enumerate_goldbach_bruteforce: parts must be 2 or 3");
        if (f.is_zero()) throw std::invalid_argument("enumerate_goldbach_bruteforce: zero input");
        if (scalar_weight(mass(f)) > big_int(lim.mass_bound))
            throw degree_bound_exceeded("enumerate_goldbach_bruteforce: mass bound");
        oracle_cache<P> local;
        if (!cache) cache = &local;
        auto irred = [&](const P& p) { return oracle_irreducible(p, lim, cache); };

        std::set<std::vector<P>> out;
        const big_int nsplits = below_count(f);
        if (nsplits * (parts == 3 ? nsplits : big_int(1)) > big_int(lim.step_budget))
            throw search_exhausted("enumerate_goldbach_bruteforce: too many splits");
        const auto splits = additive_below(f);
        for (const auto& g : splits) {
            if (g.is_zero()) continue;
            auto h = f.try_sub(g);
            if (!h || h->is_zero()) continue;
            if (parts == 2) {
                if (*h < g) continue;  // unordered
                if (irred(g) && irred(*h)) out.insert({g, *h});
            } else {
                if (!irred(g)) continue;
                for (const auto& g2 : additive_below(*h)) {
                    if (g2.is_zero() || g2 < g) continue;
                    auto g3 = h->try_sub(g2);
                    if (!g3 || g3->is_zero() || *g3 < g2) continue;
                    if (irred(g2) && irred(*g3)) out.insert({g, g2, *g3});
                }
            }
        }
        return out;
    }
}

}  // namespace semigold
