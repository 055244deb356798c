#pragma once

/**
 * @file sweep.hpp
 * @brief Exhaustive verification sweep: engine verdicts against the
 *        brute-force oracles over every small polynomial.
 *
 * The sweep walks all f over Nat with minimum exponent 0, degree and
 * coefficients bounded, and at least two terms, and checks
 *   - the verdict matches the syntactic exceptional forms,
 *   - two-sum summands add back exactly, are irreducible per the complete
 *     factor oracle, and carry re-validating certificates,
 *   - a two-sum verdict appears exactly when the exhaustive split
 *     enumeration finds a two-irreducible decomposition,
 *   - every f with mass above three gets a two-sum verdict.
 *
 * Work is split across threads by input index; reports are merged in index
 * order, so the output is byte-identical for any worker count.
 */

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "goldbach.hpp"
#include "parse.hpp"

namespace semigold {

struct SweepConfig {
    int max_deg = 5;
    int max_coeff = 3;
    int jobs = 1;
    bool cross_check_enumeration = true;
    search_limits lim = search_limits::defaults();
};

struct SweepReport {
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> histogram;  // verdict kind -> count
    std::vector<std::string> mismatches;
    double wall_ms = 0.0;
};

namespace detail {

/// The i-th coefficient vector: constant term 1..C, higher terms 0..C.
inline std::vector<std::int64_t> sweep_vector(std::uint64_t index, int max_deg, int max_coeff) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(max_deg) + 1);
    const std::uint64_t base = static_cast<std::uint64_t>(max_coeff) + 1;
    c[0] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(max_coeff)) + 1;
    index /= static_cast<std::uint64_t>(max_coeff);
    for (std::size_t i = 1; i < c.size(); ++i) {
        c[i] = static_cast<std::int64_t>(index % base);
        index /= base;
    }
    return c;
}

inline std::uint64_t sweep_space(int max_deg, int max_coeff) {
    std::uint64_t n = static_cast<std::uint64_t>(max_coeff);
    for (int i = 0; i < max_deg; ++i) n *= static_cast<std::uint64_t>(max_coeff) + 1;
    return n;
}

struct SweepSlice {
    std::map<std::string, std::uint64_t> histogram;
    std::vector<std::pair<std::uint64_t, std::string>> mismatches;  // (index, message)
    std::uint64_t checked = 0;
};

inline void sweep_one(const LaurentPoly<Nat>& f, std::uint64_t index, const SweepConfig& cfg,
                      oracle_cache<LaurentPoly<Nat>>& cache, SweepSlice& out) {
    using P = LaurentPoly<Nat>;
    auto complain = [&](const std::string& msg) {
        out.mismatches.emplace_back(index, format_poly(f) + ": " + msg);
    };
    const auto supp = f.support();
    const auto coeffs = f.coefficients();

    bool form_a = false, form_b = false;
    if (supp.size() == 2)
        form_a = coeffs[0].is_unit() || coeffs[1].is_unit();
    if (supp.size() == 3)
        form_b = coeffs[0].is_unit() && coeffs[1].is_unit() && coeffs[2].is_unit();

    GoldbachVerdict<P> v = goldbach(f, cfg.lim);
    out.histogram[verdict_kind_name(v.kind)] += 1;
    ++out.checked;

    if (form_a && v.kind != VerdictKind::exceptional_form_a)
        return complain("expected exceptional form (a)");
    if (form_b && v.kind != VerdictKind::exceptional_form_b)
        return complain("expected exceptional form (b)");
    if (!form_a && !form_b && v.kind != VerdictKind::sum_of_two)
        return complain("expected a two-sum verdict");

    if (v.kind == VerdictKind::sum_of_two) {
        if (v.summands.size() != 2) return complain("two-sum without two summands");
        const P& g1 = v.summands[0].first;
        const P& g2 = v.summands[1].first;
        if (!(g1 + g2 == f)) return complain("summands do not add up");
        for (const auto& [g, cert] : v.summands) {
            if (!oracle_irreducible(g, cfg.lim, &cache))
                return complain("summand fails the factor oracle: " + format_poly(g));
            if (!gcd_contains_one(g.coefficients(), cfg.lim))
                return complain("summand coefficients share a divisor: " + format_poly(g));
            if (!validate_certificate(g, cert, cfg.lim))
                return complain("certificate does not re-validate: " + format_poly(g));
        }
    }

    if (mass(f).value() > 3 && v.kind != VerdictKind::sum_of_two)
        return complain("mass above three without a two-sum");

    if (cfg.cross_check_enumeration) {
        const bool any = !enumerate_goldbach_bruteforce(f, 2, cfg.lim, &cache).empty();
        if (any != (v.kind == VerdictKind::sum_of_two))
            return complain("enumeration oracle disagrees with the verdict");
    }
}

}  // namespace detail

/// Runs the verdict-vs-oracle sweep. Deterministic for fixed bounds
/// regardless of the worker count.
inline SweepReport run_goldbach_sweep(const SweepConfig& cfg) {
    using P = LaurentPoly<Nat>;
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t space = detail::sweep_space(cfg.max_deg, cfg.max_coeff);
    const int jobs = std::max(1, cfg.jobs);

    std::vector<detail::SweepSlice> slices(static_cast<std::size_t>(jobs));
    auto worker = [&](int w) {
        oracle_cache<P> cache;
        detail::SweepSlice& slice = slices[static_cast<std::size_t>(w)];
        for (std::uint64_t i = static_cast<std::uint64_t>(w); i < space;
             i += static_cast<std::uint64_t>(jobs)) {
            const auto vec = detail::sweep_vector(i, cfg.max_deg, cfg.max_coeff);
            P f;
            for (std::size_t e = 0; e < vec.size(); ++e)
                f.add_term(static_cast<std::int64_t>(e), Nat(vec[e]));
            if (f.term_count() < 2) continue;
            detail::sweep_one(f, i, cfg, cache, slice);
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    SweepReport report;
    std::vector<std::pair<std::uint64_t, std::string>> mism;
    for (const auto& s : slices) {
        report.total += s.checked;
        for (const auto& [k, n] : s.histogram) report.histogram[k] += n;
        mism.insert(mism.end(), s.mismatches.begin(), s.mismatches.end());
    }
    std::sort(mism.begin(), mism.end());
    for (auto& [i, m] : mism) report.mismatches.push_back(std::move(m));
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

}  // namespace semigold
