#pragma once

/**
 * @file series.hpp
 * @brief Structured Laurent series: a finite explicit head plus a finitely
 *        described infinite tail (constant-gap or affine-gap exponent rule
 *        with a periodic coefficient cycle).
 *
 * Restricting tails to these two rules makes the minimum gap, the set of
 * indices achieving it, and both monolithicity hypotheses decidable
 * symbolically, with no sampling.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "irreducibility.hpp"
#include "parse.hpp"

namespace semigold {

template <semidomain_scalar S>
struct ConstantGapTail {
    std::int64_t start = 0;
    std::int64_t gap = 1;
    std::vector<S> cycle;
    bool operator==(const ConstantGapTail&) const = default;
};

template <semidomain_scalar S>
struct AffineGapTail {
    std::int64_t start = 0;
    std::int64_t first_gap = 1;
    std::int64_t increment = 1;  // i-th gap = first_gap + increment * i
    std::vector<S> cycle;
    bool operator==(const AffineGapTail&) const = default;
};

template <semidomain_scalar S>
using TailSpec = std::variant<std::monostate, ConstantGapTail<S>, AffineGapTail<S>>;

namespace detail {
template <class S>
std::vector<S> rotate_cycle(const std::vector<S>& c, std::size_t offset) {
    std::vector<S> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c[(offset + i) % c.size()]);
    return out;
}

/// Coefficients of the picks offset, offset+2, offset+4, ... as a cycle.
template <class S>
std::vector<S> stride_two_cycle(const std::vector<S>& c, std::size_t offset) {
    const std::size_t period = (c.size() % 2 == 0) ? c.size() / 2 : c.size();
    std::vector<S> out;
    out.reserve(period);
    for (std::size_t i = 0; i < period; ++i) out.push_back(c[(offset + 2 * i) % c.size()]);
    return out;
}
}  // namespace detail

template <semidomain_scalar S>
class StructuredSeries {
public:
    using term = std::pair<std::int64_t, S>;

private:
    std::vector<term> head_;
    TailSpec<S> tail_;

    void validate() const {
        for (std::size_t i = 0; i < head_.size(); ++i) {
            if (head_[i].second.is_zero())
                throw std::invalid_argument("StructuredSeries: zero head coefficient");
            if (i + 1 < head_.size() && head_[i].first >= head_[i + 1].first)
                throw std::invalid_argument("StructuredSeries: head exponents not increasing");
        }
        if (const auto* c = std::get_if<ConstantGapTail<S>>(&tail_)) {
            if (c->gap < 1) throw std::invalid_argument("StructuredSeries: gap must be positive");
            if (c->cycle.empty()) throw std::invalid_argument("StructuredSeries: empty cycle");
            for (const auto& v : c->cycle)
                if (v.is_zero()) throw std::invalid_argument("StructuredSeries: zero cycle entry");
            if (!head_.empty() && head_.back().first >= c->start)
                throw std::invalid_argument("StructuredSeries: head reaches into the tail");
        } else if (const auto* a = std::get_if<AffineGapTail<S>>(&tail_)) {
            if (a->first_gap < 1 || a->increment < 1)
                throw std::invalid_argument("StructuredSeries: affine gaps must increase");
            if (a->cycle.empty()) throw std::invalid_argument("StructuredSeries: empty cycle");
            for (const auto& v : a->cycle)
                if (v.is_zero()) throw std::invalid_argument("StructuredSeries: zero cycle entry");
            if (!head_.empty() && head_.back().first >= a->start)
                throw std::invalid_argument("StructuredSeries: head reaches into the tail");
        }
    }

public:
    StructuredSeries() = default;
    StructuredSeries(std::vector<term> head, TailSpec<S> tail)
        : head_(std::move(head)), tail_(std::move(tail)) {
        validate();
    }

    static StructuredSeries from_poly(const LaurentPoly<S>& p) {
        std::vector<term> head(p.terms().begin(), p.terms().end());
        return StructuredSeries(std::move(head), std::monostate{});
    }

    const std::vector<term>& head() const { return head_; }
    const TailSpec<S>& tail() const { return tail_; }
    bool is_polynomial() const { return std::holds_alternative<std::monostate>(tail_); }
    std::size_t head_size() const { return head_.size(); }

    bool operator==(const StructuredSeries& o) const {
        return head_ == o.head_ && tail_ == o.tail_;
    }

    /// Exponent of the i-th term (0-based over head then tail).
    std::int64_t exponent(std::size_t i) const {
        if (i < head_.size()) return head_[i].first;
        const std::size_t j = i - head_.size();
        if (const auto* c = std::get_if<ConstantGapTail<S>>(&tail_))
            return c->start + static_cast<std::int64_t>(j) * c->gap;
        if (const auto* a = std::get_if<AffineGapTail<S>>(&tail_)) {
            const auto jj = static_cast<std::int64_t>(j);
            return a->start + jj * a->first_gap + a->increment * (jj * (jj - 1) / 2);
        }
        throw std::out_of_range("StructuredSeries: index beyond a polynomial");
    }

    const S& coefficient(std::size_t i) const {
        if (i < head_.size()) return head_[i].second;
        const std::size_t j = i - head_.size();
        if (const auto* c = std::get_if<ConstantGapTail<S>>(&tail_))
            return c->cycle[j % c->cycle.size()];
        if (const auto* a = std::get_if<AffineGapTail<S>>(&tail_))
            return a->cycle[j % a->cycle.size()];
        throw std::out_of_range("StructuredSeries: index beyond a polynomial");
    }

    std::size_t term_count_if_polynomial() const {
        if (!is_polynomial())
            throw std::logic_error("StructuredSeries: infinite series has no term count");
        return head_.size();
    }

    /// Gap between terms i and i+1.
    std::int64_t gap(std::size_t i) const { return exponent(i + 1) - exponent(i); }

    LaurentPoly<S> to_poly() const {
        if (!is_polynomial())
            throw std::logic_error("StructuredSeries: not a polynomial");
        LaurentPoly<S> p;
        for (const auto& [e, c] : head_) p.add_term(e, c);
        return p;
    }

    /// All terms with exponent at most `order`, as a polynomial. Exact.
    LaurentPoly<S> truncate(std::int64_t order) const {
        LaurentPoly<S> out;
        for (const auto& [e, c] : head_) {
            if (e > order) return out;
            out.add_term(e, c);
        }
        if (is_polynomial()) return out;
        for (std::size_t i = head_.size();; ++i) {
            const std::int64_t e = exponent(i);
            if (e > order) break;
            out.add_term(e, coefficient(i));
        }
        return out;
    }

    /// Head coefficients plus one full cycle: every coefficient value that
    /// occurs in the series.
    std::vector<S> coefficient_values() const {
        std::vector<S> out;
        for (const auto& [e, c] : head_) out.push_back(c);
        if (const auto* c = std::get_if<ConstantGapTail<S>>(&tail_))
            out.insert(out.end(), c->cycle.begin(), c->cycle.end());
        if (const auto* a = std::get_if<AffineGapTail<S>>(&tail_))
            out.insert(out.end(), a->cycle.begin(), a->cycle.end());
        return out;
    }
};

// --- gap profile ---------------------------------------------------------------

struct GapProfile {
    std::int64_t delta = 0;                  // minimum gap over the whole series
    bool j_finite = true;                    // finitely many gaps achieve delta?
    std::size_t alpha = 0;                   // first index achieving delta
    std::optional<std::size_t> beta;         // last index achieving delta (finite case)
    std::optional<std::size_t> regular_from; // N: gaps strictly increase after N+1
};

/// Exact gap analysis from the tail rule; nothing is sampled.
template <semidomain_scalar S>
GapProfile gap_profile(const StructuredSeries<S>& f) {
    const std::size_t H = f.head_size();
    GapProfile out;
    if (f.is_polynomial()) {
        // finite-profile variant for polynomials
        if (H < 2) throw std::invalid_argument("gap_profile: fewer than two terms");
        out.delta = f.gap(0);
        for (std::size_t i = 1; i + 1 < H; ++i) out.delta = std::min(out.delta, f.gap(i));
        bool first = true;
        for (std::size_t i = 0; i + 1 < H; ++i)
            if (f.gap(i) == out.delta) {
                if (first) out.alpha = i, first = false;
                out.beta = i;
            }
        out.j_finite = true;
        return out;
    }

    std::int64_t tail_min = 0;
    bool tail_constant = false;
    if (const auto* c = std::get_if<ConstantGapTail<S>>(&f.tail())) {
        tail_min = c->gap;
        tail_constant = true;
    } else if (const auto* a = std::get_if<AffineGapTail<S>>(&f.tail())) {
        tail_min = a->first_gap;
    }

    // explicit gaps: head internals, the junction, and the first tail gap
    std::int64_t irregular_min = tail_min;
    for (std::size_t i = 0; i < H; ++i) irregular_min = std::min(irregular_min, f.gap(i));
    out.delta = irregular_min;

    const bool tail_hits = tail_constant && tail_min == out.delta;
    out.j_finite = !tail_hits;

    // first index achieving delta
    for (std::size_t i = 0;; ++i) {
        if (f.gap(i) == out.delta) { out.alpha = i; break; }
        if (i > H + 2) throw std::logic_error("gap_profile: minimum not found");
    }
    if (out.j_finite) {
        // last achiever sits in the head/junction region or is the first tail
        // gap of an affine tail
        std::size_t last = out.alpha;
        for (std::size_t i = 0; i <= H; ++i)
            if (f.gap(i) == out.delta) last = i;
        out.beta = last;
    }

    // smallest N with (gaps after index N+1) strictly increasing
    if (!tail_constant) {
        std::size_t m = H;  // gaps from index H on are the affine tail gaps
        while (m > 0 && f.gap(m - 1) < f.gap(m)) --m;
        out.regular_from = (m == 0) ? 0 : m - 1;
    }
    return out;
}

// --- certification --------------------------------------------------------------

template <semidomain_scalar S>
struct SeriesCertifyResult {
    enum class Status { certified, not_irreducible, unknown };
    Status status;
    std::optional<Certificate> cert;
    // witness: a non-unit content dividing every coefficient, with quotient
    std::optional<std::pair<S, StructuredSeries<S>>> witness;
};

namespace detail {

/// first gap strictly below every later gap (symbolic check).
template <semidomain_scalar S>
bool hyper_monolithic_holds(const StructuredSeries<S>& f) {
    if (f.is_polynomial()) return false;
    const std::size_t H = f.head_size();
    const std::int64_t first = f.gap(0);
    std::int64_t rest_min = std::numeric_limits<std::int64_t>::max();
    // explicit gaps 1 .. H+1 cover head internals, the junction, and the
    // first two tail gaps; beyond that the tail rule decides
    for (std::size_t i = 1; i <= H + 1; ++i) rest_min = std::min(rest_min, f.gap(i));
    if (const auto* c = std::get_if<ConstantGapTail<S>>(&f.tail()))
        rest_min = std::min(rest_min, c->gap);
    // affine tails only increase after the explicitly checked prefix
    return first < rest_min;
}

template <semidomain_scalar S>
bool eventually_increasing_holds(const StructuredSeries<S>& f) {
    return !f.is_polynomial() && std::holds_alternative<AffineGapTail<S>>(f.tail());
}

}  // namespace detail

/// Certificate kinds: hyper_monolithic (first gap strictly minimal) or
/// eventually_increasing_gaps (affine tail), each together with the gcd test
/// over head coefficients plus one full cycle.
template <semidomain_scalar S>
SeriesCertifyResult<S> certify_irreducible_series(
    const StructuredSeries<S>& f, const search_limits& lim = search_limits::defaults()) {
    using R = SeriesCertifyResult<S>;
    if (f.is_polynomial())
        throw std::invalid_argument("certify_irreducible_series: polynomial input");

    const auto values = f.coefficient_values();
    if (auto d = find_common_divisor(values, lim)) {
        // divide everything by the content to witness reducibility
        std::vector<typename StructuredSeries<S>::term> head;
        for (const auto& [e, c] : f.head()) head.emplace_back(e, *c.try_div(*d));
        TailSpec<S> tail = f.tail();
        if (auto* c = std::get_if<ConstantGapTail<S>>(&tail))
            for (auto& v : c->cycle) v = *v.try_div(*d);
        if (auto* a = std::get_if<AffineGapTail<S>>(&tail))
            for (auto& v : a->cycle) v = *v.try_div(*d);
        return R{R::Status::not_irreducible, std::nullopt,
                 std::make_pair(*d, StructuredSeries<S>(std::move(head), std::move(tail)))};
    }

    if (detail::hyper_monolithic_holds(f))
        return R{R::Status::certified, Certificate{CertKind::hyper_monolithic, true, {}},
                 std::nullopt};
    if (detail::eventually_increasing_holds(f))
        return R{R::Status::certified,
                 Certificate{CertKind::eventually_increasing_gaps, true, {}}, std::nullopt};
    return R{R::Status::unknown, std::nullopt, std::nullopt};
}

/// Re-checks a series certificate from scratch.
template <semidomain_scalar S>
bool validate_series_certificate(const StructuredSeries<S>& f, const Certificate& cert,
                                 const search_limits& lim = search_limits::defaults()) {
    if (f.is_polynomial()) return validate_certificate(f.to_poly(), cert, lim);
    switch (cert.kind) {
        case CertKind::hyper_monolithic:
            return detail::hyper_monolithic_holds(f) &&
                   gcd_contains_one(f.coefficient_values(), lim);
        case CertKind::eventually_increasing_gaps:
            return detail::eventually_increasing_holds(f) &&
                   gcd_contains_one(f.coefficient_values(), lim);
        default:
            return false;
    }
}

// --- text format -----------------------------------------------------------------

/// "head: 2 + 2x; tail: affine(start=3, g0=2, a=1, coeffs=[2])"
/// "tail: const(start=0, d=1, coeffs=[1])", "head: x + 1; tail: none"
template <semidomain_scalar S>
StructuredSeries<S> parse_series(std::string_view text) {
    std::string head_part, tail_part;
    const auto semi = text.find(';');
    auto strip = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return std::string(v);
    };
    std::string first = strip(semi == std::string_view::npos ? text : text.substr(0, semi));
    std::string second = semi == std::string_view::npos ? "" : strip(text.substr(semi + 1));
    if (first.rfind("head:", 0) == 0) {
        head_part = strip(std::string_view(first).substr(5));
        tail_part = second;
    } else {
        tail_part = first;
        if (!second.empty()) throw std::invalid_argument("parse_series: unexpected second part");
    }
    if (tail_part.rfind("tail:", 0) != 0)
        throw std::invalid_argument("parse_series: missing tail specification");
    std::string tail_body = strip(std::string_view(tail_part).substr(5));

    std::vector<typename StructuredSeries<S>::term> head;
    if (!head_part.empty()) {
        auto p = parse_poly<LaurentPoly<S>>(head_part);
        head.assign(p.terms().begin(), p.terms().end());
    }

    // fields: name=int or name=[...] (elements never contain brackets)
    auto parse_fields = [&](const std::string& body) {
        std::vector<std::pair<std::string, std::string>> fields;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        };
        while (true) {
            skip_ws();
            std::size_t eq = body.find('=', pos);
            if (eq == std::string::npos)
                throw std::invalid_argument("parse_series: expected field assignment");
            std::string name = strip(std::string_view(body).substr(pos, eq - pos));
            pos = eq + 1;
            skip_ws();
            std::string value;
            if (pos < body.size() && body[pos] == '[') {
                std::size_t close = body.find(']', pos);
                if (close == std::string::npos)
                    throw std::invalid_argument("parse_series: unterminated list");
                value = body.substr(pos, close - pos + 1);
                pos = close + 1;
            } else {
                std::size_t comma = body.find(',', pos);
                value = strip(std::string_view(body).substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos));
                pos = comma == std::string::npos ? body.size() : comma;
            }
            fields.emplace_back(std::move(name), std::move(value));
            skip_ws();
            if (pos < body.size() && body[pos] == ',') { ++pos; continue; }
            break;
        }
        return fields;
    };
    auto get_int = [&](const std::vector<std::pair<std::string, std::string>>& fs,
                       const std::string& key) {
        for (const auto& [k, v] : fs)
            if (k == key) return static_cast<std::int64_t>(std::stoll(v));
        throw std::invalid_argument("parse_series: missing field " + key);
    };
    auto get_coeffs = [&](const std::vector<std::pair<std::string, std::string>>& fs) {
        for (const auto& [k, v] : fs)
            if (k == "coeffs") {
                std::vector<S> out;
                std::string body = v.substr(1, v.size() - 2);  // strip [ ]
                std::size_t pos = 0;
                while (pos <= body.size()) {
                    std::size_t comma = body.find(',', pos);
                    std::string one =
                        body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
                    text_cursor ec(one);
                    out.push_back(element_io<S>::parse_element(ec));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
                return out;
            }
        throw std::invalid_argument("parse_series: missing coeffs");
    };

    if (tail_body == "none") return StructuredSeries<S>(std::move(head), std::monostate{});
    auto call_body = [&](const std::string& prefix) -> std::optional<std::string> {
        if (tail_body.rfind(prefix + "(", 0) != 0 || tail_body.back() != ')')
            return std::nullopt;
        return tail_body.substr(prefix.size() + 1,
                                tail_body.size() - prefix.size() - 2);
    };
    if (auto body = call_body("const")) {
        auto fs = parse_fields(*body);
        ConstantGapTail<S> t{get_int(fs, "start"), get_int(fs, "d"), get_coeffs(fs)};
        return StructuredSeries<S>(std::move(head), std::move(t));
    }
    if (auto body = call_body("affine")) {
        auto fs = parse_fields(*body);
        AffineGapTail<S> t{get_int(fs, "start"), get_int(fs, "g0"), get_int(fs, "a"),
                           get_coeffs(fs)};
        return StructuredSeries<S>(std::move(head), std::move(t));
    }
    throw std::invalid_argument("parse_series: unknown tail kind");
}

template <semidomain_scalar S>
std::string format_series(const StructuredSeries<S>& f) {
    std::string out;
    if (!f.head().empty()) {
        LaurentPoly<S> p;
        for (const auto& [e, c] : f.head()) p.add_term(e, c);
        out += "head: " + format_poly(p) + "; ";
    }
    out += "tail: ";
    if (f.is_polynomial()) {
        out += "none";
    } else if (const auto* c = std::get_if<ConstantGapTail<S>>(&f.tail())) {
        out += "const(start=" + std::to_string(c->start) + ", d=" + std::to_string(c->gap) +
               ", coeffs=[";
        for (std::size_t i = 0; i < c->cycle.size(); ++i)
            out += (i ? "," : "") + to_text(c->cycle[i]);
        out += "])";
    } else if (const auto* a = std::get_if<AffineGapTail<S>>(&f.tail())) {
        out += "affine(start=" + std::to_string(a->start) + ", g0=" + std::to_string(a->first_gap) +
               ", a=" + std::to_string(a->increment) + ", coeffs=[";
        for (std::size_t i = 0; i < a->cycle.size(); ++i)
            out += (i ? "," : "") + to_text(a->cycle[i]);
        out += "])";
    }
    return out;
}

}  // namespace semigold
