#pragma once

/**
 * @file parse.hpp
 * @brief Text syntax for elements and polynomials.
 *
 * Polynomial grammar (whitespace insensitive):
 *   poly  := term ('+' term)*
 *   term  := coeff? vars?
 *   vars  := name ('^' int)? ('*' vars)?
 * Coefficient literals are ring specific; composite literals (those that
 * contain '+') must be parenthesized inside a term: "(1+2r2)x^2".
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent_poly.hpp"

namespace semigold {

class text_cursor {
    std::string_view s_;
    std::size_t pos_ = 0;

public:
    explicit text_cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool try_eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    bool try_eat(std::string_view word) {
        skip_ws();
        if (s_.substr(pos_, word.size()) == word) { pos_ += word.size(); return true; }
        return false;
    }
    void expect(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::size_t position() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::optional<big_int> try_nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) return std::nullopt;
        big_int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::int64_t parse_signed_int() {
        skip_ws();
        bool neg = try_eat('-');
        auto v = try_nat();
        if (!v) fail("expected integer");
        if (*v > std::numeric_limits<std::int64_t>::max()) fail("exponent out of range");
        auto n = static_cast<std::int64_t>(*v);
        return neg ? -n : n;
    }

    std::optional<std::string> try_name() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) return std::nullopt;
        std::string out;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            out += s_[pos_];
            ++pos_;
        }
        return out;
    }
};

/// Per-ring element syntax. parse_coeff reads a coefficient literal inside a
/// polynomial term (nullopt when the term starts with a variable);
/// parse_element reads a standalone element (full syntax, '+' allowed).
template <class S>
struct element_io;

template <>
struct element_io<Nat> {
    static std::optional<Nat> parse_coeff(text_cursor& c) {
        auto v = c.try_nat();
        if (!v) return std::nullopt;
        return Nat(*v);
    }
    static Nat parse_element(text_cursor& c) {
        auto v = parse_coeff(c);
        if (!v) c.fail("expected nonnegative integer");
        return *v;
    }
    /// (text, needs parentheses when juxtaposed with variables)
    static std::pair<std::string, bool> format_in_term(const Nat& n) { return {n.str(), false}; }
};

template <>
struct element_io<NonnegRational> {
    static std::optional<NonnegRational> parse_coeff(text_cursor& c) {
        auto num = c.try_nat();
        if (!num) return std::nullopt;
        if (c.try_eat('/')) {
            auto den = c.try_nat();
            if (!den || *den == 0) c.fail("expected nonzero denominator");
            return NonnegRational(*num, *den);
        }
        return NonnegRational(big_rat(*num));
    }
    static NonnegRational parse_element(text_cursor& c) {
        auto v = parse_coeff(c);
        if (!v) c.fail("expected nonnegative rational");
        return *v;
    }
    static std::pair<std::string, bool> format_in_term(const NonnegRational& q) {
        return {q.str(), false};
    }
};

template <>
struct element_io<QuadraticNat> {
    // "a+br2", "br2", "r2", "a"; the '+' form needs parentheses inside terms
    static std::optional<QuadraticNat> parse_component(text_cursor& c) {
        auto v = c.try_nat();
        if (c.try_eat("r2")) return QuadraticNat(big_int(0), v ? *v : big_int(1));
        if (!v) return std::nullopt;
        return QuadraticNat(*v, big_int(0));
    }
    static std::optional<QuadraticNat> parse_coeff(text_cursor& c) {
        if (c.peek() == '(') {
            c.expect('(');
            QuadraticNat q = parse_element(c);
            c.expect(')');
            return q;
        }
        return parse_component(c);
    }
    static QuadraticNat parse_element(text_cursor& c) {
        auto first = parse_component(c);
        if (!first) c.fail("expected element of n0sqrt2");
        QuadraticNat q = *first;
        while (c.try_eat('+')) {
            auto next = parse_component(c);
            if (!next) c.fail("expected component after '+'");
            q = q + *next;
        }
        return q;
    }
    static std::pair<std::string, bool> format_in_term(const QuadraticNat& q) {
        return {q.str(), q.a() != 0 && q.b() != 0};
    }
};

template <>
struct element_io<TwoThirds> {
    // atom-combination form: term := [nat '*']? '(2/3)' ('^' int)?  |  nat
    static std::optional<TwoThirds> parse_atom_product(text_cursor& c) {
        auto mult = c.try_nat();
        if (mult) {
            // "n" alone or "n*(2/3)^k"; a '*' not followed by the atom literal
            // belongs to the polynomial grammar, so back it out
            text_cursor save = c;
            if (!c.try_eat('*') || !c.try_eat("(2/3)")) {
                c = save;
                TwoThirds::witness_map w;
                if (*mult > 0) w[0] = *mult;
                return TwoThirds::from_witness(w);
            }
            std::int64_t k = 0;
            if (c.try_eat('^')) k = c.parse_signed_int();
            TwoThirds::witness_map w;
            w[k] = *mult;
            return TwoThirds::from_witness(w);
        }
        if (!c.try_eat("(2/3)")) return std::nullopt;
        std::int64_t k = 0;
        if (c.try_eat('^')) k = c.parse_signed_int();
        TwoThirds::witness_map w;
        w[k] = mult ? *mult : big_int(1);
        return TwoThirds::from_witness(w);
    }
    static std::optional<TwoThirds> parse_coeff(text_cursor& c) {
        if (c.peek() == '(') {
            // distinguish the atom literal "(2/3)" from a parenthesized element
            if (c.try_eat("(2/3)")) {
                std::int64_t k = 0;
                if (c.try_eat('^')) k = c.parse_signed_int();
                return TwoThirds::atom(k);
            }
            c.expect('(');
            TwoThirds t = parse_element(c);
            c.expect(')');
            return t;
        }
        return parse_atom_product(c);
    }
    static TwoThirds parse_element(text_cursor& c) {
        auto first = parse_atom_product(c);
        if (!first) c.fail("expected two-thirds atom combination");
        TwoThirds t = *first;
        while (c.try_eat('+')) {
            auto next = parse_atom_product(c);
            if (!next) c.fail("expected atom term after '+'");
            t = t + *next;
        }
        return t;
    }
    static std::pair<std::string, bool> format_in_term(const TwoThirds& t) {
        bool composite = t.witness().size() > 1;
        return {t.str(), composite};
    }
};

// --- polynomial parsing ------------------------------------------------------

/// Parses the flat multivariate grammar and folds it into nested univariate
/// form: the last declared variable becomes the outermost level.
template <class P>
P parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    using Leaf = leaf_scalar_t<P>;
    if (vars.size() != static_cast<std::size_t>(var_count_v<P>))
        throw std::invalid_argument("parse_poly: variable count mismatch");
    text_cursor c(text);
    flat_terms_t<Leaf> terms;
    while (true) {
        auto coeff = element_io<Leaf>::parse_coeff(c);
        std::vector<std::int64_t> exps(vars.size(), 0);
        bool saw_var = false;
        if (coeff) c.try_eat('*');  // optional '*' between coefficient and variables
        bool need_var = false;
        while (true) {
            auto name = c.try_name();
            if (!name) {
                if (need_var) c.fail("expected variable");
                break;
            }
            auto it = std::find(vars.begin(), vars.end(), *name);
            if (it == vars.end()) c.fail("unknown variable '" + *name + "'");
            std::int64_t e = 1;
            if (c.try_eat('^')) e = c.parse_signed_int();
            exps[static_cast<std::size_t>(it - vars.begin())] += e;
            saw_var = true;
            need_var = c.try_eat('*');  // '*' between factors is optional
        }
        if (!coeff && !saw_var) c.fail("expected term");
        Leaf cv = coeff ? *coeff : Leaf::one();
        terms.emplace_back(std::move(exps), cv);
        if (!c.try_eat('+')) break;
    }
    if (!c.done()) c.fail("unexpected trailing input");
    return from_flat_terms<P>(terms);
}

template <class P>
P parse_poly(std::string_view text) {
    return parse_poly<P>(text, std::vector<std::string>{"x"});
}

// --- polynomial formatting ---------------------------------------------------

/// Canonical display: flat terms in decreasing exponent order, outermost
/// variable most significant.
template <class P>
std::string format_poly(const P& p, const std::vector<std::string>& vars) {
    using Leaf = leaf_scalar_t<P>;
    if (p.is_zero()) return "0";
    auto terms = flat_terms(p);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] > b.first[i];
        return false;
    });
    std::string out;
    for (const auto& [exps, c] : terms) {
        if (!out.empty()) out += " + ";
        std::string varpart;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!varpart.empty()) varpart += "*";
            varpart += vars[i];
            if (exps[i] != 1) varpart += "^" + std::to_string(exps[i]);
        }
        auto [ctext, parens] = element_io<Leaf>::format_in_term(c);
        if (varpart.empty()) {
            out += ctext;
        } else if (c.is_unit() && ctext == "1") {
            out += varpart;
        } else {
            out += parens ? "(" + ctext + ")" : ctext;
            out += varpart;
        }
    }
    return out;
}

template <class P>
std::string format_poly(const P& p) {
    return format_poly(p, std::vector<std::string>{"x"});
}

}  // namespace semigold
