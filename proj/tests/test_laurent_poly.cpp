#include <catch_amalgamated.hpp>

#include <random>

#include "semigold/parse.hpp"

using namespace semigold;

using PolyN = LaurentPoly<Nat>;
using PolyQ = LaurentPoly<QuadraticNat>;
using PolyR = LaurentPoly<NonnegRational>;
using Poly2 = LaurentPoly<LaurentPoly<Nat>>;  // vars (x, y), y outermost

namespace {

PolyN random_poly(std::mt19937_64& rng, int max_deg, int max_coeff, int min_exp = 0) {
    PolyN p;
    for (int e = min_exp; e <= max_deg; ++e)
        p.add_term(e, Nat(static_cast<std::int64_t>(rng() % (max_coeff + 1))));
    return p;
}

PolyQ random_qpoly(std::mt19937_64& rng, int max_deg, int max_comp) {
    PolyQ p;
    for (int e = 0; e <= max_deg; ++e)
        p.add_term(e, QuadraticNat(static_cast<std::int64_t>(rng() % (max_comp + 1)),
                                   static_cast<std::int64_t>(rng() % (max_comp + 1))));
    return p;
}

}  // namespace

TEST_CASE("parse_poly basic forms") {
    auto p = parse_poly<PolyN>("2x^2 + x + 1");
    CHECK(p.coeff(2) == Nat(2));
    CHECK(p.coeff(1) == Nat(1));
    CHECK(p.coeff(0) == Nat(1));
    CHECK(p.term_count() == 3);

    auto q = parse_poly<PolyN>("x^-1 + 3");
    CHECK(q.coeff(-1) == Nat(1));
    CHECK(q.coeff(0) == Nat(3));

    CHECK(parse_poly<PolyN>("0").is_zero());
    CHECK(parse_poly<PolyN>("  7 ") == PolyN::monomial(0, Nat(7)));

    CHECK_THROWS_AS(parse_poly<PolyN>("2x^2 -"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly<PolyN>("x + z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly<PolyN>(""), std::invalid_argument);
}

TEST_CASE("parse multivariate folds into nested form") {
    std::vector<std::string> vars{"x", "y"};
    auto p = parse_poly<Poly2>("x*y + x + y + 1", vars);
    // outer variable y: coefficient of y^1 is (x+1), of y^0 is (x+1)
    auto inner1 = p.coeff(1);
    auto inner0 = p.coeff(0);
    CHECK(inner1 == parse_poly<PolyN>("x + 1"));
    CHECK(inner0 == parse_poly<PolyN>("x + 1"));

    auto q = parse_poly<Poly2>("2x^2*y^-1 + y", vars);
    CHECK(q.coeff(-1) == parse_poly<PolyN>("2x^2"));
    CHECK(q.coeff(1) == PolyN::one());
}

TEST_CASE("parse ring-specific coefficients") {
    auto p = parse_poly<PolyQ>("r2 x^2 + 2r2 x + (1+2r2)");
    CHECK(p.coeff(2) == QuadraticNat(0, 1));
    CHECK(p.coeff(1) == QuadraticNat(0, 2));
    CHECK(p.coeff(0) == QuadraticNat(1, 2));

    auto q = parse_poly<PolyR>("1/2 x + 3/2");
    CHECK(q.coeff(1) == NonnegRational(1, 2));
    CHECK(q.coeff(0) == NonnegRational(3, 2));

    using PolyT = LaurentPoly<TwoThirds>;
    auto t = parse_poly<PolyT>("(2*(2/3)^1)x + 2");
    CHECK(t.coeff(1).value() == big_rat(4, 3));
    CHECK(t.coeff(0).value() == 2);
    auto t2 = parse_poly<PolyT>("(2/3)^-2 + 2*(2/3)^1");
    CHECK(t2.coeff(0).value() == big_rat(9, 4) + big_rat(4, 3));

    text_cursor c("2*(2/3)^1 + (2/3)^-2");
    auto e = element_io<TwoThirds>::parse_element(c);
    CHECK(e.value() == big_rat(4, 3) + big_rat(9, 4));
}

TEST_CASE("mul_poly examples") {
    auto f = parse_poly<PolyN>("x + 1");
    CHECK(f * f == parse_poly<PolyN>("x^2 + 2x + 1"));

    std::vector<std::string> vars{"x", "y"};
    auto a = parse_poly<Poly2>("x + 1", vars);
    auto b = parse_poly<Poly2>("y + 1", vars);
    CHECK(a * b == parse_poly<Poly2>("x*y + x + y + 1", vars));

    CHECK(parse_poly<PolyN>("x^-1") * f == parse_poly<PolyN>("1 + x^-1"));
}

TEST_CASE("add_poly examples") {
    CHECK(parse_poly<PolyN>("x + 2") + parse_poly<PolyN>("x + 1") == parse_poly<PolyN>("2x + 3"));
    auto f = parse_poly<PolyN>("x^3 + x");
    CHECK(f + PolyN::zero() == f);
    CHECK(parse_poly<PolyN>("x^2 + 1") + parse_poly<PolyN>("x^3 + x") ==
          parse_poly<PolyN>("x^3 + x^2 + x + 1"));
}

TEST_CASE("normalize_shift") {
    auto [p1, s1] = parse_poly<PolyN>("x^3 + x").normalize_shift();
    CHECK(p1 == parse_poly<PolyN>("x^2 + 1"));
    CHECK(s1 == 1);

    auto [p2, s2] = parse_poly<PolyN>("2x^-2 + 3").normalize_shift();
    CHECK(p2 == parse_poly<PolyN>("2 + 3x^2"));
    CHECK(s2 == -2);

    auto [p3, s3] = parse_poly<PolyN>("5").normalize_shift();
    CHECK(p3 == parse_poly<PolyN>("5"));
    CHECK(s3 == 0);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, 6, 3, -3);
        if (f.is_zero()) continue;
        auto [g, k] = f.normalize_shift();
        CHECK(g.min_exp() == 0);
        CHECK(g.shifted(k) == f);
    }
}

TEST_CASE("mass") {
    CHECK(mass(parse_poly<PolyN>("x^3 + x^2 + x + 1")) == Nat(4));
    std::vector<std::string> vars{"x", "y"};
    CHECK(mass(parse_poly<Poly2>("x*y + x + y + 1", vars)) == Nat(4));
    CHECK(mass(parse_poly<PolyN>("2x + 3")) == Nat(5));

    // mass is an evaluation homomorphism
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, 4, 3), g = random_poly(rng, 4, 3);
        CHECK(mass(f + g) == mass(f) + mass(g));
        CHECK(mass(f * g) == mass(f) * mass(g));
    }
}

TEST_CASE("support") {
    CHECK(parse_poly<PolyN>("x^3 + x").support() == std::vector<std::int64_t>{1, 3});
    CHECK(PolyN::zero().support().empty());
    CHECK(parse_poly<PolyN>("x^-1 + 1 + x").support() == std::vector<std::int64_t>{-1, 0, 1});
}

TEST_CASE("polynomial ring laws on random triples") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 120; ++i) {
        auto a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3), c = random_poly(rng, 4, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int i = 0; i < 60; ++i) {
        auto a = random_qpoly(rng, 3, 2), b = random_qpoly(rng, 3, 2), c = random_qpoly(rng, 3, 2);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("parser/formatter round-trip on random polynomials") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        auto f = random_poly(rng, 5, 4, -3);
        CHECK(parse_poly<PolyN>(format_poly(f)) == f);
    }
    for (int i = 0; i < 80; ++i) {
        auto f = random_qpoly(rng, 4, 3);
        CHECK(parse_poly<PolyQ>(format_poly(f)) == f);
    }
    std::vector<std::string> vars{"x", "y"};
    for (int i = 0; i < 60; ++i) {
        Poly2 f;
        for (int ey = -1; ey <= 1; ++ey) {
            PolyN c = random_poly(rng, 2, 2, -1);
            f.add_term(ey, c);
        }
        CHECK(parse_poly<Poly2>(format_poly(f, vars), vars) == f);
    }
}

TEST_CASE("flat view round-trips and respects declared order") {
    std::vector<std::string> vars{"x", "y"};
    auto f = parse_poly<Poly2>("2x^2*y^-1 + x*y + 3", vars);
    auto flat = flat_terms(f);
    CHECK(flat.size() == 3);
    CHECK(from_flat_terms<Poly2>(flat) == f);
    for (const auto& [exps, c] : flat) CHECK(exps.size() == 2);
    CHECK(flat_support_size(f) == 3);
    CHECK(var_count_v<Poly2> == 2);
}

TEST_CASE("poly unit structure: units are unit-coefficient monomials") {
    CHECK(parse_poly<PolyN>("x^5").is_unit());
    CHECK(parse_poly<PolyN>("x^-3").is_unit());
    CHECK_FALSE(parse_poly<PolyN>("2x").is_unit());
    CHECK_FALSE(parse_poly<PolyN>("x + 1").is_unit());

    // nested: x + 1 as outer-constant over vars (x, y)
    std::vector<std::string> vars{"x", "y"};
    CHECK(parse_poly<Poly2>("x*y^-2", vars).is_unit());
    CHECK_FALSE(parse_poly<Poly2>("2y", vars).is_unit());
}

TEST_CASE("nested unit_split and min_unit_summands") {
    auto f = parse_poly<PolyN>("x + 1");
    auto s = unit_split(f);
    CHECK(s.unit == PolyN::one());
    CHECK(s.rest == parse_poly<PolyN>("x"));
    CHECK(s.unit + s.rest == f);

    CHECK(min_unit_summands(f, 2) == 2);
    CHECK(min_unit_summands(parse_poly<PolyN>("x^2"), 2) == 1);
    CHECK(min_unit_summands(parse_poly<PolyN>("2x + 1"), 3) == 3);
    CHECK_FALSE(min_unit_summands(parse_poly<PolyN>("2x + 2"), 3).has_value());
}

TEST_CASE("poly try_div and try_sub") {
    auto f = parse_poly<PolyN>("x^2 + 2x + 1");
    auto g = parse_poly<PolyN>("x + 1");
    CHECK(f.try_div(g) == g);
    CHECK_FALSE(parse_poly<PolyN>("x^2 + x + 1").try_div(g).has_value());
    CHECK(parse_poly<PolyN>("2x + 2").try_div(parse_poly<PolyN>("2")) == g);

    // Laurent: division aligns shifts
    CHECK(parse_poly<PolyN>("1 + x^-1").try_div(parse_poly<PolyN>("x + 1")) ==
          parse_poly<PolyN>("x^-1"));

    CHECK(f.try_sub(g) == parse_poly<PolyN>("x^2 + x"));
    CHECK_FALSE(g.try_sub(f).has_value());
    CHECK(f.try_sub(f)->is_zero());
}

TEST_CASE("additive_below enumerates coefficientwise splits") {
    auto f = parse_poly<PolyN>("2x + 1");
    auto below = additive_below(f);
    CHECK(below.size() == 6);  // (0..2) x (0..1)
    for (const auto& g : below) {
        auto h = f.try_sub(g);
        REQUIRE(h.has_value());
        CHECK(g + *h == f);
    }
}

TEST_CASE("exponent overflow is caught") {
    auto big = PolyN::monomial(std::numeric_limits<std::int64_t>::max() - 1, Nat(1));
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
