#include <catch_amalgamated.hpp>

#include "semigold/goldbach.hpp"
#include "semigold/parse.hpp"
#include "semigold/sweep.hpp"

using namespace semigold;

using PolyN = LaurentPoly<Nat>;
using PolyR = LaurentPoly<NonnegRational>;
using PolyT = LaurentPoly<TwoThirds>;
using Poly2 = LaurentPoly<LaurentPoly<Nat>>;

namespace {
PolyN np(const std::string& s) { return parse_poly<PolyN>(s); }
const std::vector<std::string> XY{"x", "y"};

template <class P>
void check_two_sum(const GoldbachVerdict<P>& v, const P& f) {
    REQUIRE(v.kind == VerdictKind::sum_of_two);
    REQUIRE(v.summands.size() == 2);
    CHECK(v.summands[0].first + v.summands[1].first == f);
    for (const auto& [g, cert] : v.summands) CHECK(validate_certificate(g, cert));
}
}  // namespace

TEST_CASE("univariate verdicts on the worked examples") {
    CHECK(goldbach(np("x + 1")).kind == VerdictKind::exceptional_form_a);
    CHECK(goldbach(np("2x + 1")).kind == VerdictKind::exceptional_form_a);
    CHECK(goldbach(np("x^2 + x + 1")).kind == VerdictKind::exceptional_form_b);
    CHECK(goldbach(np("x^5")).kind == VerdictKind::out_of_scope_monomial);
    CHECK(goldbach(np("3x^2")).kind == VerdictKind::out_of_scope_monomial);
    CHECK_THROWS_AS(goldbach(np("0")), std::invalid_argument);

    auto v = goldbach(np("2x + 3"));
    check_two_sum(v, np("2x + 3"));
    CHECK(v.summands[0].first == np("x + 1"));
    CHECK(v.summands[1].first == np("x + 2"));

    auto v4 = goldbach(np("x^3 + x^2 + x + 1"));
    check_two_sum(v4, np("x^3 + x^2 + x + 1"));
    CHECK(v4.summands[0].first == np("x^2 + 1"));
    CHECK(v4.summands[1].first == np("x^3 + x"));

    auto v5 = goldbach(np("x^4 + x^3 + x^2 + x + 1"));
    check_two_sum(v5, np("x^4 + x^3 + x^2 + x + 1"));
    CHECK(v5.summands[0].first == np("x^3 + x^2 + 1"));
    CHECK(v5.summands[1].first == np("x^4 + x"));
}

TEST_CASE("trinomial branches") {
    auto v1 = goldbach(np("2x^2 + x + 3"));
    check_two_sum(v1, np("2x^2 + x + 3"));
    auto v2 = goldbach(np("x^2 + x + 3"));
    check_two_sum(v2, np("x^2 + x + 3"));
    auto v3 = goldbach(np("x^2 + 2x + 3"));
    check_two_sum(v3, np("x^2 + 2x + 3"));
    auto v4 = goldbach(np("3x^2 + 2x + 2"));
    check_two_sum(v4, np("3x^2 + 2x + 2"));
    auto v5 = goldbach(np("2x^2 + 3x^-1 + 2x^-3"));
    check_two_sum(v5, np("2x^2 + 3x^-1 + 2x^-3"));
}

TEST_CASE("many-term splits exercise the midpoint and unit-part branches") {
    auto v1 = goldbach(np("x^4 + x^2 + x + 2"));
    check_two_sum(v1, np("x^4 + x^2 + x + 2"));
    auto v2 = goldbach(np("2x^4 + x^3 + x^2 + 1"));
    check_two_sum(v2, np("2x^4 + x^3 + x^2 + 1"));
    auto v3 = goldbach(np("x^4 + x^3 + x^2 + x + 1"));
    check_two_sum(v3, np("x^4 + x^3 + x^2 + x + 1"));
    auto v4 = goldbach(np("2x^4 + 3x^3 + x^2 + 3x + 2"));
    check_two_sum(v4, np("2x^4 + 3x^3 + x^2 + 3x + 2"));
    auto v5 = goldbach(np("2x^3 + x + x^-1 + 2x^-2"));
    check_two_sum(v5, np("2x^3 + x + x^-1 + 2x^-2"));
}

TEST_CASE("two-thirds coefficients") {
    auto target = two_thirds_family_target();  // (4/3)x + 2
    auto v = goldbach(target);
    check_two_sum(v, target);
    PolyT expected = PolyT::monomial(1, TwoThirds::atom(1)) + PolyT::monomial(0, TwoThirds(1));
    CHECK(v.summands[0].first == expected);
    CHECK(v.summands[1].first == expected);

    PolyT f = PolyT::monomial(2, TwoThirds::from_witness({{1, 2}})) +
              PolyT::monomial(1, TwoThirds(2)) + PolyT::monomial(0, TwoThirds(1));
    auto vt = goldbach(f);
    check_two_sum(vt, f);
}

TEST_CASE("q+ is refused by the strict engine and served by the scaling route") {
    auto f = parse_poly<PolyR>("1/2 x + 3/2");
    CHECK(goldbach(f).kind == VerdictKind::not_applicable_instance);

    auto v = goldbach_rational(f);
    CHECK(v.kind == VerdictKind::irreducible_itself);
    REQUIRE(v.self_certificate.has_value());
    CHECK(validate_certificate(f, *v.self_certificate));

    auto g = parse_poly<PolyR>("4/3 x + 2");
    CHECK(goldbach_rational(g).kind == VerdictKind::irreducible_itself);

    auto h = parse_poly<PolyR>("1/3 x^4 + x^3 + x^2 + x + 1/3");
    auto vh = goldbach_rational(h);
    check_two_sum(vh, h);
    CHECK(vh.summands[0].first == parse_poly<PolyR>("x^3 + x^2 + 1/3"));
    CHECK(vh.summands[1].first == parse_poly<PolyR>("1/3 x^4 + x"));

    auto t = parse_poly<PolyR>("x^2 + 2x + 1");
    auto vt = goldbach_rational(t);
    check_two_sum(vt, t);

    auto t2 = parse_poly<PolyR>("x^2 + x + 1");
    CHECK(goldbach_rational(t2).kind == VerdictKind::irreducible_itself);

    for (const auto& [s, cert] : vh.summands)
        CHECK(cert.kind != CertKind::brute_force_no_factor);
}

TEST_CASE("bivariate wrapper") {
    auto f = parse_poly<Poly2>("x*y + x + y + 1", XY);
    auto v = goldbach_multi(f);
    check_two_sum(v, f);
    std::set<Poly2> got{v.summands[0].first, v.summands[1].first};
    std::set<Poly2> want{parse_poly<Poly2>("x*y + 1", XY), parse_poly<Poly2>("y + x", XY)};
    CHECK(got == want);

    CHECK(goldbach_multi(parse_poly<Poly2>("y + x", XY)).kind ==
          VerdictKind::exceptional_form_a);
    CHECK(goldbach_multi(parse_poly<Poly2>("2x*y + x", XY)).kind ==
          VerdictKind::exceptional_form_a);
    CHECK(goldbach_multi(parse_poly<Poly2>("3x^2*y^-1", XY)).kind ==
          VerdictKind::out_of_scope_monomial);
    // (x+1)y + 1: an outer binomial with a unit coefficient
    CHECK(goldbach_multi(parse_poly<Poly2>("x*y + y + 1", XY)).kind ==
          VerdictKind::exceptional_form_a);

    auto m = parse_poly<Poly2>("x^2*y + x*y + y", XY);
    auto vm = goldbach_multi(m);
    CHECK(vm.kind == VerdictKind::exceptional_form_b);

    auto m2 = parse_poly<Poly2>("2x*y^2 + 3y^2", XY);
    auto vm2 = goldbach_multi(m2);
    check_two_sum(vm2, m2);

    auto p = parse_poly<Poly2>("x*y + x^2 + x + 1", XY);
    auto vp = goldbach_multi(p);
    check_two_sum(vp, p);
    bool has_unit_pair = vp.summands[0].second.kind == CertKind::monomial_unit_pair ||
                         vp.summands[1].second.kind == CertKind::monomial_unit_pair;
    CHECK(has_unit_pair);
    for (const auto& [g, cert] : vp.summands) CHECK(oracle_irreducible(g));
}

TEST_CASE("two_thirds_family members") {
    auto target = two_thirds_family_target();

    auto f1 = two_thirds_family(1);
    CHECK(f1.first.first == f1.second.first);
    CHECK(f1.first.first + f1.second.first == target);
    CHECK(f1.second.first.coeff(1).value() == big_rat(2, 3));

    auto f2 = two_thirds_family(2);
    CHECK(f2.first.first.coeff(1).value() == big_rat(4, 9));
    CHECK(f2.second.first.coeff(1).value() == big_rat(8, 9));
    CHECK(f2.second.first.coeff(1).witness().at(2) == 2);

    auto f3 = two_thirds_family(3);
    CHECK(f3.second.first.coeff(1).value() == big_rat(28, 27));
    CHECK(f3.second.first.coeff(1).witness() ==
          TwoThirds::witness_map{{2, 1}, {3, 2}});

    std::set<std::set<std::string>> seen;
    for (int n = 1; n <= 10; ++n) {
        auto item = two_thirds_family(n);
        CHECK(item.first.first + item.second.first == target);
        CHECK(validate_certificate(item.first.first, item.first.second));
        CHECK(validate_certificate(item.second.first, item.second.second));
        seen.insert({format_poly(item.first.first), format_poly(item.second.first)});
    }
    CHECK(seen.size() == 10);

    CHECK_THROWS_AS(two_thirds_family(0), std::invalid_argument);
}

TEST_CASE("desk-scale sweep has no mismatches") {
    SweepConfig cfg;
    cfg.max_deg = 3;
    cfg.max_coeff = 2;
    auto report = run_goldbach_sweep(cfg);
    for (const auto& m : report.mismatches) INFO(m);
    CHECK(report.mismatches.empty());
    CHECK(report.total > 0);
    CHECK(report.histogram.count("SumOfTwo") == 1);
    CHECK(report.histogram.count("ExceptionalFormA") == 1);
}

TEST_CASE("sweep is deterministic across worker counts") {
    SweepConfig one;
    one.max_deg = 3;
    one.max_coeff = 2;
    SweepConfig four = one;
    four.jobs = 4;
    auto a = run_goldbach_sweep(one);
    auto b = run_goldbach_sweep(four);
    CHECK(a.total == b.total);
    CHECK(a.histogram == b.histogram);
    CHECK(a.mismatches == b.mismatches);
}
