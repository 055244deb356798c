#include <catch_amalgamated.hpp>

#include <random>

#include "semigold/semidomain.hpp"

using namespace semigold;

namespace {

Nat random_nat(std::mt19937_64& rng, int max) {
    return Nat(static_cast<std::int64_t>(rng() % (max + 1)));
}

QuadraticNat random_quad(std::mt19937_64& rng, int max) {
    return QuadraticNat(static_cast<std::int64_t>(rng() % (max + 1)),
                        static_cast<std::int64_t>(rng() % (max + 1)));
}

TwoThirds random_two_thirds(std::mt19937_64& rng, int atoms) {
    TwoThirds t = TwoThirds::zero();
    const int n = 1 + static_cast<int>(rng() % atoms);
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::int64_t>(rng() % 9) - 4;
        t = t + TwoThirds::atom(k);
    }
    return t;
}

big_rat eval_witness(const TwoThirds::witness_map& w) {
    big_rat v = 0;
    for (const auto& [k, m] : w) v += big_rat(m) * pow_two_thirds(k);
    return v;
}

}  // namespace

TEST_CASE("descriptor flags match the shipped instances") {
    auto n0 = descriptor_of<Nat>();
    CHECK(n0.additively_reduced);
    CHECK(n0.additively_atomic);
    CHECK(n0.atoms_are_units);
    CHECK(n0.supports_exhaustive_split);

    auto q = descriptor_of<NonnegRational>();
    CHECK(q.additively_reduced);
    CHECK_FALSE(q.additively_atomic);
    CHECK_FALSE(q.atoms_are_units);

    auto r2 = descriptor_of<QuadraticNat>();
    CHECK(r2.additively_reduced);
    CHECK(r2.additively_atomic);
    CHECK_FALSE(r2.atoms_are_units);
    CHECK(r2.supports_exhaustive_split);

    auto tt = descriptor_of<TwoThirds>();
    CHECK(tt.additively_reduced);
    CHECK(tt.additively_atomic);
    CHECK(tt.atoms_are_units);
    CHECK_FALSE(tt.supports_exhaustive_split);
}

TEST_CASE("basic arithmetic examples") {
    CHECK(Nat(2) + Nat(3) == Nat(5));
    CHECK(Nat(2) * Nat(3) == Nat(6));

    CHECK(QuadraticNat(1, 0) + QuadraticNat(0, 1) == QuadraticNat(1, 1));
    CHECK(QuadraticNat::sqrt2() * QuadraticNat::sqrt2() == QuadraticNat(2, 0));

    auto a = TwoThirds::atom(1) + TwoThirds::atom(1);
    CHECK(a.value() == big_rat(4, 3));
    CHECK(a.witness().at(1) == 2);

    auto inv = TwoThirds::atom(1) * TwoThirds::atom(-1);
    CHECK(inv.value() == 1);
    CHECK(inv.witness().at(0) == 1);
}

TEST_CASE("is_unit per instance") {
    CHECK(Nat(1).is_unit());
    CHECK_FALSE(Nat(2).is_unit());
    CHECK_FALSE(Nat(0).is_unit());

    CHECK(NonnegRational(3, 4).is_unit());
    CHECK_FALSE(NonnegRational(0).is_unit());

    // 4/9 = (2/3)^2
    CHECK(TwoThirds::from_witness({{2, 1}}).is_unit());
    CHECK(TwoThirds::atom(-3).is_unit());
    CHECK_FALSE((TwoThirds::atom(1) + TwoThirds::atom(1)).is_unit());

    CHECK(QuadraticNat(1, 0).is_unit());
    CHECK_FALSE(QuadraticNat::sqrt2().is_unit());
}

TEST_CASE("QuadraticNat (1,1) has no inverse: brute-force oracle") {
    // independent oracle: search all candidate inverses with components <= 8
    const QuadraticNat s(1, 1);
    bool found = false;
    for (int c = 0; c <= 8; ++c)
        for (int d = 0; d <= 8; ++d)
            if (s * QuadraticNat(c, d) == QuadraticNat::one()) found = true;
    CHECK_FALSE(found);
    CHECK_FALSE(s.is_unit());
}

TEST_CASE("unit_decompose canonical splits") {
    auto s5 = unit_split(Nat(5));
    CHECK(s5.unit == Nat(1));
    CHECK(s5.rest == Nat(4));

    auto s1 = unit_split(Nat(1));
    CHECK(s1.unit == Nat(1));
    CHECK(s1.rest.is_zero());

    // 4/3 with witness {1 -> 2} splits into two (2/3) atoms
    auto t = TwoThirds::from_witness({{1, 2}});
    auto st = unit_split(t);
    CHECK(st.unit.value() == big_rat(2, 3));
    CHECK(st.rest.value() == big_rat(2, 3));
    CHECK(st.unit + st.rest == t);

    CHECK_THROWS_AS(unit_split(NonnegRational(1, 2)), not_applicable);
    CHECK_THROWS_AS(unit_split(QuadraticNat(1, 1)), not_applicable);
    CHECK_THROWS_AS(unit_split(Nat(0)), std::domain_error);
}

TEST_CASE("unit_split law: u + v = s with u a unit (randomized)") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Nat n = random_nat(rng, 50);
        if (n.is_zero()) continue;
        auto s = unit_split(n);
        CHECK(s.unit.is_unit());
        CHECK(s.unit + s.rest == n);
    }
    for (int i = 0; i < 200; ++i) {
        TwoThirds t = random_two_thirds(rng, 5);
        auto s = unit_split(t);
        CHECK(s.unit.is_unit());
        CHECK(s.unit + s.rest == t);
    }
}

TEST_CASE("gcd_contains_one") {
    CHECK(gcd_contains_one(std::vector<Nat>{Nat(2), Nat(3)}));
    CHECK_FALSE(gcd_contains_one(std::vector<Nat>{Nat(2), Nat(4)}));
    CHECK(gcd_contains_one(std::vector<NonnegRational>{NonnegRational(2, 3)}));

    // {sqrt2}: sqrt2 is a non-unit common divisor of itself
    CHECK_FALSE(gcd_contains_one(std::vector<QuadraticNat>{QuadraticNat::sqrt2()}));
    CHECK(gcd_contains_one(std::vector<QuadraticNat>{QuadraticNat(1, 1), QuadraticNat(1, 0)}));
    // {1 + sqrt2, 2}: common divisors must divide 2; exhaustive search
    CHECK(gcd_contains_one(std::vector<QuadraticNat>{QuadraticNat(1, 1), QuadraticNat(2, 0)}));

    CHECK(gcd_contains_one(std::vector<TwoThirds>{TwoThirds::atom(2), TwoThirds(5)}));
    CHECK_THROWS_AS(gcd_contains_one(std::vector<TwoThirds>{TwoThirds(2)}), search_exhausted);
}

TEST_CASE("min_unit_summands") {
    CHECK(min_unit_summands(Nat(3), 3) == 3);
    CHECK_FALSE(min_unit_summands(Nat(4), 3).has_value());
    CHECK(min_unit_summands(Nat(1), 3) == 1);

    // Nat: defined iff s <= cap, and equals s
    for (int s = 1; s <= 6; ++s) {
        auto m = min_unit_summands(Nat(s), 3);
        if (s <= 3)
            CHECK(m == s);
        else
            CHECK_FALSE(m.has_value());
    }

    CHECK(min_unit_summands(TwoThirds::atom(5), 3) == 1);
    // 4/3 = (2/3) + (2/3)
    CHECK(min_unit_summands(TwoThirds::from_witness({{1, 2}}), 3) == 2);
    // 2 = 1 + 1; 3 = 3/2 + 3/2; 4 = 3/2 + 3/2 + 1; 8 needs more than three
    CHECK(min_unit_summands(TwoThirds(2), 3) == 2);
    CHECK(min_unit_summands(TwoThirds(3), 3) == 2);
    CHECK(min_unit_summands(TwoThirds(4), 3) == 3);
    CHECK_FALSE(min_unit_summands(TwoThirds(8), 3).has_value());
    // 7/3 = 1 + 2/3 + 2/3 and no shorter form
    CHECK(min_unit_summands(TwoThirds::from_witness({{0, 1}, {1, 2}}), 3) == 3);

    CHECK_THROWS_AS(min_unit_summands(NonnegRational(1), 3), not_applicable);
}

TEST_CASE("min_unit_summands agrees with windowed enumeration") {
    // oracle: enumerate all sums of up to three atoms with exponents in
    // [-12, 12] and record the minimum count per value
    std::map<big_rat, int> oracle;
    const std::int64_t W = 12;
    for (std::int64_t a = -W; a <= W; ++a) {
        const big_rat va = pow_two_thirds(a);
        auto put = [&](const big_rat& v, int n) {
            auto it = oracle.find(v);
            if (it == oracle.end() || it->second > n) oracle[v] = n;
        };
        put(va, 1);
        for (std::int64_t b = a; b <= W; ++b) {
            const big_rat vb = va + pow_two_thirds(b);
            put(vb, 2);
            for (std::int64_t c = b; c <= W; ++c) put(vb + pow_two_thirds(c), 3);
        }
    }
    // values from a narrow atom window: any shorter decomposition would use
    // atoms the oracle window already covers
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        TwoThirds t = TwoThirds::zero();
        for (int j = 0; j < n; ++j)
            t = t + TwoThirds::atom(static_cast<std::int64_t>(rng() % 7) - 3);
        auto got = min_unit_summands(t, 3);
        REQUIRE(got.has_value());
        CHECK(*got == oracle.at(t.value()));
    }
}

TEST_CASE("semiring laws hold on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Nat a = random_nat(rng, 40), b = random_nat(rng, 40), c = random_nat(rng, 40);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if ((a * b).is_zero()) CHECK((a.is_zero() || b.is_zero()));
        if ((a + b).is_zero()) CHECK((a.is_zero() && b.is_zero()));
    }
    for (int i = 0; i < 300; ++i) {
        QuadraticNat a = random_quad(rng, 9), b = random_quad(rng, 9), c = random_quad(rng, 9);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if ((a * b).is_zero()) CHECK((a.is_zero() || b.is_zero()));
    }
    for (int i = 0; i < 200; ++i) {
        TwoThirds a = random_two_thirds(rng, 4), b = random_two_thirds(rng, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(eval_witness((a + b).witness()) == (a + b).value());
        CHECK(eval_witness((a * b).witness()) == (a * b).value());
    }
}

TEST_CASE("TwoThirds witness rewrites preserve the value") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        TwoThirds t = random_two_thirds(rng, 6);
        // random sequence of up/down rewrites wherever applicable
        for (int step = 0; step < 12; ++step) {
            std::vector<std::int64_t> splits, merges;
            for (const auto& [k, m] : t.witness()) {
                if (m >= 2) splits.push_back(k);
                if (m >= 3) merges.push_back(k - 1);
            }
            if (rng() % 2 == 0 && !splits.empty())
                t = t.rewrite_split(splits[rng() % splits.size()]);
            else if (!merges.empty())
                t = t.rewrite_merge(merges[rng() % merges.size()]);
            CHECK(eval_witness(t.witness()) == t.value());
        }
    }
    // the identity itself: 2*(2/3)^n = 3*(2/3)^(n+1)
    auto lhs = TwoThirds::from_witness({{4, 2}});
    auto rhs = lhs.rewrite_split(4);
    CHECK(rhs.witness().at(5) == 3);
    CHECK(lhs == rhs);
}

TEST_CASE("QuadraticNat value ordering is consistent") {
    // 1 < sqrt2 < 2 < 1+sqrt2 < 2sqrt2 < 3
    std::vector<QuadraticNat> v{QuadraticNat(3, 0), QuadraticNat(0, 1), QuadraticNat(1, 1),
                                QuadraticNat(1, 0), QuadraticNat(0, 2), QuadraticNat(2, 0)};
    std::sort(v.begin(), v.end());
    CHECK(v[0] == QuadraticNat(1, 0));
    CHECK(v[1] == QuadraticNat(0, 1));
    CHECK(v[2] == QuadraticNat(2, 0));
    CHECK(v[3] == QuadraticNat(1, 1));
    CHECK(v[4] == QuadraticNat(0, 2));
    CHECK(v[5] == QuadraticNat(3, 0));
}

TEST_CASE("exact division") {
    CHECK(Nat(6).try_div(Nat(3)) == Nat(2));
    CHECK_FALSE(Nat(7).try_div(Nat(3)).has_value());

    // (2) = (sqrt2)(sqrt2)
    CHECK(QuadraticNat(2, 0).try_div(QuadraticNat::sqrt2()) == QuadraticNat::sqrt2());
    // (1+sqrt2) is not divisible by 2
    CHECK_FALSE(QuadraticNat(1, 1).try_div(QuadraticNat(2, 0)).has_value());
    // 3+2sqrt2 = (1+sqrt2)^2
    CHECK(QuadraticNat(3, 2).try_div(QuadraticNat(1, 1)) == QuadraticNat(1, 1));

    auto q = TwoThirds::from_witness({{1, 2}}).try_div(TwoThirds::atom(1));
    REQUIRE(q.has_value());
    CHECK(q->value() == 2);
}
