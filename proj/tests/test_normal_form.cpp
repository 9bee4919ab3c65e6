#include "qfano/fixtures.hpp"
#include "qfano/normal_form.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

using namespace qfano;
using namespace qfano::nf;

namespace {

Exponent mono(const std::string& text) { return parse(text).terms().begin()->first; }

Rational small_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

/// Degree-12 equation with unit corners; half of them land in form B.
WeightedPolynomial random_equation(std::mt19937_64& rng) {
    const Rational s = small_rational(rng);
    const Rational l0 = (rng() % 2) ? s * s / Rational(4) : small_rational(rng);
    WeightedPolynomial p = parse("x5*x7 + x4^3 + x6^2");
    p.add_term(mono("x3^2*x6"), s);
    p.add_term(mono("x3^4"), l0);
    p.add_term(mono("x3*x4*x5"), small_rational(rng));
    return p;
}

/// Random admissible change of coordinates in P(3,4,5,6,7).
Substitution random_substitution(std::mt19937_64& rng) {
    const auto& w = x12_weights();
    Substitution s;
    for (int weight : w) {
        WeightedPolynomial g(w);
        for (const auto& e : monomials(w, weight)) {
            if (e[g.index_of(weight)] > 0) continue;
            g.add_term(e, small_rational(rng));
        }
        s.set(weight, small_rational(rng, true), g);
    }
    return s;
}

const std::set<Exponent>& allowed_final_support() {
    static const std::set<Exponent> s{mono("x5*x7"), mono("x4^3"), mono("x6^2"), mono("x3^4")};
    return s;
}

}  // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse("x5*x7 + x4^3 + x6^2 + x3^4").size(), 4U);
    EXPECT_TRUE(parse("0").is_zero());
    EXPECT_EQ(parse("x5*x7 + x4^3 + x6^2").size(), 3U);
    EXPECT_TRUE(parse("  2/4 *x3 ^2* x6\t- 1/2*x3*x3*x6 ").is_zero());
    EXPECT_EQ(parse("-x3^4 + 3").coefficient(mono("x3^4")), Rational(-1));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse("x5*x7 + x8"), UnknownVariable);
    try {
        parse("x5*x7 + * x3");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 8U);
    }
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("x5 x7"), ParseError);
    EXPECT_THROW(parse("1/0*x3"), ParseError);
    EXPECT_THROW(parse("x3^"), ParseError);
}

TEST(Print, RoundTrip) {
    for (const std::string text : {"x5*x7 + x6^2 + x4^3 + x3^4", "x5*x7 + x6^2 + x4^3", "0", "-x3^4", "x6^2 - 1/2*x3^2*x6 + 3*x3*x4*x5"}) {
        EXPECT_EQ(print(parse(text)), text);
    }
    // Canonical order: heaviest monomial first, whitespace normalized.
    EXPECT_EQ(print(parse("x3^4+x6^2 +x4^3+ x5*x7")), "x5*x7 + x6^2 + x4^3 + x3^4");
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_equation(rng);
        EXPECT_EQ(parse(print(p)), p);
    }
}

TEST(QuasiHomogeneous, Examples) {
    EXPECT_TRUE(is_quasihomogeneous(parse("x5*x7 + x4^3 + x6^2 + x3^4"), 12));
    EXPECT_TRUE(is_quasihomogeneous(parse("1"), 0));
    EXPECT_FALSE(is_quasihomogeneous(parse("x3 + x4"), 3));
}

TEST(Substitute, Examples) {
    Substitution s;
    s.set(6, Rational(1), parse("-x3^2"));
    EXPECT_EQ(substitute(parse("x6^2 + 2*x3^2*x6"), s), parse("x6^2 - x3^4"));
    const auto p = parse("x5*x7 + x3*x4*x5");
    EXPECT_EQ(substitute(p, Substitution::identity()), p);
    Substitution t;
    t.set(7, Rational(1), parse("-x3*x4"));
    EXPECT_EQ(substitute(p, t), parse("x5*x7"));
}

TEST(Substitute, GradingViolations) {
    Substitution s;
    EXPECT_THROW(s.set(6, Rational(1), parse("x3")), GradingError);
    EXPECT_THROW(s.set(6, Rational(0), parse("x3^2")), GradingError);
    EXPECT_THROW(s.set(6, Rational(1), parse("x6")), GradingError);
}

TEST(Substitute, InverseRoundTrip) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_equation(rng);
        const auto s = random_substitution(rng);
        const auto q = substitute(p, s);
        EXPECT_TRUE(is_quasihomogeneous(q, 12));
        EXPECT_EQ(substitute(q, s.inverse()), p);
        EXPECT_EQ(substitute(substitute(p, s.inverse()), s), p);
    }
}

TEST(CornerCheck, Examples) {
    for (const auto& v : corner_check(parse("x5*x7 + x4^3 + x6^2 + x3^4"), 12)) EXPECT_TRUE(v.ok) << v.weight;
    for (const auto& v : corner_check(parse("x4^3 + x6^2 + x3^4"), 12)) EXPECT_EQ(v.ok, v.weight != 7 && v.weight != 5);
    for (const auto& v : corner_check(parse("x5*x7 + x4^3 + x6^2"), 12)) {
        EXPECT_EQ(v.ok, v.weight != 3);
        if (v.weight == 3) EXPECT_NE(v.detail.find("not quasi-smooth at vertex w=3"), std::string::npos);
    }
}

TEST(Normalize, Examples) {
    const auto a = normalize(parse("x5*x7 + x4^3 + x6^2 + x3^2*x6 + x3^4"));
    EXPECT_EQ(a.form, FormClass::FormA);
    EXPECT_EQ(a.lambda, Rational(3, 4));
    const auto b = normalize(parse("x5*x7 + x4^3 + x6^2 + x3*x4*x5"));
    EXPECT_EQ(b.form, FormClass::FormB);
    EXPECT_EQ(b.lambda, Rational(0));
    EXPECT_EQ(b.final_poly, parse("x5*x7 + x4^3 + x6^2"));
}

TEST(Normalize, FormsAreFixedPoints) {
    for (const auto& f : equation_fixtures()) {
        const auto p = parse(f.text);
        const auto r = normalize(p);
        EXPECT_EQ(r.form, f.form);
        EXPECT_TRUE(r.log.empty());
        EXPECT_EQ(r.final_poly, p);
    }
}

TEST(Normalize, MissingCorner) {
    try {
        normalize(parse("x5*x7 + x4^3 + x3^4"));
        FAIL();
    } catch (const MissingCornerMonomial& e) {
        EXPECT_EQ(e.monomial, "x6^2");
    }
    EXPECT_THROW(normalize(parse("x4^3 + x6^2")), MissingCornerMonomial);
    EXPECT_THROW(normalize(parse("x5*x7 + x4^3 + x6^2 + x3")), GradingError);
}

TEST(Normalize, NonUnitCornersNeedOnlyRationalScaling) {
    const auto r = normalize(parse("2*x5*x7 + 3*x4^3 + 5*x6^2 + 7*x3*x4*x5 - 1/2*x3^2*x6 + 4*x3^4"));
    EXPECT_EQ(r.multiplier, Rational(1125));
    EXPECT_EQ(r.lambda, Rational(71775, 16));
    for (const auto& e : r.final_poly.support()) EXPECT_TRUE(allowed_final_support().count(e));
}

TEST(Normalize, RandomFinalSupport) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto r = normalize(random_equation(rng));
        for (const auto& e : r.final_poly.support()) EXPECT_TRUE(allowed_final_support().count(e));
        for (const auto& m : {"x5*x7", "x4^3", "x6^2"}) EXPECT_EQ(r.final_poly.coefficient(mono(m)), Rational(1));
        EXPECT_EQ(r.form == FormClass::FormA, !r.lambda.is_zero());
    }
}

TEST(Normalize, ClassInvariantUnderCoordinateChange) {
    std::mt19937_64 rng(17);
    int seen_a = 0, seen_b = 0;
    for (int t = 0; t < 100; ++t) {
        const auto p = random_equation(rng);
        const auto base = normalize(p);
        (base.form == FormClass::FormA ? seen_a : seen_b)++;
        const auto moved = normalize(substitute(p, random_substitution(rng)));
        EXPECT_EQ(moved.form, base.form);
    }
    EXPECT_GT(seen_a, 0);
    EXPECT_GT(seen_b, 0);
}

TEST(Normalize, Idempotent) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        const auto r = normalize(substitute(random_equation(rng), random_substitution(rng)));
        const auto again = normalize(r.final_poly);
        EXPECT_EQ(again.form, r.form);
        EXPECT_EQ(again.lambda, r.lambda);
        EXPECT_TRUE(again.log.empty());
    }
}

TEST(RelationProfile, Examples) {
    const auto series = hilbert(fixture("X12").shape, 30);
    EXPECT_EQ(relation_profile(x12_weights(), 12, series), (RelationProfile{6, 5, 1}));
    EXPECT_EQ(relation_profile(x12_weights(), 6, series), (RelationProfile{2, 2, 0}));
    EXPECT_EQ(relation_profile(x12_weights(), 0, series), (RelationProfile{1, 1, 0}));
    for (int d = 3; d <= 11; ++d) EXPECT_EQ(relation_profile(x12_weights(), d, series).relations, 0) << d;
    const auto bigger = expand_product({{}, {1, 3, 4, 5, 6, 7}}, 30);
    EXPECT_THROW(relation_profile(x12_weights(), 1, bigger), SeriesExceedsFreeAlgebra);
}

TEST(EdgeRestriction, FormA) {
    const auto a = parse("x5*x7 + x4^3 + x6^2 + x3^4");
    const auto e36 = edge_restriction_points(a, a.index_of(3), a.index_of(6));
    EXPECT_EQ(e36.points, 2);
    EXPECT_FALSE(e36.non_reduced);
    const auto e46 = edge_restriction_points(a, a.index_of(4), a.index_of(6));
    EXPECT_EQ(e46.points, 1);
    EXPECT_EQ(e46.restriction, "x6^2 + x4^3");
}

TEST(EdgeRestriction, FormBNonReduced) {
    const auto b = parse("x5*x7 + x4^3 + x6^2");
    const auto e = edge_restriction_points(b, b.index_of(3), b.index_of(6));
    EXPECT_EQ(e.points, 1);
    EXPECT_TRUE(e.non_reduced);
    EXPECT_EQ(e.multiplicities, (std::map<int, int>{{2, 1}}));
    EXPECT_THROW(edge_restriction_points(b, b.index_of(3), b.index_of(5)), EdgeContained);
}

TEST(EdgeRestriction, RepeatedRoot) {
    // (x6 + x3^2)^2 restricted to the (3,6) edge: one point, multiplicity 2.
    const auto p = parse("x6^2 + 2*x3^2*x6 + x3^4");
    const auto e = edge_restriction_points(p, p.index_of(3), p.index_of(6));
    EXPECT_EQ(e.points, 1);
    EXPECT_TRUE(e.non_reduced);
}

TEST(EdgeRestriction, MatchesGeneralMemberFormula) {
    const auto a = parse("x5*x7 + x4^3 + x6^2 + x3^4");
    const auto& s = fixture("X12").shape;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            const auto general = edge_singularities(s, i, j);
            if (!general) continue;
            const auto specific = edge_restriction_points(a, i, j);
            EXPECT_EQ(specific.points, general->count);
        }
    }
}

TEST(UPoly, SquarefreeProfile) {
    // (u - 1)^3 (u + 2)^2 (u^2 + 1)
    using upoly::squarefree_profile;
    UPoly f{Rational(1)};
    auto mul = [](const UPoly& a, const UPoly& b) {
        UPoly c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    for (int i = 0; i < 3; ++i) f = mul(f, {Rational(-1), Rational(1)});
    for (int i = 0; i < 2; ++i) f = mul(f, {Rational(2), Rational(1)});
    f = mul(f, {Rational(1), Rational(0), Rational(1)});
    EXPECT_EQ(squarefree_profile(f), (std::map<int, int>{{1, 2}, {2, 1}, {3, 1}}));
}
