#include "generators.hpp"

#include <hz/errors.hpp>
#include <hz/series.hpp>

#include <gtest/gtest.h>

using namespace hz;
using hz::testgen::bivariate;
using hz::testgen::power_series;
using hz::testgen::uniform;

namespace {

const Var x("x");

LaurentSeries one() { return LaurentSeries::constant(Rational(1)); }

} // namespace

TEST(SeriesExamples, Addition) {
    const LaurentSeries s = s_series(8);
    EXPECT_EQ(LaurentSeries() + s, s);
    EXPECT_TRUE((varsigma_series(8) + (-varsigma_series(8))).is_zero());

    LaurentSeries a = LaurentSeries::monomial(1, {{x, 1}}) + LaurentSeries::monomial(Rational(1, 24), {{x, 3}});
    LaurentSeries b = LaurentSeries::monomial(Rational(1, 24), {{x, 3}});
    LaurentSeries sum = a + b;
    EXPECT_EQ(coefficient(sum, 1), Rational(1));
    EXPECT_EQ(coefficient(sum, 3), Rational(1, 12));
    EXPECT_EQ(sum.size(), 2u);
}

TEST(SeriesExamples, Multiplication) {
    EXPECT_EQ(one() * s_series(6), s_series(6));
    const auto inv_x = LaurentSeries::monomial(1, {{x, -1}});
    const auto xx = LaurentSeries::monomial(1, {{x, 1}});
    EXPECT_EQ(inv_x * xx, one());
    EXPECT_EQ(coefficient(varsigma_series(8) * varsigma_series(8), 4), Rational(1, 12));
}

TEST(SeriesExamples, Powers) {
    EXPECT_EQ(pow(s_series(6), 0), one());
    EXPECT_EQ(pow(LaurentSeries::monomial(1, {{x, 1}}), 3), LaurentSeries::monomial(1, {{x, 3}}));
    EXPECT_EQ(coefficient(pow(s_series(6), 2), 2), Rational(1, 12));
}

TEST(SeriesExamples, Inversion) {
    EXPECT_EQ(invert(one()), one());
    EXPECT_EQ(coefficient(invert(s_series(6)), 2), Rational(-1, 24));
    const LaurentSeries inv = invert(varsigma_series(7));
    EXPECT_EQ(inv.lower_bound(x), -1);
    EXPECT_EQ(coefficient(inv, -1), Rational(1));
    EXPECT_EQ(coefficient(inv, 0), Rational(0));
    EXPECT_EQ(coefficient(inv, 1), Rational(-1, 24));
    EXPECT_EQ(coefficient(inv, 3), Rational(7, 5760));
}

TEST(SeriesExamples, Coefficients) {
    const LaurentSeries vs = varsigma_series(9);
    EXPECT_EQ(coefficient(vs, 1), Rational(1));
    EXPECT_EQ(coefficient(vs, 2), Rational(0));
    EXPECT_EQ(coefficient(vs, 3), Rational(1, 24));
    EXPECT_EQ(coefficient(vs, 5), Rational(1, 1920));
    EXPECT_EQ(coefficient(s_series(4), 0), Rational(1));
    EXPECT_EQ(coefficient(x_over_sinh(6), 2), Rational(-1, 6));
    EXPECT_EQ(coefficient(x_over_tanh(6), 2), Rational(1, 3));
    EXPECT_EQ(coefficient(x_over_tanh(6), 4), Rational(-1, 45));
    EXPECT_EQ(coefficient(cosh_half_series(6), 2), Rational(1, 8));
}

TEST(SeriesExamples, Substitution) {
    const Var u("u"), z("z");
    const auto sq = LaurentSeries::monomial(1, {{x, 2}});
    EXPECT_EQ(substitute_monomial(sq, 1, {{u, 1}, {z, 1}}), LaurentSeries::monomial(1, {{u, 2}, {z, 2}}));
    EXPECT_EQ(coefficient(substitute_monomial(varsigma_series(7), 2, {{x, 1}}), 3), Rational(1, 3));
    EXPECT_EQ(coefficient(substitute_monomial(s_series(6), 1, {{u, 1}, {z, 1}}), {{u, 2}, {z, 2}}), Rational(1, 24));
    // Off-diagonal terms of a series in uz vanish.
    EXPECT_EQ(coefficient(substitute_monomial(s_series(6), 1, {{u, 1}, {z, 1}}), {{u, 2}, {z, 0}}), Rational(0));
}

TEST(SeriesExamples, LinearSubstitutionMatchesBinomialExpansion) {
    const Var z("z"), w("w");
    // varsigma(z + w) to total order 3: z + w + (z + w)^3 / 24.
    const LaurentSeries s = substitute_linear(varsigma_series(6), {{z, 1}, {w, 1}}, {{z, 3}, {w, 3}});
    EXPECT_EQ(coefficient(s, {{z, 1}}), Rational(1));
    EXPECT_EQ(coefficient(s, {{z, 2}, {w, 1}}), Rational(3, 24));
    EXPECT_EQ(coefficient(s, {{z, 1}, {w, 2}}), Rational(3, 24));
    EXPECT_EQ(coefficient(s, {{z, 1}, {w, 1}}), Rational(0));
}

TEST(SeriesWindow, ReadsBeyondTruncationAreErrors) {
    const LaurentSeries s = s_series(6);
    EXPECT_EQ(s.truncation_order(x), 6);
    EXPECT_THROW(coefficient(s, 7), WindowError);
    EXPECT_EQ(coefficient(s, -3), Rational(0));
    // Products are only as exact as their least exact factor allows.
    const LaurentSeries p = s_series(4) * s_series(8);
    EXPECT_EQ(p.truncation_order(x), 4);
    EXPECT_THROW(coefficient(p, 5), WindowError);
    // A pole shifts the exact window down.
    const LaurentSeries q = invert(varsigma_series(7)) * s_series(6);
    EXPECT_EQ(q.truncation_order(x), 5);
}

TEST(SeriesWindow, NonInvertibleInputs) {
    EXPECT_THROW(invert(LaurentSeries()), NonInvertibleError);
    // Lowest part is not a single monomial.
    LaurentSeries b({"x", "y"}, {0, 0}, {3, 3});
    b.set({{"x", 1}}, 1);
    b.set({{"y", 1}}, 1);
    EXPECT_THROW(invert(b), NonInvertibleError);
    // An exact polynomial has no finite inverse.
    const auto poly = one() + LaurentSeries::monomial(1, {{x, 1}});
    EXPECT_THROW(invert(poly), WindowError);
}

TEST(SeriesParity, Builders) {
    const int order = 15;
    const std::vector<std::pair<LaurentSeries, int>> cases = {
        {varsigma_series(order), 1}, {s_series(order), 0},      {x_over_sinh(order), 0},
        {x_over_tanh(order), 0},     {cosh_half_series(order), 0},
    };
    for (const auto &[s, parity] : cases) {
        for (int k = 0; k <= order; ++k) {
            if ((k & 1) != parity) {
                EXPECT_TRUE(coefficient(s, k).is_zero()) << s.to_string() << " at " << k;
            } else {
                EXPECT_FALSE(coefficient(s, k).is_zero()) << s.to_string() << " at " << k;
            }
        }
    }
}

TEST(SeriesProperty, RingAxiomsUnivariate) {
    for (int trial = 0; trial < 600; ++trial) {
        const int n = uniform(0, 8);
        const auto a = power_series(uniform(n, n + 3));
        const auto b = power_series(uniform(n, n + 3));
        const auto c = power_series(uniform(n, n + 3));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_EQ(a * one(), a);
        const auto r = testgen::small_rational();
        ASSERT_EQ(r * (a + b), r * a + r * b);
    }
}

TEST(SeriesProperty, RingAxiomsBivariate) {
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = bivariate(uniform(0, 4), uniform(0, 4));
        const auto b = bivariate(uniform(0, 4), uniform(0, 4));
        const auto c = bivariate(uniform(0, 4), uniform(0, 4));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(SeriesProperty, InverseIsTwoSided) {
    for (int trial = 0; trial < 400; ++trial) {
        const int order = uniform(0, 10);
        const auto a = power_series(order, x, true);
        const auto inv = invert(a);
        ASSERT_EQ(inv.truncation_order(x), order);
        const auto left = inv * a;
        const auto right = a * inv;
        ASSERT_EQ(left.truncation_order(x), order);
        ASSERT_EQ(left, one());
        ASSERT_EQ(right, one());
    }
    for (int trial = 0; trial < 200; ++trial) {
        // Laurent case: x^m times a unit.
        const int m = uniform(-3, 3);
        const int order = uniform(0, 8);
        auto a = power_series(order, x, true) * LaurentSeries::monomial(1, {{x, m}});
        a = a.tightened();
        const auto inv = invert(a);
        ASSERT_EQ(inv.lower_bound(x), -m);
        ASSERT_EQ(inv * a, one());
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = bivariate(uniform(0, 4), uniform(0, 4), true);
        ASSERT_EQ(invert(a) * a, one());
    }
}

TEST(SeriesProperty, WindowHonesty) {
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform(1, 7);
        const auto a_big = power_series(n + 5);
        const auto b_big = power_series(n + 5, x, true);
        const auto c_big = power_series(n + 5);
        auto f = [](const LaurentSeries &a, const LaurentSeries &b, const LaurentSeries &c) {
            return a * pow(invert(b), 2) + c * b - invert(b * b) * a;
        };
        const auto big = f(a_big, b_big, c_big);
        const auto small = f(a_big.truncated({{x, n}}), b_big.truncated({{x, n}}), c_big.truncated({{x, n}}));
        const int hi = small.truncation_order(x);
        ASSERT_GE(hi, n);
        for (int k = 0; k <= hi; ++k) {
            ASSERT_EQ(coefficient(small, k), coefficient(big, k)) << "k=" << k;
        }
        ASSERT_THROW(coefficient(small, hi + 1), WindowError);
    }
}

TEST(SeriesProperty, LaurentWindowHonesty) {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = uniform(2, 8);
        const auto a_big = power_series(n + 4);
        const auto big = invert(varsigma_series(n + 5)) * a_big;
        const auto small = invert(varsigma_series(n + 1)) * a_big.truncated({{x, n}});
        for (int k = -1; k <= small.truncation_order(x); ++k) {
            ASSERT_EQ(coefficient(small, k), coefficient(big, k));
        }
    }
}

TEST(SeriesOutput, Rendering) {
    EXPECT_EQ(invert(varsigma_series(3)).to_string(), "x^-1 - 1/24*x");
    EXPECT_EQ(LaurentSeries().to_string(), "0");
}
