#include "generators.hpp"

#include <hz/errors.hpp>
#include <hz/fock.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace hz;

namespace {

const Var z("z"), w("w");

EOp op(int a, const LinearForm &arg) { return EOp{a, arg}; }
EOp op(int a, const Var &v) { return EOp{a, LinearForm::of(v)}; }

/// Smallest multiset of pole forms covering every term of both values.
std::vector<LinearForm> common_denominator(const VevValue &a, const VevValue &b) {
    std::map<LinearForm, int> need;
    for (const VevValue *v : {&a, &b}) {
        for (const auto &[key, c] : v->terms()) {
            std::map<LinearForm, int> here;
            for (const auto &f : key.poles) {
                ++here[f];
            }
            for (const auto &[f, k] : here) {
                need[f] = std::max(need[f], k);
            }
        }
    }
    std::vector<LinearForm> out;
    for (const auto &[f, k] : need) {
        out.insert(out.end(), static_cast<std::size_t>(k), f);
    }
    return out;
}

} // namespace

TEST(Commutator, CentralTerm) {
    const auto c = commute(op(1, LinearForm()), op(-1, LinearForm()));
    EXPECT_EQ(c.central, Rational(1));
    EXPECT_FALSE(c.op.has_value());
    const auto c3 = commute(op(3, LinearForm()), op(-3, LinearForm()));
    EXPECT_EQ(c3.central, Rational(3));
    EXPECT_TRUE(commute(op(2, LinearForm()), op(-1, LinearForm())).is_zero());
}

TEST(Commutator, SelfCommutatorVanishes) {
    EXPECT_TRUE(commute(op(2, z), op(2, z)).is_zero());
    EXPECT_TRUE(commutator(op(2, z), op(2, z)).empty());
}

TEST(Commutator, GeneralTerm) {
    const auto c = commute(op(1, z), op(-1, w));
    ASSERT_TRUE(c.op.has_value());
    ASSERT_TRUE(c.varsigma_arg.has_value());
    EXPECT_EQ(*c.varsigma_arg, LinearForm::of(z) + LinearForm::of(w));
    EXPECT_EQ(c.op->energy, 0);
    EXPECT_EQ(c.op->arg, LinearForm::of(z) + LinearForm::of(w));

    const auto terms = commutator(op(1, z), op(-1, w), {{z, 5}, {w, 5}});
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].first, varsigma_of(LinearForm::of(z) + LinearForm::of(w), {{z, 5}, {w, 5}}));
}

TEST(Commutator, Antisymmetry) {
    const std::vector<Var> vars = {"z", "w"};
    for (int trial = 0; trial < 100; ++trial) {
        const int a = testgen::uniform(-4, 4), b = testgen::uniform(-4, 4);
        const EOp x = op(a, vars[0]), y = op(b, vars[1]);
        const Orders orders = {{z, 5}, {w, 5}};
        const auto xy = commutator(x, y, orders);
        const auto yx = commutator(y, x, orders);
        ASSERT_EQ(xy.size(), yx.size());
        for (std::size_t i = 0; i < xy.size(); ++i) {
            EXPECT_EQ(xy[i].second, yx[i].second);
            EXPECT_TRUE((xy[i].first + yx[i].first).is_zero()) << a << " " << b;
        }
    }
}

TEST(Vev, OnePointFunction) {
    const auto s = vev(EProduct{{op(0, z)}}, {{z, 5}});
    EXPECT_EQ(s, invert(varsigma_series(6, z)));
    EXPECT_TRUE(vev(EProduct{{op(2, z)}}).is_zero());
    EXPECT_THROW(vev_symbolic({op(0, LinearForm())}), DivergentExpectation);
}

TEST(Vev, TwoPointExamples) {
    EXPECT_EQ(vev(EProduct{{op(1, z), op(-1, w)}}), LaurentSeries::constant(1));
    EXPECT_TRUE(vev(EProduct{{op(-1, z), op(1, w)}}).is_zero());
}

TEST(Vev, TwoPointLaw) {
    for (int a = 1; a <= 4; ++a) {
        const auto e = vev_expand(EProduct{{op(a, z), op(-a, w)}}, {{z, 8}, {w, 8}});
        if (a == 1) {
            // varsigma(z + w) cancels against its pole.
            EXPECT_FALSE(e.substitution.has_value());
            EXPECT_EQ(e.series, LaurentSeries::constant(1));
            continue;
        }
        ASSERT_TRUE(e.substitution.has_value());
        const Var s = e.substitution->first;
        EXPECT_EQ(e.substitution->second, LinearForm::of(z) + LinearForm::of(w));
        const auto expected = substitute_monomial(varsigma_series(9, s), Rational(a), {{s, 1}}) *
                              invert(varsigma_series(9, s));
        EXPECT_GE(e.series.truncation_order(s), 8);
        for (int k = 0; k <= 8; ++k) {
            EXPECT_EQ(coefficient(e.series, {{s, k}}), coefficient(expected, {{s, k}})) << "a=" << a << " k=" << k;
        }
    }
}

TEST(Vev, TwoCoshExample) {
    const auto e = vev_expand(EProduct{{op(2, z), op(-2, w)}});
    const Var s = e.substitution->first;
    EXPECT_EQ(coefficient(e.series, {{s, 0}}), Rational(2));
    EXPECT_EQ(coefficient(e.series, {{s, 2}}), Rational(1, 4));
    EXPECT_EQ(coefficient(e.series, {{s, 4}}), Rational(1, 192));
    EXPECT_EQ(coefficient(e.series, {{s, 1}}), Rational(0));
}

TEST(Vev, VanishingRule) {
    EXPECT_TRUE(vev_symbolic({op(-2, z), op(1, w), op(1, "y")}).is_zero());
    EXPECT_TRUE(vev_symbolic({op(-1, z), op(-1, w), op(2, "y")}).is_zero());
    EXPECT_TRUE(vev_symbolic({op(0, z), op(-1, w), op(1, "y")}).is_zero());
    EXPECT_FALSE(vev_symbolic({op(1, z), op(0, w), op(-1, "y")}).is_zero());
}

TEST(Vev, ZeroEnergyProductIsVacuumEigenvalue) {
    const auto v = vev_symbolic({op(0, z), op(0, w)});
    ASSERT_EQ(v.terms().size(), 1u);
    const auto &[key, c] = *v.terms().begin();
    EXPECT_EQ(c, Rational(1));
    EXPECT_TRUE(key.numerator.empty());
    EXPECT_EQ(key.poles.size(), 2u);
}

TEST(Vev, EnergyConservation) {
    const std::vector<Var> vars = {"z1", "z2", "z3", "z4"};
    int nonzero_total = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto ops = testgen::random_product(4, 3, vars);
        int total = 0;
        for (const auto &o : ops) {
            total += o.energy;
        }
        if (total == 0) {
            // Force a violation by shifting one energy.
            ops.back().energy += testgen::uniform(0, 1) == 0 ? 1 : -1;
        }
        ++nonzero_total;
        EXPECT_TRUE(vev_symbolic(ops).is_zero());
        EXPECT_TRUE(vev_symbolic(ops, SwapPolicy::rightmost).is_zero());
    }
    EXPECT_EQ(nonzero_total, 200);
}

TEST(Vev, OrderOfEvaluationIndependence) {
    const std::vector<Var> vars = {"z1", "z2", "z3", "z4"};
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto ops = testgen::random_product(4, 3, vars);
        int total = 0;
        for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
            total += ops[i].energy;
        }
        ops.back().energy = -total;
        const auto left = vev_symbolic(ops, SwapPolicy::leftmost);
        const auto right = vev_symbolic(ops, SwapPolicy::rightmost);
        const auto den = common_denominator(left, right);
        Orders orders;
        for (const auto &v : vars) {
            orders[v] = 3;
        }
        ASSERT_EQ(vev_numerator(left, den, orders), vev_numerator(right, den, orders)) << left.to_string() << " vs "
                                                                                       << right.to_string();
        ++checked;
    }
    EXPECT_EQ(checked, 120);
}

TEST(Vev, PrefactorIsCarried) {
    EProduct p{{op(1, z), op(-1, w)}, LaurentSeries::constant(Rational(3, 2))};
    EXPECT_EQ(vev(p), LaurentSeries::constant(Rational(3, 2)));
}

TEST(Fact4, ZeroEnergyTermSitsAtHalfway) {
    for (int d = 1; d <= 4; ++d) {
        const auto terms = fact4_expansion(d, 2 * d + 2, 2);
        ASSERT_EQ(static_cast<int>(terms.size()), 2 * d + 1);
        int zero = 0;
        for (const auto &t : terms) {
            EXPECT_EQ(t.energy, 2 * t.t - 2 * d);
            if (t.energy == 0) {
                EXPECT_EQ(t.t, d);
                ++zero;
            }
        }
        EXPECT_EQ(zero, 1);
    }
}

TEST(Fact4, LeadingCoefficient) {
    const auto terms = fact4_expansion(1, 3, 2);
    const Var u("u");
    EXPECT_EQ(coefficient(terms[1].coefficient, {{u, 1}, {z, 0}}), Rational(2));
    // The pole term v = t - 1 enters at z^1.
    EXPECT_EQ(coefficient(terms[1].coefficient, {{u, 1}, {z, 1}}), Rational(1));
}

TEST(Fact4, EpsilonValues) {
    EXPECT_EQ(epsilon_fock(0, 1), Rational(1));
    EXPECT_EQ(epsilon_fock(0, 2), Rational(2));
    EXPECT_EQ(epsilon_fock(1, 2), Rational(1));
    EXPECT_EQ(epsilon_fock(1, 3), Rational(10));
    EXPECT_EQ(epsilon_fock(2, 4), Rational(21));
    EXPECT_EQ(epsilon_fock(2, 1), Rational(0));
    EXPECT_EQ(epsilon_fock(3, 3), Rational(0));
    EXPECT_THROW(epsilon_fock(0, 0), DomainError);
}
