#pragma once

#include <hz/fock.hpp>
#include <hz/permutation.hpp>
#include <hz/rational.hpp>
#include <hz/series.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace hz::testgen {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 engine(0x5eed2024ULL);
    return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small rational p/q with |p| <= 9, 1 <= q <= 6.
inline Rational small_rational(bool nonzero = false) {
    for (;;) {
        Rational r(uniform(-9, 9), uniform(1, 6));
        if (!nonzero || !r.is_zero()) {
            return r;
        }
    }
}

/// Univariate power series in x, exact to `order`, with a sparse random support.
inline LaurentSeries power_series(int order, const Var &x = "x", bool unit = false) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto &r : c) {
        r = uniform(0, 2) == 0 ? Rational(0) : small_rational();
    }
    if (unit) {
        c[0] = small_rational(true);
    }
    return LaurentSeries::univariate(x, 0, order, c);
}

/// Bivariate power series in x, y on the box 0..ox, 0..oy.
inline LaurentSeries bivariate(int ox, int oy, bool unit = false) {
    LaurentSeries s({"x", "y"}, {0, 0}, {ox, oy});
    for (int i = 0; i <= ox; ++i) {
        for (int j = 0; j <= oy; ++j) {
            if (uniform(0, 2) != 0) {
                s.accumulate({i, j}, small_rational());
            }
        }
    }
    if (unit) {
        s.set({}, small_rational(true));
    }
    return s;
}

inline Permutation random_permutation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng());
    return Permutation::from_one_line(v);
}

inline std::vector<EOp> random_product(int max_ops, int max_energy, const std::vector<Var> &vars) {
    std::vector<EOp> ops(static_cast<std::size_t>(uniform(1, max_ops)));
    for (std::size_t i = 0; i < ops.size(); ++i) {
        ops[i].energy = uniform(-max_energy, max_energy);
        ops[i].arg = LinearForm::of(vars[i % vars.size()]);
    }
    return ops;
}

} // namespace hz::testgen
