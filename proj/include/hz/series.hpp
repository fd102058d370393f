#pragma once

#include <compare>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hz/rational.hpp"

namespace hz {

/// Formal variable. Variables are totally ordered by name; every series keeps
/// its variables sorted in that order.
struct Var {
    std::string name;

    Var() = default;
    Var(std::string n) : name(std::move(n)) {}
    Var(const char *n) : name(n) {}

    friend auto operator<=>(const Var &, const Var &) = default;
    friend bool operator==(const Var &, const Var &) = default;
};

/// Sparse monomial: variable -> exponent. Absent variables have exponent 0.
using Monomial = std::map<Var, int>;

/// Per-variable truncation orders (inclusive upper ends of exact windows).
using Orders = std::map<Var, int>;

/// Truncation order of a variable that carries no truncation at all
/// (exact polynomials, or a variable the series does not depend on).
inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

/// Truncated multivariate Laurent series over Rational.
///
/// Each variable v carries a window [lower_bound(v), truncation_order(v)].
/// lower_bound is a guarantee: the true series has no terms below it.
/// truncation_order is the largest exponent up to which stored coefficients
/// are exact; any coefficient read beyond it is a WindowError. A box window
/// means: every coefficient whose exponent lies componentwise inside the box
/// is exact. Zero coefficients are never stored.
class LaurentSeries {
  public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    /// The zero constant (exact, no variables).
    LaurentSeries() = default;

    /// Zero series over `vars` with the given windows. `vars` need not be sorted.
    LaurentSeries(std::vector<Var> vars, std::vector<int> lower, std::vector<int> upper);

    static LaurentSeries constant(const Rational &c);
    /// Exact monomial c * prod v^e.
    static LaurentSeries monomial(const Rational &c, const Monomial &m);
    /// Univariate series sum_k coeffs[k] x^(lower + k), exact up to `order`.
    static LaurentSeries univariate(const Var &x, int lower, int order, const std::vector<Rational> &coeffs);

    const std::vector<Var> &vars() const noexcept { return vars_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// -1 when `v` is not a variable of this series.
    int index_of(const Var &v) const;
    int lower_bound(const Var &v) const;
    int truncation_order(const Var &v) const;

    /// Adds c to the coefficient at `e` (aligned with vars()).
    void accumulate(const Exponents &e, const Rational &c);
    void set(const Monomial &m, const Rational &c);

    /// Returns a copy whose window in each listed variable is cut down to the given order.
    LaurentSeries truncated(const Orders &orders) const;
    /// Raises each lower bound to the smallest stored exponent where that is
    /// provably safe: the stored window already covers the skipped exponents and
    /// every other variable is untruncated, so no discarded term can sit lower.
    LaurentSeries tightened() const;
    /// Re-expresses this series over a superset of its variables.
    LaurentSeries aligned(const std::vector<Var> &vars) const;

    LaurentSeries &operator+=(const LaurentSeries &o);
    LaurentSeries &operator-=(const LaurentSeries &o);
    LaurentSeries &operator*=(const LaurentSeries &o);
    LaurentSeries &operator*=(const Rational &c);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries &b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries &b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator*(LaurentSeries a, const Rational &c) { return a *= c; }
    friend LaurentSeries operator*(const Rational &c, LaurentSeries a) { return a *= c; }
    friend LaurentSeries operator-(LaurentSeries a);

    /// Coefficients agree on the intersection of both windows.
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b);

    /// Single-line rendering in graded-lexicographic order, e.g. "z^-1 - 1/24*z".
    std::string to_string() const;
    /// One "coefficient  monomial" line per term, graded-lexicographic order.
    std::vector<std::string> to_lines() const;
    /// Terms in graded-lexicographic order (total degree, then exponent vector).
    std::vector<std::pair<Exponents, Rational>> graded_terms() const;

  private:
    std::vector<Var> vars_;
    std::vector<int> lower_;
    std::vector<int> upper_;
    Terms terms_;

    bool in_window(const Exponents &e) const;
    void prune_outside_window();
    friend LaurentSeries invert(const LaurentSeries &a);
    friend LaurentSeries substitute_monomial(const LaurentSeries &a, const Rational &c, const Monomial &target,
                                             const std::optional<Orders> &target_window);
    friend LaurentSeries substitute_linear(const LaurentSeries &a, const std::vector<std::pair<Var, Rational>> &form,
                                           const Orders &orders);
};

LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries pow(const LaurentSeries &a, unsigned k);

/// Inverse of a series whose lowest part is a single monomial c*x^m (with m at
/// the lower bounds) times a unit. Throws NonInvertibleError otherwise, and
/// WindowError when the inverse would be an infinite expansion in an
/// untruncated variable.
LaurentSeries invert(const LaurentSeries &a);

/// Coefficient at `e`; zero below the lower bound, WindowError above the truncation order.
Rational coefficient(const LaurentSeries &a, const Monomial &e);
/// Univariate shorthand.
Rational coefficient(const LaurentSeries &a, int exponent);

/// Substitutes x -> c * target into a univariate series in x. Exponents of
/// `target` must be positive. With `target_window`, the image is cut to those
/// orders, and a WindowError is raised if a stored term maps below its lower end.
LaurentSeries substitute_monomial(const LaurentSeries &a, const Rational &c, const Monomial &target,
                                  const std::optional<Orders> &target_window = std::nullopt);

/// Substitutes x -> sum_i c_i v_i into a univariate power series in x,
/// producing a series exact on the box 0..orders[v_i]. The series must reach
/// order sum_i orders[v_i], otherwise WindowError.
LaurentSeries substitute_linear(const LaurentSeries &a, const std::vector<std::pair<Var, Rational>> &form,
                                const Orders &orders);

/// varsigma(x) = 2 sinh(x/2) = sum_k x^(2k+1) / (4^k (2k+1)!).
LaurentSeries varsigma_series(int order, const Var &x = "x");
/// S(x) = varsigma(x)/x.
LaurentSeries s_series(int order, const Var &x = "x");
/// cosh(x/2).
LaurentSeries cosh_half_series(int order, const Var &x = "x");
LaurentSeries x_over_sinh(int order, const Var &x = "x");
/// cosh(x) * x/sinh(x).
LaurentSeries x_over_tanh(int order, const Var &x = "x");
/// exp(scale * x).
LaurentSeries exp_series(int order, const Rational &scale = Rational(1), const Var &x = "x");

} // namespace hz
