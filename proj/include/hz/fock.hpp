#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hz/rational.hpp"
#include "hz/series.hpp"

namespace hz {

/// Truncation order used for a variable when a caller gives none.
inline constexpr int kDefaultOrder = 8;

/// Linear combination of formal variables with Rational coefficients; the
/// argument of an energy operator. Canonical: no zero coefficients.
class LinearForm {
  public:
    LinearForm() = default;
    static LinearForm of(const Var &v, const Rational &c = Rational(1));

    const std::map<Var, Rational> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Var &v) const;
    /// Exactly one variable with nonzero coefficient.
    bool is_single_variable() const noexcept { return terms_.size() == 1; }
    std::vector<std::pair<Var, Rational>> as_pairs() const { return {terms_.begin(), terms_.end()}; }

    LinearForm &operator+=(const LinearForm &o);
    LinearForm &operator*=(const Rational &c);
    friend LinearForm operator+(LinearForm a, const LinearForm &b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm &b) { return a += b * Rational(-1); }
    friend LinearForm operator*(LinearForm a, const Rational &c) { return a *= c; }

    /// "0", "z", "z1 + z2", "-w + 2*z" (variables in name order).
    std::string to_string() const;

    friend bool operator==(const LinearForm &, const LinearForm &) = default;
    friend bool operator<(const LinearForm &a, const LinearForm &b) { return a.terms_ < b.terms_; }

  private:
    std::map<Var, Rational> terms_;
};

/// Energy operator E_a(arg).
struct EOp {
    int energy = 0;
    LinearForm arg;

    /// "E(2; z1 + z2)".
    std::string to_string() const;
    friend bool operator==(const EOp &, const EOp &) = default;
    friend bool operator<(const EOp &a, const EOp &b) {
        return a.energy != b.energy ? a.energy < b.energy : a.arg < b.arg;
    }
};

/// Ordered operator product with a scalar prefactor.
struct EProduct {
    std::vector<EOp> ops;
    LaurentSeries prefactor = LaurentSeries::constant(Rational(1));

    std::string to_string() const;
};

/// Exact value of [x, y] before any series expansion: either zero, a central
/// scalar a*delta_{a+b,0} (both arguments zero), or varsigma(a*w - b*z) E_{a+b}(z + w).
struct SymbolicCommutator {
    Rational central;
    std::optional<LinearForm> varsigma_arg;
    std::optional<EOp> op;

    bool is_zero() const { return central.is_zero() && !op.has_value(); }
};

SymbolicCommutator commute(const EOp &x, const EOp &y);

/// [x, y] as a list of (scalar series, operator) pairs; the operator is absent
/// for the central term. Empty when the commutator vanishes identically. The
/// varsigma factor is expanded to the given orders (kDefaultOrder where absent).
std::vector<std::pair<LaurentSeries, std::optional<EOp>>> commutator(const EOp &x, const EOp &y,
                                                                       const Orders &orders = {});

/// Symbolic vacuum expectation: a sum of terms
///   c * prod varsigma(numerator_i) / prod varsigma(pole_j),
/// with forms sign-normalized (first coefficient positive) and equal
/// numerator/pole factors cancelled.
class VevValue {
  public:
    struct Key {
        std::vector<LinearForm> numerator;
        std::vector<LinearForm> poles;
        friend bool operator<(const Key &a, const Key &b) {
            return a.numerator != b.numerator ? a.numerator < b.numerator : a.poles < b.poles;
        }
        friend bool operator==(const Key &, const Key &) = default;
    };

    static VevValue one();

    const std::map<Key, Rational> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(Key key, const Rational &c);
    VevValue &operator+=(const VevValue &o);
    /// Multiplies by c * varsigma(form).
    VevValue times_varsigma(const LinearForm &form) const;
    VevValue times(const Rational &c) const;
    VevValue over_varsigma(const LinearForm &form) const;

    /// Distinct pole forms over all terms.
    std::vector<LinearForm> pole_forms() const;

    std::string to_string() const;

  private:
    std::map<Key, Rational> terms_;
};

/// Which out-of-order adjacent pair is swapped next during normal ordering.
enum class SwapPolicy { leftmost, rightmost };

/// Evaluates <E_{a_1}(z_1) ... E_{a_n}(z_n)> by normal ordering with the
/// commutation rule, the vanishing rule (a_1 < 0 or a_n > 0 gives 0), the
/// one-point function <E_a(z)> = delta_{a,0}/varsigma(z), and the vacuum
/// eigenvalue of a product of energy-zero operators,
/// <E_0(z_1)...E_0(z_k)> = prod 1/varsigma(z_i).
/// Throws DivergentExpectation on any 1/varsigma(0).
VevValue vev_symbolic(const std::vector<EOp> &ops, SwapPolicy policy = SwapPolicy::leftmost);

/// Coordinates in which a single-pole expectation is a Laurent series. When the
/// pole form Z involves several variables, a fresh variable stands for Z and the
/// first variable of Z is eliminated.
struct VevExpansion {
    LaurentSeries series;
    /// Present when a fresh variable was introduced: (variable, the form it stands for).
    std::optional<std::pair<Var, LinearForm>> substitution;
};

/// Laurent expansion of the expectation, exact up to `orders` (kDefaultOrder
/// where absent). Throws Error when the poles lie along several distinct forms;
/// use vev_numerator for those.
VevExpansion vev_expand(const EProduct &p, const Orders &orders = {}, SwapPolicy policy = SwapPolicy::leftmost);

/// The Laurent series of vev_expand; the scalar prefactor is included.
LaurentSeries vev(const EProduct &p, const Orders &orders = {});

/// Numerator of `value` over the common denominator prod varsigma(f) for f in
/// `denominator` (a multiset that must contain every term's poles), as a power
/// series in the original variables.
LaurentSeries vev_numerator(const VevValue &value, const std::vector<LinearForm> &denominator,
                            const Orders &orders = {});

/// varsigma(form) expanded in the variables of the form, exact on 0..orders[v].
LaurentSeries varsigma_of(const LinearForm &form, const Orders &orders);

/// One term of the expansion of the conjugated operator
///   e^{E_2(0)/2} D E_{-2d'}(0) D^{-1} e^{-E_2(0)/2}
/// = sum_t sum_v (2d')!/(t!(2d'-v)!) u^t [z^{v-t}] S(2uz)^t S(uz)^{-2d'-1} E_{2t-2d'}(uz).
/// The z-extraction is folded into `coefficient` through z^{-(v-t)}, so the
/// term contributes [z^0](coefficient * E_energy(uz)). The extraction acts on
/// the operator as well, and E_0(uz) has a simple pole in z, so v starts at
/// t - 1; that term carries genus 0.
struct Fact4Term {
    int t = 0;
    int energy = 0;
    /// sum_{v=t-1}^{2d'} (2d')!/(t!(2d'-v)!) z^{t-v} * u^t S(2uz)^t / S(uz)^{2d'+1}, in u and z.
    LaurentSeries coefficient;
};

/// Terms t = 0..2d', exact for u up to `u_order` and z up to `z_order`.
std::vector<Fact4Term> fact4_expansion(int dprime, int u_order, int z_order);

/// epsilon_g(d') = [u^{2g-1+d'} z^0] sum_t coefficient_t * <E_{2t-2d'}(uz)>,
/// with the expectation computed by vev_symbolic in a fresh variable x and then x -> uz.
Rational epsilon_fock(int genus, int dprime);

/// Parses a product such as "E(2; z1) E(-2; z1+z2)".
EProduct parse_product(std::string_view text);

} // namespace hz
