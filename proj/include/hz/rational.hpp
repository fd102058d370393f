#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hz {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class: every constructor canonicalizes,
/// and GMP arithmetic keeps results canonical, so structural equality is
/// numeric equality.
class Rational {
  public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(const Integer &v) : q_(v) {}
    Rational(const Integer &num, const Integer &den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    const mpq_class &raw() const noexcept { return q_; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

  private:
    mpq_class q_;
};

Integer factorial(unsigned n);
/// (2k-1)!! = 1*3*...*(2k-1); double_factorial_odd(0) = 1.
Integer double_factorial_odd(unsigned k);
Integer binomial(unsigned n, unsigned k);
Rational pow(const Rational &base, unsigned exponent);

} // namespace hz
