#include "hz/rational.hpp"

#include "hz/errors.hpp"

namespace hz {

Rational::Rational(const Integer &num, const Integer &den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw DomainError("not a rational number: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
    return Rational(q);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer double_factorial_odd(unsigned k) {
    Integer r = 1;
    for (unsigned i = 1; i < 2 * k; i += 2) {
        r *= i;
    }
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational pow(const Rational &base, unsigned exponent) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) {
        r *= base;
    }
    return r;
}

} // namespace hz
