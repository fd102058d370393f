#include "hz/pipeline.hpp"

#include <algorithm>

#include "hz/errors.hpp"
#include "hz/fock.hpp"
#include "hz/gluing.hpp"
#include "hz/hurwitz.hpp"
#include "hz/series.hpp"

namespace hz {

std::string_view method_name(Method m) {
    switch (m) {
    case Method::formula:
        return "formula";
    case Method::gluing:
        return "gluing";
    case Method::hurwitz_gr:
        return "hurwitz-gr";
    case Method::hurwitz_mono:
        return "hurwitz-mono";
    case Method::fock:
        return "fock";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const Method m : kAllMethods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

void check_epsilon_domain(int genus, int dprime) {
    if (genus < 0) {
        throw DomainError("genus must be nonnegative (got " + std::to_string(genus) + ")");
    }
    if (dprime < 1) {
        throw DomainError("d' must be at least 1 (got " + std::to_string(dprime) + ")");
    }
}

namespace {

Rational two_pow(int e) {
    const Rational two(2);
    return e >= 0 ? pow(two, static_cast<unsigned>(e)) : Rational(1) / pow(two, static_cast<unsigned>(-e));
}

Integer as_nonnegative_integer(const Rational &r, const char *what) {
    if (!r.is_integer() || r.sign() < 0) {
        throw InternalError(std::string("non-integral result from ") + what + ": " + r.to_string());
    }
    return r.numerator();
}

} // namespace

Integer epsilon_formula(int genus, int dprime) {
    check_epsilon_domain(genus, dprime);
    const int tail = dprime - 2 * genus + 1;
    if (tail < 0) {
        return 0;
    }
    const int order = 2 * genus;
    const LaurentSeries series =
        pow(x_over_sinh(order, "u"), 2) * pow(x_over_tanh(order, "u"), static_cast<unsigned>(dprime));
    const Rational prefactor = Rational(double_factorial_odd(static_cast<unsigned>(dprime))) *
                               two_pow(dprime - 2 * genus) / Rational(factorial(static_cast<unsigned>(tail)));
    return as_nonnegative_integer(prefactor * coefficient(series, order), "the closed formula");
}

Rational epsilon_line2(int genus, int dprime) {
    check_epsilon_domain(genus, dprime);
    const int n = 2 * dprime;
    const int k = std::max(2 * genus, dprime) + 3;
    const Var u("u"), z("z");
    const LaurentSeries s_uz = substitute_monomial(s_series(k, "x"), Rational(1), {{u, 1}, {z, 1}});
    const LaurentSeries s_2uz = substitute_monomial(s_series(k, "x"), Rational(2), {{u, 1}, {z, 1}});
    const LaurentSeries body = pow(invert(s_uz), static_cast<unsigned>(n + 2)) *
                               pow(s_2uz, static_cast<unsigned>(dprime)) *
                               LaurentSeries::monomial(Rational(1), {{u, -1}, {z, -1}});
    const Integer nfact = factorial(static_cast<unsigned>(n));
    const Integer dfact = factorial(static_cast<unsigned>(dprime));
    Rational total(0);
    // w = 2g - 1, so genus 0 reads the z^-1 pole.
    for (int w = -1; w <= dprime; ++w) {
        const Rational weight(nfact, dfact * factorial(static_cast<unsigned>(dprime - w)));
        total += weight * coefficient(body, {{u, 2 * genus - 1}, {z, w}});
    }
    return total;
}

Rational epsilon_line3(int genus, int dprime) {
    check_epsilon_domain(genus, dprime);
    const int tail = dprime - 2 * genus + 1;
    if (tail < 0) {
        return Rational(0);
    }
    const int k = 2 * genus + 4;
    const Var u("u");
    const LaurentSeries half_diff =
        (exp_series(k, Rational(1, 2), u) - exp_series(k, Rational(-1, 2), u)).tightened();
    const LaurentSeries full_diff = (exp_series(k, Rational(1), u) - exp_series(k, Rational(-1), u)).tightened();
    const LaurentSeries inv_half = invert(half_diff);
    // (u/2)/sinh(u/2) = u / (e^{u/2} - e^{-u/2})
    const LaurentSeries first = LaurentSeries::monomial(Rational(1), {{u, 1}}) * inv_half;
    const LaurentSeries second =
        (full_diff * inv_half * inv_half * LaurentSeries::monomial(Rational(1, 2), {{u, 1}})).tightened();
    const LaurentSeries series = pow(first, 2) * pow(second, static_cast<unsigned>(dprime));
    const Rational prefactor = Rational(double_factorial_odd(static_cast<unsigned>(dprime))) * two_pow(dprime) /
                               Rational(factorial(static_cast<unsigned>(tail)));
    return prefactor * coefficient(series, 2 * genus);
}

ProoflineValues proofline_values(int genus, int dprime) {
    check_epsilon_domain(genus, dprime);
    ProoflineValues v;
    v.fock = epsilon_fock(genus, dprime);
    v.line2 = epsilon_line2(genus, dprime);
    v.line3 = epsilon_line3(genus, dprime);
    v.formula = Rational(epsilon_formula(genus, dprime));
    v.agree = v.fock == v.line2 && v.line2 == v.line3 && v.line3 == v.formula && v.formula.is_integer();
    return v;
}

bool proofline_check(int genus, int dprime) { return proofline_values(genus, dprime).agree; }

bool method_available(Method method, int dprime, const Limits &limits) {
    switch (method) {
    case Method::formula:
    case Method::fock:
        return true;
    case Method::gluing:
        return dprime <= limits.max_gluing_dprime && 2 * dprime <= kMaxDegree;
    case Method::hurwitz_gr:
    case Method::hurwitz_mono:
        return 2 * dprime <= std::min({limits.max_group_degree, limits.max_hurwitz_degree, kMaxDegree});
    }
    return false;
}

EpsilonResult epsilon_by(Method method, int genus, int dprime, const Limits &limits) {
    check_epsilon_domain(genus, dprime);
    EpsilonResult r{genus, dprime, 0, method};
    switch (method) {
    case Method::formula:
        r.value = epsilon_formula(genus, dprime);
        break;
    case Method::gluing:
        r.value = epsilon_bruteforce(dprime, limits).at(genus);
        break;
    case Method::hurwitz_gr:
        r.value = as_nonnegative_integer(
            Rational(2 * dprime) * h_grothendieck(HurwitzSpec::make(genus, dprime), limits), "hurwitz-gr");
        break;
    case Method::hurwitz_mono:
        r.value = as_nonnegative_integer(
            Rational(2 * dprime) * h_monotone(HurwitzSpec::make(genus, dprime), limits), "hurwitz-mono");
        break;
    case Method::fock:
        r.value = as_nonnegative_integer(epsilon_fock(genus, dprime), "fock");
        break;
    }
    return r;
}

std::optional<Integer> CrossValidationReport::value(int dprime, int genus, Method method) const {
    for (const auto &c : cells) {
        if (c.dprime == dprime && c.genus == genus && c.method == method) {
            return c.value;
        }
    }
    return std::nullopt;
}

CrossValidationReport cross_validate(int dprime_max, const std::vector<Method> &methods, const Limits &limits) {
    CrossValidationReport report;
    report.dprime_max = dprime_max;
    report.methods = methods;
    bool ok = true;
    for (int d = 1; d <= dprime_max; ++d) {
        std::optional<GenusHistogram> hist;
        Integer row_sum = 0;
        for (int g = 0; 2 * g <= d + 1; ++g) {
            std::optional<Integer> agreed;
            for (const Method m : methods) {
                ReportCell cell{d, g, m, std::nullopt, ""};
                if (!method_available(m, d, limits)) {
                    cell.note = "skipped: guardrail";
                    report.cells.push_back(std::move(cell));
                    continue;
                }
                try {
                    if (m == Method::gluing) {
                        if (!hist) {
                            hist = epsilon_bruteforce(d, limits);
                        }
                        cell.value = Integer(static_cast<unsigned long>(hist->at(g)));
                    } else {
                        cell.value = epsilon_by(m, g, d, limits).value;
                    }
                } catch (const std::exception &e) {
                    cell.note = std::string("error: ") + e.what();
                    report.problems.push_back("d'=" + std::to_string(d) + " g=" + std::to_string(g) + " " +
                                              std::string(method_name(m)) + ": " + e.what());
                    ok = false;
                }
                if (cell.value) {
                    if (!agreed) {
                        agreed = cell.value;
                    } else if (*agreed != *cell.value) {
                        ok = false;
                        report.problems.push_back("d'=" + std::to_string(d) + " g=" + std::to_string(g) + ": " +
                                                  std::string(method_name(m)) + " gives " +
                                                  cell.value->get_str() + ", expected " + agreed->get_str());
                    }
                }
                report.cells.push_back(std::move(cell));
            }
            if (agreed) {
                row_sum += *agreed;
            }
        }
        report.row_sums[d] = row_sum;
        if (row_sum != double_factorial_odd(static_cast<unsigned>(d))) {
            ok = false;
            report.problems.push_back("d'=" + std::to_string(d) + ": genus sum " + row_sum.get_str() +
                                      " differs from (2d'-1)!! = " +
                                      double_factorial_odd(static_cast<unsigned>(d)).get_str());
        }
    }
    report.pass = ok;
    return report;
}

} // namespace hz
