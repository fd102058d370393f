#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hz/limits.hpp"
#include "hz/rational.hpp"

namespace hz {

/// Independent routes to epsilon_g(d').
enum class Method { formula, gluing, hurwitz_gr, hurwitz_mono, fock };

inline constexpr Method kAllMethods[] = {Method::formula, Method::gluing, Method::hurwitz_gr, Method::hurwitz_mono,
                                         Method::fock};

/// "formula", "gluing", "hurwitz-gr", "hurwitz-mono", "fock".
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct EpsilonResult {
    int genus = 0;
    int dprime = 0;
    Integer value;
    Method method = Method::formula;
};

/// Rejects negative genus and d' < 1 with DomainError.
void check_epsilon_domain(int genus, int dprime);

/// Closed formula:
///   (2d'-1)!! 2^{d'-2g} / (d'-2g+1)! [u^{2g}] (u/sinh u)^2 (u/tanh u)^{d'},
/// zero when d' - 2g + 1 < 0. Throws InternalError if the value is not a
/// nonnegative integer.
Integer epsilon_formula(int genus, int dprime);

/// Second displayed form of the evaluation:
///   [u^{2g-1}] sum_{w=-1}^{d'} (2d')!/(d'!(d'-w)!) [z^w] S(uz)^{-2d'-1} S(2uz)^{d'} (uz)^{-1}/S(uz).
Rational epsilon_line2(int genus, int dprime);

/// Half-angle form, built from exponential series:
///   (2d'-1)!! 2^{d'}/(d'-2g+1)! [u^{2g}] ((u/2)/sinh(u/2))^2
///   ((e^u - e^{-u}) / (e^{u/2} - e^{-u/2})^2 * u/2)^{d'}.
Rational epsilon_line3(int genus, int dprime);

struct ProoflineValues {
    Rational fock;
    Rational line2;
    Rational line3;
    Rational formula;
    bool agree = false;
};

ProoflineValues proofline_values(int genus, int dprime);
/// Every displayed form of the evaluation gives the same integer.
bool proofline_check(int genus, int dprime);

/// epsilon_g(d') by one method. Hurwitz methods report 2d' * h.
/// Throws GuardrailError when the method's guardrail excludes (g, d').
EpsilonResult epsilon_by(Method method, int genus, int dprime, const Limits &limits = {});

/// Whether `method` can run at d' under `limits`.
bool method_available(Method method, int dprime, const Limits &limits);

struct ReportCell {
    int dprime = 0;
    int genus = 0;
    Method method = Method::formula;
    std::optional<Integer> value;
    /// "skipped: ..." or "error: ..." when value is empty.
    std::string note;
};

struct CrossValidationReport {
    int dprime_max = 0;
    std::vector<Method> methods;
    /// Ordered by (d', g, method).
    std::vector<ReportCell> cells;
    /// Genus sum of the agreed values per d'.
    std::map<int, Integer> row_sums;
    std::vector<std::string> problems;
    bool pass = false;

    std::optional<Integer> value(int dprime, int genus, Method method) const;
};

/// Evaluates every method on every (g, d') with d' <= dprime_max and 2g <= d' + 1.
/// Passes iff all computed values agree and each genus sum equals (2d'-1)!!.
CrossValidationReport cross_validate(int dprime_max, const std::vector<Method> &methods = {std::begin(kAllMethods),
                                                                                           std::end(kAllMethods)},
                                     const Limits &limits = {});

} // namespace hz
