#include "hz/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hz/errors.hpp"

namespace hz {

namespace {

int sat_add(int a, int b) {
    if (a >= kUnbounded || b >= kUnbounded) {
        return kUnbounded;
    }
    return std::min(a + b, kUnbounded);
}

std::vector<Var> union_vars(const std::vector<Var> &a, const std::vector<Var> &b) {
    std::vector<Var> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string monomial_text(const std::vector<Var> &vars, const LaurentSeries::Exponents &e) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += vars[i].name;
        if (e[i] != 1) {
            out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

} // namespace

LaurentSeries::LaurentSeries(std::vector<Var> vars, std::vector<int> lower, std::vector<int> upper) {
    if (vars.size() != lower.size() || vars.size() != upper.size()) {
        throw DomainError("series window arity mismatch");
    }
    std::vector<std::size_t> idx(vars.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0 && vars[idx[k]] == vars[idx[k - 1]]) {
            throw DomainError("duplicate variable '" + vars[idx[k]].name + "'");
        }
        if (upper[idx[k]] < lower[idx[k]]) {
            throw DomainError("truncation order below lower bound for '" + vars[idx[k]].name + "'");
        }
        vars_.push_back(vars[idx[k]]);
        lower_.push_back(lower[idx[k]]);
        upper_.push_back(upper[idx[k]]);
    }
}

LaurentSeries LaurentSeries::constant(const Rational &c) {
    LaurentSeries s;
    s.accumulate({}, c);
    return s;
}

LaurentSeries LaurentSeries::monomial(const Rational &c, const Monomial &m) {
    std::vector<Var> vars;
    std::vector<int> lo, hi;
    Exponents e;
    for (const auto &[v, k] : m) {
        vars.push_back(v);
        lo.push_back(k);
        hi.push_back(kUnbounded);
        e.push_back(k);
    }
    LaurentSeries s(vars, lo, hi);
    s.accumulate(e, c);
    return s;
}

LaurentSeries LaurentSeries::univariate(const Var &x, int lower, int order, const std::vector<Rational> &coeffs) {
    LaurentSeries s({x}, {lower}, {order});
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const int e = lower + static_cast<int>(k);
        if (e > order) {
            break;
        }
        s.accumulate({e}, coeffs[k]);
    }
    return s;
}

int LaurentSeries::index_of(const Var &v) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || !(*it == v)) {
        return -1;
    }
    return static_cast<int>(it - vars_.begin());
}

int LaurentSeries::lower_bound(const Var &v) const {
    const int i = index_of(v);
    return i < 0 ? 0 : lower_[i];
}

int LaurentSeries::truncation_order(const Var &v) const {
    const int i = index_of(v);
    return i < 0 ? kUnbounded : upper_[i];
}

bool LaurentSeries::in_window(const Exponents &e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < lower_[i] || e[i] > upper_[i]) {
            return false;
        }
    }
    return true;
}

void LaurentSeries::accumulate(const Exponents &e, const Rational &c) {
    if (e.size() != vars_.size()) {
        throw DomainError("exponent vector arity mismatch");
    }
    if (!in_window(e)) {
        throw WindowError("term " + monomial_text(vars_, e) + " outside series window");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void LaurentSeries::set(const Monomial &m, const Rational &c) {
    Exponents e(vars_.size(), 0);
    for (const auto &[v, k] : m) {
        const int i = index_of(v);
        if (i < 0) {
            throw DomainError("unknown variable '" + v.name + "'");
        }
        e[i] = k;
    }
    if (!in_window(e)) {
        throw WindowError("term " + monomial_text(vars_, e) + " outside series window");
    }
    if (c.is_zero()) {
        terms_.erase(e);
    } else {
        terms_[e] = c;
    }
}

void LaurentSeries::prune_outside_window() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = in_window(it->first) ? std::next(it) : terms_.erase(it);
    }
}

LaurentSeries LaurentSeries::truncated(const Orders &orders) const {
    LaurentSeries out = *this;
    for (const auto &[v, k] : orders) {
        const int i = index_of(v);
        if (i < 0) {
            continue;
        }
        out.upper_[i] = std::max(out.lower_[i], std::min(out.upper_[i], k));
    }
    out.prune_outside_window();
    return out;
}

LaurentSeries LaurentSeries::tightened() const {
    LaurentSeries out = *this;
    if (terms_.empty()) {
        return out;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool others_exact = true;
        for (std::size_t j = 0; j < vars_.size(); ++j) {
            others_exact = others_exact && (j == i || upper_[j] >= kUnbounded);
        }
        if (!others_exact) {
            continue;
        }
        int lowest = upper_[i];
        for (const auto &[e, c] : terms_) {
            lowest = std::min(lowest, e[i]);
        }
        out.lower_[i] = std::max(lower_[i], lowest);
    }
    return out;
}

LaurentSeries LaurentSeries::aligned(const std::vector<Var> &vars) const {
    if (vars == vars_) {
        return *this;
    }
    std::vector<int> map(vars_.size());
    std::vector<int> lo(vars.size(), 0), hi(vars.size(), kUnbounded);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end() || !(*it == vars_[i])) {
            throw DomainError("alignment target lacks variable '" + vars_[i].name + "'");
        }
        map[i] = static_cast<int>(it - vars.begin());
        lo[map[i]] = lower_[i];
        hi[map[i]] = upper_[i];
    }
    LaurentSeries out(vars, lo, hi);
    for (const auto &[e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            f[map[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &o) {
    const auto vars = union_vars(vars_, o.vars_);
    LaurentSeries a = aligned(vars);
    const LaurentSeries b = o.aligned(vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        a.lower_[i] = std::min(a.lower_[i], b.lower_[i]);
        a.upper_[i] = std::min(a.upper_[i], b.upper_[i]);
    }
    a.prune_outside_window();
    for (const auto &[e, c] : b.terms_) {
        if (a.in_window(e)) {
            a.accumulate(e, c);
        }
    }
    *this = std::move(a);
    return *this;
}

LaurentSeries operator-(LaurentSeries a) {
    for (auto &[e, c] : a.terms_) {
        c = -c;
    }
    return a;
}

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &o) { return *this += -o; }

LaurentSeries &LaurentSeries::operator*=(const Rational &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, x] : terms_) {
        x *= c;
    }
    return *this;
}

LaurentSeries &LaurentSeries::operator*=(const LaurentSeries &o) {
    *this = *this * o;
    return *this;
}

LaurentSeries operator*(const LaurentSeries &lhs, const LaurentSeries &rhs) {
    const auto vars = union_vars(lhs.vars_, rhs.vars_);
    const LaurentSeries a = lhs.aligned(vars);
    const LaurentSeries b = rhs.aligned(vars);
    std::vector<int> lo(vars.size()), hi(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        lo[i] = a.lower_[i] + b.lower_[i];
        // A discarded term of `a` sits above a.upper and can meet anything of `b`
        // from b.lower up, so nothing beyond a.upper + b.lower is exact.
        hi[i] = std::min(sat_add(a.upper_[i], b.lower_[i]), sat_add(b.upper_[i], a.lower_[i]));
    }
    LaurentSeries out(vars, lo, hi);
    LaurentSeries::Exponents e(vars.size());
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            bool inside = true;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > hi[i]) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                out.accumulate(e, ca * cb);
            }
        }
    }
    return out;
}

bool operator==(const LaurentSeries &lhs, const LaurentSeries &rhs) {
    const auto vars = union_vars(lhs.vars_, rhs.vars_);
    const LaurentSeries a = lhs.aligned(vars);
    const LaurentSeries b = rhs.aligned(vars);
    std::vector<int> hi(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        hi[i] = std::min(a.upper_[i], b.upper_[i]);
    }
    const auto inside = [&](const LaurentSeries::Exponents &e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > hi[i]) {
                return false;
            }
        }
        return true;
    };
    for (const auto &[e, c] : a.terms_) {
        if (!inside(e)) {
            continue;
        }
        const auto it = b.terms_.find(e);
        if (it == b.terms_.end() || !(it->second == c)) {
            return false;
        }
    }
    for (const auto &[e, c] : b.terms_) {
        if (inside(e) && !a.terms_.contains(e)) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<LaurentSeries::Exponents, Rational>> LaurentSeries::graded_terms() const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
        const int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        const int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        return dx != dy ? dx < dy : x.first < y.first;
    });
    return out;
}

std::string LaurentSeries::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, c] : graded_terms()) {
        const std::string mono = monomial_text(vars_, e);
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

std::vector<std::string> LaurentSeries::to_lines() const {
    std::vector<std::string> lines;
    for (const auto &[e, c] : graded_terms()) {
        const std::string mono = monomial_text(vars_, e);
        lines.push_back(c.to_string() + "  " + (mono.empty() ? "1" : mono));
    }
    return lines;
}

LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b) { return a + b; }

LaurentSeries mul(const LaurentSeries &a, const LaurentSeries &b) { return a * b; }

LaurentSeries pow(const LaurentSeries &a, unsigned k) {
    LaurentSeries result = LaurentSeries::constant(Rational(1));
    LaurentSeries base = a;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

LaurentSeries invert(const LaurentSeries &a) {
    if (a.terms_.empty()) {
        throw NonInvertibleError("non-invertible series: zero");
    }
    const std::size_t nv = a.vars_.size();
    // Leading monomial must sit exactly at the lower bounds and divide every other term.
    const LaurentSeries::Exponents &m = a.lower_;
    const auto lead = a.terms_.find(m);
    if (lead == a.terms_.end()) {
        throw NonInvertibleError("non-invertible series: lowest-order part is not a single monomial");
    }
    const Rational c = lead->second;

    std::vector<int> unit_hi(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        unit_hi[i] = a.upper_[i] >= kUnbounded ? kUnbounded : a.upper_[i] - m[i];
    }
    LaurentSeries rest(a.vars_, std::vector<int>(nv, 0), unit_hi);
    for (const auto &[e, x] : a.terms_) {
        if (e == m) {
            continue;
        }
        LaurentSeries::Exponents f(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            f[i] = e[i] - m[i];
            if (unit_hi[i] >= kUnbounded && f[i] > 0) {
                throw WindowError("cannot invert: '" + a.vars_[i].name +
                                  "' is untruncated and the inverse is an infinite expansion; truncate first");
            }
        }
        rest.accumulate(f, x / c);
    }

    // 1/(1 + r) = sum_k (-r)^k; every power raises the total degree, so the loop
    // ends once all terms leave the bounded window.
    LaurentSeries unit_inverse = LaurentSeries(a.vars_, std::vector<int>(nv, 0), unit_hi);
    unit_inverse.accumulate(LaurentSeries::Exponents(nv, 0), Rational(1));
    LaurentSeries power = unit_inverse;
    const LaurentSeries neg_rest = -rest;
    while (true) {
        power = power * neg_rest;
        if (power.is_zero()) {
            break;
        }
        unit_inverse += power;
    }

    std::vector<int> lo(nv), hi(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        lo[i] = -m[i];
        hi[i] = unit_hi[i] >= kUnbounded ? kUnbounded : unit_hi[i] - m[i];
    }
    LaurentSeries out(a.vars_, lo, hi);
    const Rational inv_c = Rational(1) / c;
    for (const auto &[e, x] : unit_inverse.terms_) {
        LaurentSeries::Exponents f(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            f[i] = e[i] - m[i];
        }
        if (out.in_window(f)) {
            out.accumulate(f, x * inv_c);
        }
    }
    return out;
}

Rational coefficient(const LaurentSeries &a, const Monomial &e) {
    LaurentSeries::Exponents f(a.vars().size(), 0);
    for (const auto &[v, k] : e) {
        const int i = a.index_of(v);
        if (i < 0) {
            if (k != 0) {
                return Rational(0);
            }
            continue;
        }
        f[i] = k;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > a.truncation_order(a.vars()[i])) {
            throw WindowError("outside truncation window: exponent " + std::to_string(f[i]) + " of '" +
                              a.vars()[i].name + "' exceeds order " +
                              std::to_string(a.truncation_order(a.vars()[i])));
        }
    }
    const auto it = a.terms().find(f);
    return it == a.terms().end() ? Rational(0) : it->second;
}

Rational coefficient(const LaurentSeries &a, int exponent) {
    if (a.vars().size() > 1) {
        throw DomainError("univariate coefficient requested from a multivariate series");
    }
    if (a.vars().empty()) {
        return exponent == 0 ? coefficient(a, Monomial{}) : Rational(0);
    }
    return coefficient(a, Monomial{{a.vars().front(), exponent}});
}

LaurentSeries substitute_monomial(const LaurentSeries &a, const Rational &c, const Monomial &target,
                                  const std::optional<Orders> &target_window) {
    if (a.vars_.size() != 1) {
        throw DomainError("substitute_monomial expects a univariate series");
    }
    if (c.is_zero()) {
        throw DomainError("substitute_monomial with zero coefficient");
    }
    std::vector<Var> vars;
    std::vector<int> mult, lo, hi;
    for (const auto &[v, k] : target) {
        if (k <= 0) {
            throw DomainError("substitute_monomial target exponents must be positive");
        }
        vars.push_back(v);
        mult.push_back(k);
        lo.push_back(a.lower_[0] * k);
        hi.push_back(a.upper_[0] >= kUnbounded ? kUnbounded : a.upper_[0] * k);
    }
    if (target_window) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (const auto it = target_window->find(vars[i]); it != target_window->end()) {
                hi[i] = std::max(lo[i], std::min(hi[i], it->second));
            }
        }
    }
    LaurentSeries out(vars, lo, hi);
    for (const auto &[e, x] : a.terms_) {
        LaurentSeries::Exponents f(vars.size());
        bool inside = true;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            f[i] = e[0] * mult[i];
            inside = inside && f[i] <= hi[i];
        }
        if (inside) {
            const Rational scale = e[0] >= 0 ? pow(c, static_cast<unsigned>(e[0]))
                                             : Rational(1) / pow(c, static_cast<unsigned>(-e[0]));
            out.accumulate(f, x * scale);
        }
    }
    if (target_window) {
        // The window may cut the image from above only; anything mapped beyond the
        // requested orders while the source was exact there means the target is too small.
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const auto it = target_window->find(vars[i]);
            if (it != target_window->end() && it->second < lo[i]) {
                throw WindowError("window overflow: image of the series starts above order " +
                                  std::to_string(it->second) + " of '" + vars[i].name + "'");
            }
        }
    }
    return out;
}

LaurentSeries substitute_linear(const LaurentSeries &a, const std::vector<std::pair<Var, Rational>> &form,
                                const Orders &orders) {
    if (a.vars_.size() > 1) {
        throw DomainError("substitute_linear expects a univariate series");
    }
    if (a.vars_.empty()) {
        return a;
    }
    if (a.lower_[0] < 0) {
        throw DomainError("substitute_linear expects a power series (no negative exponents)");
    }
    std::vector<Var> vars;
    std::vector<int> hi;
    int total = 0;
    LaurentSeries linear;
    for (const auto &[v, c] : form) {
        if (c.is_zero()) {
            continue;
        }
        const auto it = orders.find(v);
        if (it == orders.end()) {
            throw WindowError("no truncation order given for '" + v.name + "'");
        }
        vars.push_back(v);
        hi.push_back(it->second);
        total += it->second;
        linear += LaurentSeries::monomial(c, {{v, 1}});
    }
    if (vars.empty()) {
        return LaurentSeries::constant(coefficient(a, 0));
    }
    if (a.upper_[0] < total) {
        throw WindowError("window overflow: series known to order " + std::to_string(a.upper_[0]) +
                          " but the target box needs order " + std::to_string(total));
    }
    LaurentSeries box(vars, std::vector<int>(vars.size(), 0), hi);
    LaurentSeries power = box;
    power.accumulate(LaurentSeries::Exponents(power.vars().size(), 0), Rational(1));
    LaurentSeries out = box;
    for (int k = 0; k <= total; ++k) {
        if (k > 0) {
            power = power * linear;
        }
        const Rational ak = coefficient(a, k);
        if (!ak.is_zero()) {
            out += power * ak;
        }
    }
    return out;
}

LaurentSeries varsigma_series(int order, const Var &x) {
    if (order < 0) {
        throw DomainError("negative series order");
    }
    LaurentSeries s({x}, {std::min(1, order)}, {order});
    for (int j = 1; j <= order; j += 2) {
        s.accumulate({j}, Rational(Integer(1), factorial(j) * (Integer(1) << (j - 1))));
    }
    return s;
}

LaurentSeries s_series(int order, const Var &x) {
    if (order < 0) {
        throw DomainError("negative series order");
    }
    LaurentSeries s({x}, {0}, {order});
    for (int j = 0; j <= order; j += 2) {
        s.accumulate({j}, Rational(Integer(1), factorial(j + 1) * (Integer(1) << j)));
    }
    return s;
}

LaurentSeries cosh_half_series(int order, const Var &x) {
    if (order < 0) {
        throw DomainError("negative series order");
    }
    LaurentSeries s({x}, {0}, {order});
    for (int j = 0; j <= order; j += 2) {
        s.accumulate({j}, Rational(Integer(1), factorial(j) * (Integer(1) << j)));
    }
    return s;
}

namespace {

LaurentSeries even_factorial_series(int order, const Var &x, int shift) {
    LaurentSeries s({x}, {0}, {order});
    for (int j = 0; j <= order; j += 2) {
        s.accumulate({j}, Rational(Integer(1), factorial(j + shift)));
    }
    return s;
}

} // namespace

LaurentSeries x_over_sinh(int order, const Var &x) {
    if (order < 0) {
        throw DomainError("negative series order");
    }
    return invert(even_factorial_series(order, x, 1));
}

LaurentSeries x_over_tanh(int order, const Var &x) {
    if (order < 0) {
        throw DomainError("negative series order");
    }
    return even_factorial_series(order, x, 0) * x_over_sinh(order, x);
}

LaurentSeries exp_series(int order, const Rational &scale, const Var &x) {
    if (order < 0) {
        throw DomainError("negative series order");
    }
    LaurentSeries s({x}, {0}, {order});
    Rational p(1);
    for (int j = 0; j <= order; ++j) {
        s.accumulate({j}, p / Rational(factorial(j)));
        p *= scale;
    }
    return s;
}

} // namespace hz
