#include "hz/fock.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hz/errors.hpp"

namespace hz {

// ---------------------------------------------------------------- LinearForm

LinearForm LinearForm::of(const Var &v, const Rational &c) {
    LinearForm f;
    if (!c.is_zero()) {
        f.terms_.emplace(v, c);
    }
    return f;
}

Rational LinearForm::coefficient(const Var &v) const {
    const auto it = terms_.find(v);
    return it == terms_.end() ? Rational(0) : it->second;
}

LinearForm &LinearForm::operator+=(const LinearForm &o) {
    for (const auto &[v, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(v, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LinearForm &LinearForm::operator*=(const Rational &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[v, x] : terms_) {
        x *= c;
    }
    return *this;
}

std::string LinearForm::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[v, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        out += mag == Rational(1) ? v.name : mag.to_string() + "*" + v.name;
    }
    return out;
}

std::string EOp::to_string() const { return "E(" + std::to_string(energy) + "; " + arg.to_string() + ")"; }

std::string EProduct::to_string() const {
    std::string out;
    for (const auto &op : ops) {
        out += (out.empty() ? "" : " ") + op.to_string();
    }
    return out;
}

// ---------------------------------------------------------------- commutator

SymbolicCommutator commute(const EOp &x, const EOp &y) {
    SymbolicCommutator out;
    if (x.arg.is_zero() && y.arg.is_zero()) {
        if (x.energy + y.energy == 0) {
            out.central = Rational(x.energy);
        }
        return out;
    }
    // varsigma(a*w - b*z) E_{a+b}(z + w)
    const LinearForm arg = y.arg * Rational(x.energy) - x.arg * Rational(y.energy);
    if (arg.is_zero()) {
        return out;
    }
    out.varsigma_arg = arg;
    out.op = EOp{x.energy + y.energy, x.arg + y.arg};
    return out;
}

namespace {

int order_of(const Orders &orders, const Var &v) {
    const auto it = orders.find(v);
    return it == orders.end() ? kDefaultOrder : it->second;
}

Orders complete_orders(const LinearForm &form, const Orders &orders) {
    Orders out;
    for (const auto &[v, c] : form.terms()) {
        out[v] = order_of(orders, v);
    }
    return out;
}

} // namespace

LaurentSeries varsigma_of(const LinearForm &form, const Orders &orders) {
    if (form.is_zero()) {
        return LaurentSeries();
    }
    const Orders full = complete_orders(form, orders);
    if (form.is_single_variable()) {
        const auto &[v, c] = *form.terms().begin();
        return substitute_monomial(varsigma_series(full.at(v), "x"), c, {{v, 1}});
    }
    const int total = std::accumulate(full.begin(), full.end(), 0, [](int s, const auto &kv) { return s + kv.second; });
    return substitute_linear(varsigma_series(total, "x"), form.as_pairs(), full);
}

std::vector<std::pair<LaurentSeries, std::optional<EOp>>> commutator(const EOp &x, const EOp &y,
                                                                       const Orders &orders) {
    const SymbolicCommutator c = commute(x, y);
    std::vector<std::pair<LaurentSeries, std::optional<EOp>>> out;
    if (!c.central.is_zero()) {
        out.emplace_back(LaurentSeries::constant(c.central), std::nullopt);
    } else if (c.op) {
        out.emplace_back(varsigma_of(*c.varsigma_arg, orders), c.op);
    }
    return out;
}

// ---------------------------------------------------------------- VevValue

namespace {

// varsigma is odd: varsigma(-f) = -varsigma(f). Returns the form with a positive
// leading coefficient and the sign pulled out.
std::pair<LinearForm, int> normalize(const LinearForm &f) {
    if (!f.is_zero() && f.terms().begin()->second.sign() < 0) {
        return {f * Rational(-1), -1};
    }
    return {f, 1};
}

void cancel_common(std::vector<LinearForm> &num, std::vector<LinearForm> &poles) {
    std::sort(num.begin(), num.end());
    std::sort(poles.begin(), poles.end());
    std::vector<LinearForm> n2, p2;
    std::size_t i = 0, j = 0;
    while (i < num.size() || j < poles.size()) {
        if (j == poles.size() || (i < num.size() && num[i] < poles[j])) {
            n2.push_back(num[i++]);
        } else if (i == num.size() || poles[j] < num[i]) {
            p2.push_back(poles[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    num = std::move(n2);
    poles = std::move(p2);
}

} // namespace

VevValue VevValue::one() {
    VevValue v;
    v.add({}, Rational(1));
    return v;
}

void VevValue::add(Key key, const Rational &c) {
    if (c.is_zero()) {
        return;
    }
    cancel_common(key.numerator, key.poles);
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

VevValue &VevValue::operator+=(const VevValue &o) {
    for (const auto &[k, c] : o.terms_) {
        add(k, c);
    }
    return *this;
}

VevValue VevValue::times(const Rational &c) const {
    VevValue out;
    for (const auto &[k, x] : terms_) {
        out.add(k, x * c);
    }
    return out;
}

VevValue VevValue::times_varsigma(const LinearForm &form) const {
    VevValue out;
    if (form.is_zero()) {
        return out;
    }
    const auto [f, sign] = normalize(form);
    for (const auto &[k, x] : terms_) {
        Key key = k;
        key.numerator.push_back(f);
        out.add(std::move(key), x * Rational(sign));
    }
    return out;
}

VevValue VevValue::over_varsigma(const LinearForm &form) const {
    if (form.is_zero()) {
        throw DivergentExpectation("divergent expectation: <E_0(0)> = 1/varsigma(0)");
    }
    VevValue out;
    const auto [f, sign] = normalize(form);
    for (const auto &[k, x] : terms_) {
        Key key = k;
        key.poles.push_back(f);
        out.add(std::move(key), x * Rational(sign));
    }
    return out;
}

std::vector<LinearForm> VevValue::pole_forms() const {
    std::set<LinearForm> forms;
    for (const auto &[k, c] : terms_) {
        forms.insert(k.poles.begin(), k.poles.end());
    }
    return {forms.begin(), forms.end()};
}

std::string VevValue::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[k, c] : terms_) {
        std::string term = c.to_string();
        for (const auto &f : k.numerator) {
            term += " * vs(" + f.to_string() + ")";
        }
        for (const auto &f : k.poles) {
            term += " / vs(" + f.to_string() + ")";
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

// ---------------------------------------------------------------- expectation

namespace {

class Evaluator {
  public:
    explicit Evaluator(SwapPolicy policy) : policy_(policy) {}

    VevValue eval(const std::vector<EOp> &ops) {
        if (const auto it = memo_.find(ops); it != memo_.end()) {
            return it->second;
        }
        VevValue v = compute(ops);
        memo_.emplace(ops, v);
        return v;
    }

  private:
    VevValue compute(const std::vector<EOp> &ops) {
        if (ops.empty()) {
            return VevValue::one();
        }
        int total = 0;
        for (const auto &op : ops) {
            total += op.energy;
        }
        if (total != 0) {
            return {};
        }
        if (ops.size() == 1) {
            return VevValue::one().over_varsigma(ops.front().arg);
        }
        if (ops.front().energy < 0 || ops.back().energy > 0) {
            return {};
        }
        if (std::all_of(ops.begin(), ops.end(), [](const EOp &op) { return op.energy == 0; })) {
            // The vacuum is an eigenvector of every E_0(z) with eigenvalue 1/varsigma(z).
            VevValue v = VevValue::one();
            for (const auto &op : ops) {
                v = v.over_varsigma(op.arg);
            }
            return v;
        }
        const std::size_t i = pick_descent(ops);
        std::vector<EOp> swapped = ops;
        std::swap(swapped[i], swapped[i + 1]);
        VevValue result = eval(swapped);

        const SymbolicCommutator c = commute(ops[i], ops[i + 1]);
        if (!c.central.is_zero()) {
            std::vector<EOp> reduced = ops;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i),
                          reduced.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            result += eval(reduced).times(c.central);
        } else if (c.op) {
            std::vector<EOp> reduced = ops;
            reduced[i] = *c.op;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            result += eval(reduced).times_varsigma(*c.varsigma_arg);
        }
        return result;
    }

    // An adjacent pair with energy[i] > energy[i+1] exists whenever the product is
    // not already killed by the end rules and not all energies are zero.
    std::size_t pick_descent(const std::vector<EOp> &ops) const {
        if (policy_ == SwapPolicy::leftmost) {
            for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
                if (ops[i].energy > ops[i + 1].energy) {
                    return i;
                }
            }
        } else {
            for (std::size_t i = ops.size() - 1; i-- > 0;) {
                if (ops[i].energy > ops[i + 1].energy) {
                    return i;
                }
            }
        }
        throw InternalError("normal ordering found no descent");
    }

    SwapPolicy policy_;
    std::map<std::vector<EOp>, VevValue> memo_;
};

// Rewrites a form in coordinates where `fresh` = pole and `pivot` is eliminated.
LinearForm rewrite(const LinearForm &f, const LinearForm &pole, const Var &pivot, const Var &fresh) {
    const Rational a = f.coefficient(pivot);
    if (a.is_zero()) {
        return f;
    }
    const Rational cp = pole.coefficient(pivot);
    const Rational ratio = a / cp;
    LinearForm out = LinearForm::of(fresh, ratio);
    for (const auto &[v, c] : f.terms()) {
        if (!(v == pivot)) {
            out += LinearForm::of(v, c);
        }
    }
    for (const auto &[v, c] : pole.terms()) {
        if (!(v == pivot)) {
            out += LinearForm::of(v, -(ratio * c));
        }
    }
    return out;
}

LaurentSeries inverse_varsigma_single(const LinearForm &form, int order) {
    const auto &[v, c] = *form.terms().begin();
    // invert() loses two orders: one for the x^-1 shift and one for the unit's window.
    return invert(substitute_monomial(varsigma_series(order + 2, "x"), c, {{v, 1}}));
}

Orders bumped(const Orders &orders, int by) {
    Orders out = orders;
    for (auto &[v, k] : out) {
        k += by;
    }
    return out;
}

LaurentSeries expand_term(const VevValue::Key &key, const Rational &c, const Orders &orders) {
    const int poles = static_cast<int>(key.poles.size());
    const Orders inner = bumped(orders, poles);
    LaurentSeries term = LaurentSeries::constant(c);
    for (const auto &f : key.numerator) {
        term = term * varsigma_of(f, inner);
    }
    for (const auto &f : key.poles) {
        if (!f.is_single_variable()) {
            throw InternalError("pole along a multi-variable form survived the change of coordinates");
        }
        term = term * inverse_varsigma_single(f, inner.at(f.terms().begin()->first));
    }
    return term.truncated(orders);
}

void collect_vars(const LinearForm &f, std::set<Var> &vars) {
    for (const auto &[v, c] : f.terms()) {
        vars.insert(v);
    }
}

} // namespace

VevValue vev_symbolic(const std::vector<EOp> &ops, SwapPolicy policy) { return Evaluator(policy).eval(ops); }

VevExpansion vev_expand(const EProduct &p, const Orders &orders, SwapPolicy policy) {
    const VevValue value = vev_symbolic(p.ops, policy);
    VevExpansion out;
    if (value.is_zero()) {
        out.series = LaurentSeries() * p.prefactor;
        return out;
    }
    const auto poles = value.pole_forms();
    if (poles.size() > 1) {
        throw Error("expectation has poles along " + std::to_string(poles.size()) +
                    " distinct linear forms and is not a single Laurent series; use the common-numerator form");
    }

    std::set<Var> used;
    for (const auto &op : p.ops) {
        collect_vars(op.arg, used);
    }
    for (const auto &v : p.prefactor.vars()) {
        used.insert(v);
    }

    VevValue coords = value;
    Orders full = orders;
    if (poles.size() == 1 && !poles.front().is_single_variable()) {
        const LinearForm &pole = poles.front();
        const Var pivot = pole.terms().begin()->first;
        if (p.prefactor.index_of(pivot) >= 0) {
            throw Error("prefactor depends on '" + pivot.name + "', which the change of coordinates eliminates");
        }
        Var fresh("s");
        for (int i = 1; used.contains(fresh); ++i) {
            fresh = Var("s" + std::to_string(i));
        }
        int fresh_order = 0;
        for (const auto &[v, c] : pole.terms()) {
            fresh_order = std::max(fresh_order, order_of(orders, v));
        }
        if (const auto it = orders.find(fresh); it != orders.end()) {
            fresh_order = it->second;
        }
        full[fresh] = fresh_order;
        VevValue rewritten;
        for (const auto &[k, c] : value.terms()) {
            VevValue::Key key;
            for (const auto &f : k.numerator) {
                key.numerator.push_back(normalize(rewrite(f, pole, pivot, fresh)).first);
            }
            Rational sign(1);
            for (const auto &f : k.numerator) {
                sign *= Rational(normalize(rewrite(f, pole, pivot, fresh)).second);
            }
            for (const auto &f : k.poles) {
                key.poles.push_back(rewrite(f, pole, pivot, fresh));
            }
            rewritten.add(std::move(key), c * sign);
        }
        coords = std::move(rewritten);
        out.substitution = std::make_pair(fresh, pole);
    }

    std::set<Var> vars;
    for (const auto &[k, c] : coords.terms()) {
        for (const auto &f : k.numerator) {
            collect_vars(f, vars);
        }
        for (const auto &f : k.poles) {
            collect_vars(f, vars);
        }
    }
    for (const auto &v : vars) {
        full[v] = order_of(full, v);
    }
    LaurentSeries sum;
    bool first = true;
    for (const auto &[k, c] : coords.terms()) {
        LaurentSeries t = expand_term(k, c, full);
        sum = first ? t : sum + t;
        first = false;
    }
    out.series = (sum * p.prefactor).truncated(full);
    return out;
}

LaurentSeries vev(const EProduct &p, const Orders &orders) { return vev_expand(p, orders).series; }

LaurentSeries vev_numerator(const VevValue &value, const std::vector<LinearForm> &denominator, const Orders &orders) {
    std::vector<LinearForm> denom;
    for (const auto &f : denominator) {
        denom.push_back(normalize(f).first);
    }
    std::sort(denom.begin(), denom.end());
    std::set<Var> vars;
    for (const auto &f : denom) {
        collect_vars(f, vars);
    }
    for (const auto &[k, c] : value.terms()) {
        for (const auto &f : k.numerator) {
            collect_vars(f, vars);
        }
    }
    Orders full = orders;
    for (const auto &v : vars) {
        full[v] = order_of(orders, v);
    }
    LaurentSeries sum;
    bool first = true;
    for (const auto &[k, c] : value.terms()) {
        std::vector<LinearForm> rest;
        std::vector<LinearForm> poles = k.poles;
        std::sort(poles.begin(), poles.end());
        if (!std::includes(denom.begin(), denom.end(), poles.begin(), poles.end())) {
            throw DomainError("common denominator does not cover every pole");
        }
        std::set_difference(denom.begin(), denom.end(), poles.begin(), poles.end(), std::back_inserter(rest));
        LaurentSeries t = LaurentSeries::constant(c);
        for (const auto &f : k.numerator) {
            t = t * varsigma_of(f, full);
        }
        for (const auto &f : rest) {
            t = t * varsigma_of(f, full);
        }
        sum = first ? t : sum + t;
        first = false;
    }
    return sum.truncated(full);
}

// ---------------------------------------------------------------- pipeline pieces

std::vector<Fact4Term> fact4_expansion(int dprime, int u_order, int z_order) {
    if (dprime < 1) {
        throw DomainError("d' must be at least 1");
    }
    const int n = 2 * dprime;
    const int k = std::max(u_order, z_order + n);
    const Var u("u"), z("z");
    const LaurentSeries s_uz = substitute_monomial(s_series(k, "x"), Rational(1), {{u, 1}, {z, 1}});
    const LaurentSeries s_2uz = substitute_monomial(s_series(k, "x"), Rational(2), {{u, 1}, {z, 1}});
    const LaurentSeries inv_pow = pow(invert(s_uz), static_cast<unsigned>(n + 1));
    const Integer nfact = factorial(static_cast<unsigned>(n));

    std::vector<Fact4Term> out;
    for (int t = 0; t <= n; ++t) {
        LaurentSeries extraction;
        // E_0(uz) carries a (uz)^-1 pole, so the z-extraction reaches z^-1.
        for (int v = t - 1; v <= n; ++v) {
            const Rational w(nfact, factorial(static_cast<unsigned>(t)) * factorial(static_cast<unsigned>(n - v)));
            extraction += LaurentSeries::monomial(w, {{z, t - v}});
        }
        LaurentSeries coeff = LaurentSeries::monomial(Rational(1), {{u, t}}) * pow(s_2uz, static_cast<unsigned>(t)) *
                              inv_pow * extraction;
        out.push_back(Fact4Term{t, 2 * t - n, coeff.truncated({{u, u_order}, {z, z_order}})});
    }
    return out;
}

Rational epsilon_fock(int genus, int dprime) {
    if (genus < 0) {
        throw DomainError("genus must be nonnegative");
    }
    if (dprime < 1) {
        throw DomainError("d' must be at least 1");
    }
    const int target = 2 * genus - 1 + dprime;
    const int n = 2 * dprime;
    const Var x("x"), u("u"), z("z");
    const auto terms = fact4_expansion(dprime, target + 2, 2);
    Rational total(0);
    for (const auto &term : terms) {
        const VevExpansion e = vev_expand(EProduct{{EOp{term.energy, LinearForm::of(x)}}}, {{x, target + n + 2}});
        if (e.series.is_zero()) {
            continue;
        }
        const LaurentSeries at_uz = substitute_monomial(e.series, Rational(1), {{u, 1}, {z, 1}});
        total += coefficient(term.coefficient * at_uz, {{u, target}, {z, 0}});
    }
    return total;
}

// ---------------------------------------------------------------- parser

namespace {

class ProductParser {
  public:
    explicit ProductParser(std::string_view text) : text_(text) {}

    EProduct parse() {
        EProduct p;
        skip_ws();
        if (at_end()) {
            fail("'E'");
        }
        while (!at_end()) {
            p.ops.push_back(term());
            skip_ws();
        }
        return p;
    }

  private:
    EOp term() {
        expect('E', "'E'");
        skip_ws();
        expect('(', "'('");
        skip_ws();
        EOp op;
        op.energy = signed_integer();
        skip_ws();
        expect(';', "';'");
        skip_ws();
        op.arg = linear_form();
        skip_ws();
        expect(')', "')' or '+'/'-'");
        return op;
    }

    int signed_integer() {
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        if (!is_digit(peek())) {
            fail("integer");
        }
        long v = 0;
        while (is_digit(peek())) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1000000) {
                fail("integer of moderate size");
            }
        }
        return static_cast<int>(sign * v);
    }

    LinearForm linear_form() {
        LinearForm f;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        f += atom() * Rational(sign);
        while (true) {
            skip_ws();
            if (peek() != '+' && peek() != '-') {
                break;
            }
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            f += atom() * Rational(sign);
        }
        return f;
    }

    // [digits ['*']] identifier, or the bare constant 0.
    LinearForm atom() {
        long coeff = 1;
        bool has_number = false;
        if (is_digit(peek())) {
            has_number = true;
            coeff = 0;
            while (is_digit(peek())) {
                coeff = coeff * 10 + (text_[pos_++] - '0');
                if (coeff > 1000000) {
                    fail("coefficient of moderate size");
                }
            }
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (!is_ident_start(peek())) {
                if (coeff == 0) {
                    return {};
                }
                fail("identifier");
            }
        }
        if (!is_ident_start(peek())) {
            fail(has_number ? "identifier" : "identifier or 0");
        }
        const std::size_t start = pos_;
        while (is_ident_char(peek())) {
            ++pos_;
        }
        return LinearForm::of(Var(std::string(text_.substr(start, pos_ - start))), Rational(coeff));
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) {
            ++pos_;
        }
    }

    void expect(char c, const char *what) {
        if (peek() != c) {
            fail(what);
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string &expected) const {
        const std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
        throw ParseError(pos_, expected, found);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

EProduct parse_product(std::string_view text) { return ProductParser(text).parse(); }

} // namespace hz
