#include "hz/symgroup.hpp"

#include <algorithm>

#include "hz/errors.hpp"

namespace hz {

void check_group_degree(int n, const Limits &limits) {
    if (n < 1) {
        throw DomainError("symmetric group degree must be positive");
    }
    if (n > limits.max_group_degree || n > kMaxDegree) {
        throw GuardrailError("S_" + std::to_string(n) + " exceeds the group-algebra guardrail n <= " +
                             std::to_string(std::min(limits.max_group_degree, kMaxDegree)));
    }
}

AlgebraElement AlgebraElement::identity(int n) { return of(Permutation::identity(n)); }

AlgebraElement AlgebraElement::of(const Permutation &p, const Rational &c) {
    AlgebraElement a(p.degree());
    a.add(p, c);
    return a;
}

Rational AlgebraElement::coefficient(const Permutation &p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const Permutation &p, const Rational &c) {
    if (p.degree() != n_) {
        throw DomainError("algebra element: degree mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

std::vector<std::pair<Permutation, Rational>> AlgebraElement::sorted_terms() const {
    std::vector<std::pair<Permutation, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

std::map<Partition, std::size_t> AlgebraElement::terms_by_class() const {
    std::map<Partition, std::size_t> out;
    for (const auto &[p, c] : terms_) {
        ++out[p.cycle_type()];
    }
    return out;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o) {
    if (o.n_ != n_) {
        throw DomainError("algebra element: degree mismatch");
    }
    for (const auto &[p, c] : o.terms_) {
        add(p, c);
    }
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[p, x] : terms_) {
        x *= c;
    }
    return *this;
}

Partition cycle_type(const Permutation &p) { return p.cycle_type(); }

Integer class_size(const Partition &mu) {
    std::map<int, unsigned> mult;
    for (const int part : mu.parts()) {
        ++mult[part];
    }
    Integer denom = 1;
    for (const auto &[j, m] : mult) {
        Integer jm;
        mpz_ui_pow_ui(jm.get_mpz_t(), static_cast<unsigned long>(j), m);
        denom *= jm * factorial(m);
    }
    return factorial(static_cast<unsigned>(mu.size())) / denom;
}

AlgebraElement class_sum(const Partition &mu, const Limits &limits) {
    const int n = mu.size();
    check_group_degree(n, limits);
    AlgebraElement out(n);
    for_each_permutation(n, [&](const Permutation &p) {
        if (p.cycle_count() == mu.length() && p.cycle_type() == mu) {
            out.add(p, Rational(1));
        }
    });
    return out;
}

AlgebraElement class_sums_of_length(int n, int length, const Limits &limits) {
    check_group_degree(n, limits);
    AlgebraElement out(n);
    if (length < 1 || length > n) {
        return out;
    }
    for_each_permutation(n, [&](const Permutation &p) {
        if (p.cycle_count() == length) {
            out.add(p, Rational(1));
        }
    });
    return out;
}

AlgebraElement jm(int k, int n) {
    if (n < 2 || n > kMaxDegree || k < 2 || k > n) {
        throw DomainError("jm(k, n) needs 2 <= k <= n <= " + std::to_string(kMaxDegree));
    }
    AlgebraElement out(n);
    for (int i = 1; i < k; ++i) {
        out.add(Permutation::transposition(n, i, k), Rational(1));
    }
    return out;
}

std::vector<AlgebraElement> esym_jm_all(int n, const Limits &limits) {
    check_group_degree(n, limits);
    std::vector<AlgebraElement> e(static_cast<std::size_t>(n), AlgebraElement(n));
    e[0] = AlgebraElement::identity(n);
    for (int m = 2; m <= n; ++m) {
        const AlgebraElement j = jm(m, n);
        // Descending k so e[k-1] still holds the previous stage when read.
        for (int k = m - 1; k >= 1; --k) {
            e[k] += alg_mul(e[k - 1], j);
        }
    }
    return e;
}

AlgebraElement esym_jm(int k, int n, const Limits &limits) {
    check_group_degree(n, limits);
    if (k < 0 || k > n - 1) {
        throw DomainError("esym_jm needs 0 <= k <= n-1");
    }
    return esym_jm_all(n, limits)[static_cast<std::size_t>(k)];
}

AlgebraElement alg_mul(const AlgebraElement &a, const AlgebraElement &b) {
    if (a.degree() != b.degree()) {
        throw DomainError("alg_mul: degree mismatch");
    }
    const int n = a.degree();
    AlgebraElement out(n);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    std::vector<Permutation::Lanes> rhs;
    std::vector<Rational> rhs_coeff;
    rhs.reserve(b.size());
    rhs_coeff.reserve(b.size());
    for (const auto &[p, c] : b.terms()) {
        rhs.push_back(p.lanes());
        rhs_coeff.push_back(c);
    }
    std::vector<Permutation::Lanes> products(rhs.size());
    const auto &k = kernels::active();
    for (const auto &[p, c] : a.terms()) {
        k.compose_left_batch(p.data(), rhs.front().data(), products.front().data(), rhs.size());
        const bool unit = c == Rational(1);
        for (std::size_t j = 0; j < products.size(); ++j) {
            out.add(Permutation::from_lanes(n, products[j]), unit ? rhs_coeff[j] : c * rhs_coeff[j]);
        }
    }
    return out;
}

Rational coeff_identity(const AlgebraElement &a) { return a.coefficient(Permutation::identity(a.degree())); }

Rational coeff_identity_of_product(const AlgebraElement &x, const AlgebraElement &b) {
    if (x.degree() != b.degree()) {
        throw DomainError("coeff_identity_of_product: degree mismatch");
    }
    Rational sum(0);
    for (const auto &[h, c] : b.terms()) {
        const Rational xc = x.coefficient(h.inverse());
        if (!xc.is_zero()) {
            sum += c * xc;
        }
    }
    return sum;
}

std::vector<JucysReport> jucys_report(int n, const Limits &limits) {
    check_group_degree(n, limits);
    const auto e = esym_jm_all(n, limits);
    std::vector<AlgebraElement> by_length(static_cast<std::size_t>(n) + 1, AlgebraElement(n));
    for_each_permutation(n, [&](const Permutation &p) { by_length[p.cycle_count()].add(p, Rational(1)); });
    std::vector<JucysReport> out;
    for (int k = 0; k < n; ++k) {
        JucysReport r;
        r.n = n;
        r.k = k;
        r.pass = e[k] == by_length[n - k];
        r.class_term_counts = e[k].terms_by_class();
        r.term_count = e[k].size();
        out.push_back(std::move(r));
    }
    return out;
}

bool jucys_verify(int n, int k, const Limits &limits) {
    check_group_degree(n, limits);
    if (k < 0 || k > n - 1) {
        throw DomainError("jucys_verify needs 0 <= k <= n-1");
    }
    return esym_jm(k, n, limits) == class_sums_of_length(n, n - k, limits);
}

} // namespace hz
