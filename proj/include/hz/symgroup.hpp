#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hz/limits.hpp"
#include "hz/permutation.hpp"
#include "hz/rational.hpp"

namespace hz {

/// Element of the group algebra Q[S_n]: a sparse Rational-weighted formal sum
/// of permutations. Zero coefficients are never stored.
class AlgebraElement {
  public:
    using Terms = std::unordered_map<Permutation, Rational, PermutationHash>;

    explicit AlgebraElement(int n = 0) : n_(n) {}

    static AlgebraElement identity(int n);
    static AlgebraElement of(const Permutation &p, const Rational &c = Rational(1));

    int degree() const noexcept { return n_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Permutation &p) const;
    void add(const Permutation &p, const Rational &c);

    /// Terms sorted by permutation (deterministic order for output).
    std::vector<std::pair<Permutation, Rational>> sorted_terms() const;
    /// Number of terms per cycle type.
    std::map<Partition, std::size_t> terms_by_class() const;

    AlgebraElement &operator+=(const AlgebraElement &o);
    AlgebraElement &operator*=(const Rational &c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational &c) { return a *= c; }
    friend bool operator==(const AlgebraElement &a, const AlgebraElement &b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    Terms terms_;
};

/// Multiset of cycle lengths of p, fixed points included.
Partition cycle_type(const Permutation &p);

/// n! / prod_j (j^{m_j} m_j!).
Integer class_size(const Partition &mu);

/// C_mu: sum of all permutations of cycle type mu, by filtering all of S_n.
AlgebraElement class_sum(const Partition &mu, const Limits &limits = {});

/// Sum of C_mu over all mu |- n with length(mu) = length, built in one pass over S_n.
AlgebraElement class_sums_of_length(int n, int length, const Limits &limits = {});

/// Jucys-Murphy element J_k = (1 k) + (2 k) + ... + (k-1 k) in Q[S_n].
AlgebraElement jm(int k, int n);

/// e_k(J_2, ..., J_n) via e_k^(m) = e_k^(m-1) + e_{k-1}^(m-1) J_m, m = 2..n.
AlgebraElement esym_jm(int k, int n, const Limits &limits = {});
/// e_0 .. e_{n-1} in one sweep.
std::vector<AlgebraElement> esym_jm_all(int n, const Limits &limits = {});

/// Bilinear extension of compose.
AlgebraElement alg_mul(const AlgebraElement &a, const AlgebraElement &b);

/// Coefficient of the identity permutation.
Rational coeff_identity(const AlgebraElement &a);

/// [id](x * b) = sum_{h} b(h) x(h^-1), without forming the product.
Rational coeff_identity_of_product(const AlgebraElement &x, const AlgebraElement &b);

struct JucysReport {
    int n = 0;
    int k = 0;
    bool pass = false;
    /// Terms of e_k(J) grouped by cycle type.
    std::map<Partition, std::size_t> class_term_counts;
    std::size_t term_count = 0;
};

/// Checks e_k(J_2..J_n) == sum over mu with length n-k of C_mu.
bool jucys_verify(int n, int k, const Limits &limits = {});
/// Same check for every k = 0..n-1, with per-class term counts.
std::vector<JucysReport> jucys_report(int n, const Limits &limits = {});

void check_group_degree(int n, const Limits &limits);

} // namespace hz
