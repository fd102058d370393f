#include "hz/hurwitz.hpp"

#include "hz/errors.hpp"
#include "hz/gluing.hpp"

namespace hz {

HurwitzSpec HurwitzSpec::make(int genus, int dprime) {
    if (genus < 0) {
        throw DomainError("genus must be nonnegative");
    }
    if (dprime < 1) {
        throw DomainError("d' must be at least 1");
    }
    return HurwitzSpec{genus, dprime};
}

namespace {

Partition all_twos(int dprime) { return Partition(std::vector<int>(static_cast<std::size_t>(dprime), 2)); }

} // namespace

Rational one_part_orbifold_count(int dprime, const AlgebraElement &middle, const Limits &limits) {
    const int n = 2 * dprime;
    check_group_degree(n, limits);
    if (middle.degree() != n) {
        throw DomainError("middle factor must live in Q[S_2d']");
    }
    const AlgebraElement left = alg_mul(class_sum(all_twos(dprime), limits), middle);
    const AlgebraElement cycles = class_sum(Partition({n}), limits);
    return coeff_identity_of_product(left, cycles) / Rational(factorial(static_cast<unsigned>(n)));
}

Rational one_part_orbifold_count_naive(int dprime, const AlgebraElement &middle, const Limits &limits) {
    const int n = 2 * dprime;
    check_group_degree(n, limits);
    const AlgebraElement product =
        alg_mul(alg_mul(class_sum(all_twos(dprime), limits), middle), class_sum(Partition({n}), limits));
    return coeff_identity(product) / Rational(factorial(static_cast<unsigned>(n)));
}

namespace {

void check_hurwitz_degree(int n, const Limits &limits) {
    check_group_degree(n, limits);
    if (n > limits.max_hurwitz_degree) {
        throw GuardrailError("group-algebra Hurwitz guardrail: 2d' <= " + std::to_string(limits.max_hurwitz_degree));
    }
}

} // namespace

Rational h_grothendieck(const HurwitzSpec &spec, const Limits &limits) {
    const int n = spec.degree();
    check_hurwitz_degree(n, limits);
    const int length = spec.target_length();
    if (length < 1 || length > n || spec.transpositions() < 0) {
        return Rational(0);
    }
    return one_part_orbifold_count(spec.dprime, class_sums_of_length(n, length, limits), limits);
}

Rational h_monotone(const HurwitzSpec &spec, const Limits &limits) {
    const int n = spec.degree();
    check_hurwitz_degree(n, limits);
    const int m = spec.transpositions();
    if (m < 0 || m > n - 1) {
        return Rational(0);
    }
    return one_part_orbifold_count(spec.dprime, esym_jm(m, n, limits), limits);
}

namespace {

// Counts strictly monotone words tau_m∘...∘tau_1 equal to a target T. The state
// is D = T∘R^-1 for the running product R; appending tau maps D to D∘tau, which
// swaps two lanes, and the word is complete when D is the identity.
class MonotoneSearch {
  public:
    MonotoneSearch(int n, int m) : n_(n), m_(m) {}

    std::uint64_t count(Permutation::Lanes defect) { return step(defect, 0, 0); }

  private:
    std::uint64_t step(Permutation::Lanes &d, int placed, int last_y) {
        const int remaining = m_ - placed;
        const int distance = n_ - kernels::cycle_count(d.data(), n_);
        // Each transposition moves the cycle count by exactly one.
        if (distance > remaining || (remaining - distance) % 2 != 0) {
            return 0;
        }
        if (remaining == 0) {
            return 1;
        }
        std::uint64_t total = 0;
        // y is 0-based here; the remaining maxima need room above it.
        for (int y = last_y + 1; y <= n_ - remaining; ++y) {
            for (int x = 0; x < y; ++x) {
                std::swap(d[x], d[y]);
                total += step(d, placed + 1, y);
                std::swap(d[x], d[y]);
            }
        }
        return total;
    }

    int n_;
    int m_;
};

void check_direct_degree(int n, const Limits &limits) {
    if (n > limits.max_direct_degree || n > kMaxDegree) {
        throw GuardrailError("direct monotone search guardrail: 2d' <= " + std::to_string(limits.max_direct_degree));
    }
}

} // namespace

std::uint64_t monotone_factorization_count(const HurwitzSpec &spec, const Limits &limits) {
    const int n = spec.degree();
    check_direct_degree(n, limits);
    const int m = spec.transpositions();
    if (m < 0 || m > n - 1) {
        return 0;
    }
    const Permutation gamma_inv = Permutation::long_cycle(n).inverse();
    Limits enum_limits = limits;
    enum_limits.max_gluing_dprime = std::max(enum_limits.max_gluing_dprime, spec.dprime);
    MonotoneSearch search(n, m);
    std::uint64_t total = 0;
    enumerate_matchings(
        spec.dprime,
        [&](const Permutation &alpha) {
            // alpha is an involution, so the word must equal alpha∘gamma^-1.
            total += search.count(compose(alpha, gamma_inv).lanes());
        },
        enum_limits);
    return total;
}

Rational h_monotone_direct(const HurwitzSpec &spec, const Limits &limits) {
    return Rational(Integer(static_cast<unsigned long>(monotone_factorization_count(spec, limits))),
                    Integer(spec.degree()));
}

bool fact1_check(int dprime, const Limits &limits) {
    const GenusHistogram hist = epsilon_bruteforce(dprime, limits);
    for (int g = 0; 2 * g <= dprime + 1; ++g) {
        const Rational lhs{Integer(static_cast<unsigned long>(hist.at(g)))};
        if (!(lhs == Rational(2 * dprime) * h_grothendieck(HurwitzSpec::make(g, dprime), limits))) {
            return false;
        }
    }
    return true;
}

bool fact2_check(int genus, int dprime, const Limits &limits) {
    const HurwitzSpec spec = HurwitzSpec::make(genus, dprime);
    return h_grothendieck(spec, limits) == h_monotone(spec, limits);
}

} // namespace hz
