#pragma once

#include <cstdint>

#include "hz/limits.hpp"
#include "hz/rational.hpp"
#include "hz/symgroup.hpp"

namespace hz {

/// One-part Hurwitz problem of degree n = 2d' with profile (2d') over 0 and
/// (2,...,2) over infinity. Riemann-Hurwitz fixes the remaining data.
struct HurwitzSpec {
    int genus = 0;
    int dprime = 1;

    /// Validates genus >= 0 and d' >= 1.
    static HurwitzSpec make(int genus, int dprime);

    int degree() const { return 2 * dprime; }
    /// Number of simple (monotone) ramifications, m = 2g - 1 + d'.
    int transpositions() const { return 2 * genus - 1 + dprime; }
    /// Length of the cycle type over 1 for dessins, d' + 1 - 2g.
    int target_length() const { return dprime + 1 - 2 * genus; }
};

/// (1/(2d')!) [id] C_{(2)^{d'}} * middle * C_{(2d')}, evaluated with
/// [id](X * C) = sum_{h in C} X(h^-1) so the last product is never formed.
Rational one_part_orbifold_count(int dprime, const AlgebraElement &middle, const Limits &limits = {});

/// Same quantity by expanding the full triple product (reference for the shortcut).
Rational one_part_orbifold_count_naive(int dprime, const AlgebraElement &middle, const Limits &limits = {});

/// Dessins count: middle factor is the sum of C_mu over mu with length d' + 1 - 2g.
Rational h_grothendieck(const HurwitzSpec &spec, const Limits &limits = {});

/// Strictly monotone count: middle factor is e_m(J_2, ..., J_{2d'}), m = 2g - 1 + d'.
Rational h_monotone(const HurwitzSpec &spec, const Limits &limits = {});

/// Direct search oracle for h_monotone. With gamma = (1 2 ... 2d') fixed, counts
/// tuples (alpha, tau_1..tau_m), alpha a fixed-point-free involution,
/// tau_i = (x_i y_i) with x_i < y_i and y_1 < ... < y_m, such that
/// alpha∘tau_m∘...∘tau_1∘gamma = id; returns count / (2d').
Rational h_monotone_direct(const HurwitzSpec &spec, const Limits &limits = {});

/// Raw tuple count behind h_monotone_direct.
std::uint64_t monotone_factorization_count(const HurwitzSpec &spec, const Limits &limits = {});

/// Gluing histogram equals 2d' * h_grothendieck for every genus.
bool fact1_check(int dprime, const Limits &limits = {});
/// h_grothendieck == h_monotone.
bool fact2_check(int genus, int dprime, const Limits &limits = {});

} // namespace hz
