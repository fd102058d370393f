#pragma once

namespace hz {

/// Size guardrails. Defaults keep every computation at desk scale.
struct Limits {
    /// Largest n for which S_n group-algebra elements are built (|S_10| ~ 3.6M).
    int max_group_degree = 10;
    /// Largest d' for brute-force gluing enumeration ((15)!! ~ 2M at d' = 8).
    int max_gluing_dprime = 8;
    /// Largest n = 2d' for the direct monotone-factorization search.
    int max_direct_degree = 8;
    /// Largest n = 2d' for the group-algebra Hurwitz counts. These multiply
    /// class sums of S_n, which stops being desk scale beyond S_8.
    int max_hurwitz_degree = 8;

    /// Raises every guardrail to accommodate S_n (gluing to d' = n/2).
    static Limits forced(int n) { return Limits{n, n / 2, n, n}; }
};

} // namespace hz
