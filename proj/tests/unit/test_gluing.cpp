#include "gluing_table.hpp"

#include <hz/errors.hpp>
#include <hz/gluing.hpp>
#include <hz/rational.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace hz;

TEST(Gluing, HandComputedGenus) {
    EXPECT_EQ(genus_of(Permutation::from_cycles(2, {{1, 2}}), 1), 0);
    EXPECT_EQ(genus_of(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), 2), 0);
    EXPECT_EQ(genus_of(Permutation::from_cycles(4, {{1, 4}, {2, 3}}), 2), 0);
    EXPECT_EQ(genus_of(Permutation::from_cycles(4, {{1, 3}, {2, 4}}), 2), 1);
}

TEST(Gluing, MatchingsAreDistinctInvolutions) {
    const std::vector<std::size_t> expected = {1, 1, 3, 15, 105, 945};
    for (int d = 1; d <= 5; ++d) {
        const auto all = matchings(d);
        ASSERT_EQ(all.size(), expected[d]);
        std::set<Permutation> seen(all.begin(), all.end());
        EXPECT_EQ(seen.size(), all.size());
        for (const auto &a : all) {
            EXPECT_TRUE(compose(a, a).is_identity());
            for (int i = 1; i <= 2 * d; ++i) {
                EXPECT_NE(a(i), i);
            }
        }
    }
}

TEST(Gluing, SmallHistograms) {
    const auto h1 = epsilon_bruteforce(1);
    EXPECT_EQ(h1.counts, (std::map<int, std::uint64_t>{{0, 1}}));
    const auto h2 = epsilon_bruteforce(2);
    EXPECT_EQ(h2.counts, (std::map<int, std::uint64_t>{{0, 2}, {1, 1}}));
    const auto h3 = epsilon_bruteforce(3);
    EXPECT_EQ(h3.counts, (std::map<int, std::uint64_t>{{0, 5}, {1, 10}}));
}

TEST(Gluing, MatchesClassicalTable) {
    const auto &table = testdata::gluing_table();
    for (int d = 1; d <= 8; ++d) {
        const auto h = epsilon_bruteforce(d, {}, 4);
        EXPECT_EQ(h.total(), double_factorial_odd(static_cast<unsigned>(d)).get_ui());
        for (std::size_t g = 0; g < table[d].size(); ++g) {
            EXPECT_EQ(h.at(static_cast<int>(g)), table[d][g]) << "d'=" << d << " g=" << g;
        }
        EXPECT_EQ(h.counts.size(), table[d].size());
    }
}

TEST(Gluing, PlanarGluingsAreCatalan) {
    const std::vector<std::uint64_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int d = 1; d <= 7; ++d) {
        EXPECT_EQ(epsilon_bruteforce(d).at(0), catalan[d]);
    }
}

TEST(Gluing, FaceProductConventionIsIrrelevant) {
    for (int d = 1; d <= 6; ++d) {
        EXPECT_EQ(epsilon_bruteforce(d, {}, 1, FaceProduct::rotation_after_pairing),
                  epsilon_bruteforce(d, {}, 1, FaceProduct::pairing_after_rotation));
    }
    for (const auto &a : matchings(4)) {
        EXPECT_EQ(genus_of(a, 4, FaceProduct::rotation_after_pairing),
                  genus_of(a, 4, FaceProduct::pairing_after_rotation));
    }
}

TEST(Gluing, ThreadCountDoesNotChangeResult) {
    for (int d = 1; d <= 7; ++d) {
        const auto serial = epsilon_bruteforce(d, {}, 1);
        for (unsigned t : {2u, 3u, 8u, 32u}) {
            EXPECT_EQ(epsilon_bruteforce(d, {}, t), serial) << "threads=" << t;
        }
    }
}

TEST(Gluing, Guardrails) {
    EXPECT_THROW(epsilon_bruteforce(9), GuardrailError);
    EXPECT_THROW(epsilon_bruteforce(0), DomainError);
}
