#include <gtest/gtest.h>

#include "qgx/circular.hpp"
#include "qgx/metric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qgx;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

} // namespace

TEST(Shift, Direction) {
    EXPECT_EQ(shift(perm({1, 2, 3}), 2), perm({2, 3, 1}));
    EXPECT_EQ(shift(perm({1, 2, 3}), 1), perm({3, 1, 2}));
    EXPECT_EQ(shift(perm({1, 2, 3}), 3), perm({1, 2, 3}));
    EXPECT_EQ(shift(perm({1, 2, 3}), -1), perm({2, 3, 1}));
    EXPECT_EQ(shift(perm({4, 6, 1, 5, 3, 2}), 1), perm({2, 4, 6, 1, 5, 3}));
}

TEST(CircNormalize, WorkedExample) {
    const auto x = perm({2, 4, 5, 1, 6, 3}), y = perm({4, 6, 1, 5, 3, 2});
    const std::vector<std::size_t> rows{6, 2, 6, 5, 6, 5};
    for (std::size_t k = 0; k < 6; ++k)
        EXPECT_EQ(hamming_distance(x, shift(y, static_cast<std::int64_t>(k))), rows[k]) << k;
    const auto m = circ_normalize(x, y);
    EXPECT_EQ(m.point, perm({2, 4, 6, 1, 5, 3}));
    EXPECT_EQ(m.distance, 2u);
    EXPECT_EQ(m.steps, 1u);
    EXPECT_EQ(circ_quotient_distance(x, y), 2u);
}

TEST(CircNormalize, TrivialAndErrors) {
    const auto p = perm({3, 1, 2, 4});
    EXPECT_EQ(circ_quotient_distance(p, p), 0u);
    EXPECT_EQ(circ_quotient_distance(p, shift(p, 3)), 0u);
    EXPECT_THROW(circ_normalize(p, perm({1, 2})), DimensionError);
    EXPECT_EQ(parse_permutation_metric("swap"), PermutationMetric::swap);
    EXPECT_FALSE(parse_permutation_metric("l1").has_value());
}

TEST(CircNormalize, MatchesRotationEnumeration) {
    Rng rng(61);
    for (int t = 0; t < 300; ++t) {
        const auto n = gen::size_in(rng, 1, 9);
        const auto x = gen::permutation(rng, n), y = gen::permutation(rng, n);
        const auto xi = gen::ints(x), yi = gen::ints(y);
        std::size_t best_h = n, best_s = n * n;
        for (std::size_t k = 0; k < n; ++k) {
            const auto r = oracle::rotate_right(yi, k);
            best_h = std::min(best_h, oracle::hamming(xi, r));
            if (n <= 6) best_s = std::min(best_s, oracle::swap_distances_from(xi).at(r));
        }
        ASSERT_EQ(circ_quotient_distance(x, y), best_h);
        if (n <= 6) ASSERT_EQ(circ_quotient_distance(x, y, PermutationMetric::swap), best_s);
    }
}

TEST(PiCycleCrossover, WorkedExample) {
    const auto x = perm({2, 4, 5, 1, 6, 3}), y = perm({4, 6, 1, 5, 3, 2});
    // s1(y) differs from x at positions 3 and 5, which form one cycle
    const std::vector<Parent> second(5, Parent::second);
    EXPECT_EQ(pi_cycle_crossover(x, y, PermutationMetric::hamming, second), perm({2, 4, 6, 1, 5, 3}));
    Rng rng(62);
    for (int t = 0; t < 30; ++t) {
        const auto o = pi_cycle_crossover(x, y, PermutationMetric::hamming, rng);
        EXPECT_TRUE(o == x || o == perm({2, 4, 6, 1, 5, 3}));
    }
}

TEST(PiCycleCrossover, InQuotientSegmentBothMetrics) {
    Rng rng(63);
    for (auto metric : {PermutationMetric::hamming, PermutationMetric::swap}) {
        auto qd = [metric](const Permutation& a, const Permutation& b) { return circ_quotient_distance(a, b, metric); };
        for (int t = 0; t < 500; ++t) {
            const auto n = gen::size_in(rng, 1, 9);
            const auto x = gen::permutation(rng, n), y = gen::permutation(rng, n);
            ASSERT_TRUE(in_quotient_segment(x, pi_cycle_crossover(x, y, metric, rng), y, qd));
        }
    }
}

TEST(ReversalDistance, SmallCases) {
    EXPECT_EQ(reversal_distance_bfs(perm({1, 2, 3}), perm({1, 2, 3})), 0u);
    EXPECT_EQ(reversal_distance_bfs(perm({1, 2, 3}), perm({3, 2, 1})), 1u);
    EXPECT_EQ(reversal_distance_bfs(perm({1, 2, 3, 4}), perm({2, 1, 4, 3})), 2u);
    EXPECT_THROW(reversal_distance_bfs(Permutation::identity(8), Permutation::identity(8)), SizeCapError);
}
