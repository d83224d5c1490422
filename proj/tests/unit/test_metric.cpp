#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qgx/metric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qgx;

namespace {

SymbolVector sv(std::vector<int> v, int k) { return SymbolVector(std::move(v), k); }
Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

} // namespace

TEST(Types, RejectInvalidConstruction) {
    EXPECT_THROW(sv({1, 4}, 3), InputError);
    EXPECT_THROW(sv({}, 3), InputError);
    EXPECT_THROW(perm({1, 1, 2}), InputError);
    EXPECT_THROW(perm({0, 1}), InputError);
    EXPECT_THROW(RealVector({1.0, NAN}), InputError);
    EXPECT_THROW(RealVector({INFINITY}), InputError);
}

TEST(Types, PermutationAlgebra) {
    const auto p = perm({2, 3, 1});
    EXPECT_EQ(p.after(p.inverse()), Permutation::identity(3));
    EXPECT_EQ(p(1), 2);
    EXPECT_EQ(p.after(p), perm({3, 1, 2}));
}

TEST(HammingDistance, Examples) {
    EXPECT_EQ(hamming_distance(sv({1, 2, 3, 1}, 3), sv({3, 2, 3, 1}, 3)), 1u);
    EXPECT_EQ(hamming_distance(sv({1, 2, 3, 1}, 3), sv({1, 2, 3, 1}, 3)), 0u);
    EXPECT_EQ(hamming_distance(sv({1, 1, 1}, 2), sv({2, 2, 2}, 2)), 3u);
}

TEST(HammingDistance, MismatchIsDimensionError) {
    EXPECT_THROW(hamming_distance(sv({1, 2}, 2), sv({1, 2, 1}, 2)), DimensionError);
    EXPECT_THROW(hamming_distance(sv({1, 2}, 2), sv({1, 2}, 3)), DimensionError);
}

TEST(EuclideanDistance, Examples) {
    EXPECT_NEAR(euclidean_distance(RealVector({1, 4, 5}), RealVector({0, 3, 6})), std::sqrt(3.0), 1e-12);
    EXPECT_EQ(euclidean_distance(RealVector({1.5, 2}), RealVector({1.5, 2})), 0.0);
    EXPECT_DOUBLE_EQ(euclidean_distance(RealVector({0, 0}), RealVector({3, 4})), 5.0);
    EXPECT_THROW(euclidean_distance(RealVector({0}), RealVector({0, 1})), DimensionError);
}

TEST(SwapDistance, Examples) {
    EXPECT_EQ(swap_distance(perm({3, 1, 2}), perm({3, 1, 2})), 0u);
    EXPECT_EQ(swap_distance(perm({1, 2, 3}), perm({2, 1, 3})), 1u);
    EXPECT_EQ(oracle::swap_distance_bfs({1, 2, 3, 4}, {2, 3, 4, 1}), 3u);
    EXPECT_EQ(swap_distance(perm({1, 2, 3, 4}), perm({2, 3, 4, 1})), 3u);
    EXPECT_THROW(swap_distance(perm({1, 2}), perm({1, 2, 3})), DimensionError);
}

TEST(SwapDistance, MatchesTranspositionGraphBfsExhaustively) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<int> base(n);
        std::iota(base.begin(), base.end(), 1);
        std::vector<std::vector<int>> all;
        auto p = base;
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for (const auto& from : all) {
            const auto table = oracle::swap_distances_from(from);
            ASSERT_EQ(table.size(), all.size());
            for (const auto& to : all) ASSERT_EQ(swap_distance(Permutation(from), Permutation(to)), table.at(to));
        }
    }
}

TEST(InSegment, Examples) {
    auto h = [](const SymbolVector& a, const SymbolVector& b) { return hamming_distance(a, b); };
    const auto x = sv({1, 2, 1}, 2), y = sv({2, 1, 1}, 2);
    EXPECT_TRUE(in_segment(x, x, y, h));
    EXPECT_TRUE(in_segment(RealVector({0, 0}), RealVector({1, 1}), RealVector({2, 2}), euclidean_distance, 1e-9));
    EXPECT_FALSE(in_segment(sv({1, 1}, 2), sv({2, 2}, 2), sv({1, 2}, 2), h));
}

TEST(MaskCrossover, Examples) {
    const auto p1 = sv({1, 2, 3, 1}, 3), p2 = sv({3, 2, 3, 1}, 3);
    EXPECT_EQ(mask_crossover(p1, p2, Mask::all(4, Parent::first)), p1);
    EXPECT_EQ(mask_crossover(p1, p1, Mask({Parent::second, Parent::first, Parent::second, Parent::first})), p1);
    EXPECT_EQ(mask_crossover(p1, p2, Mask({Parent::first, Parent::first, Parent::second, Parent::second})), p1);
    EXPECT_THROW(mask_crossover(p1, p2, Mask::all(3, Parent::first)), DimensionError);
}

TEST(LineCrossover, Examples) {
    const RealVector p1({0, 0}), p2({2, 4});
    EXPECT_EQ(line_crossover(p1, p2, 1.0), p1);
    EXPECT_EQ(line_crossover(p1, p2, 0.0), p2);
    EXPECT_EQ(line_crossover(p1, p2, 0.5), RealVector({1, 2}));
    EXPECT_THROW(line_crossover(p1, p2, 1.5), ParameterError);
    EXPECT_THROW(line_crossover(p1, p2, -0.1), ParameterError);
}

TEST(CycleCrossover, Examples) {
    Rng rng(7);
    const auto p = perm({3, 1, 4, 2});
    EXPECT_EQ(cycle_crossover(p, p, rng), p);

    const auto a = perm({1, 2, 3, 4}), b = perm({2, 3, 4, 1});  // one cycle
    for (int t = 0; t < 20; ++t) {
        const auto c = cycle_crossover(a, b, rng);
        EXPECT_TRUE(c == a || c == b);
    }

    const auto x = perm({1, 2, 3, 4}), y = perm({2, 1, 4, 3});
    const std::set<Permutation> expected{perm({1, 2, 3, 4}), perm({2, 1, 4, 3}), perm({1, 2, 4, 3}), perm({2, 1, 3, 4})};
    std::set<Permutation> seen;
    for (int t = 0; t < 200; ++t) seen.insert(cycle_crossover(x, y, rng));
    EXPECT_EQ(seen, expected);
    EXPECT_THROW(cycle_crossover(a, perm({1, 2, 3}), rng), DimensionError);
}

TEST(MetricProperties, AxiomsOnRandomTriples) {
    Rng rng(11);
    for (int t = 0; t < 2000; ++t) {
        const auto n = gen::size_in(rng, 1, 8);
        const auto a = gen::symbols(rng, n, 3), b = gen::symbols(rng, n, 3), c = gen::symbols(rng, n, 3);
        ASSERT_EQ(hamming_distance(a, b), hamming_distance(b, a));
        ASSERT_LE(hamming_distance(a, c), hamming_distance(a, b) + hamming_distance(b, c));
        ASSERT_EQ(hamming_distance(a, b) == 0, a == b);

        const auto p = gen::permutation(rng, n), q = gen::permutation(rng, n), r = gen::permutation(rng, n);
        ASSERT_EQ(swap_distance(p, q), swap_distance(q, p));
        ASSERT_LE(swap_distance(p, r), swap_distance(p, q) + swap_distance(q, r));
        ASSERT_EQ(swap_distance(p, q) == 0, p == q);

        const auto x = gen::reals(rng, n), y = gen::reals(rng, n), z = gen::reals(rng, n);
        ASSERT_NEAR(euclidean_distance(x, y), euclidean_distance(y, x), 1e-9);
        ASSERT_LE(euclidean_distance(x, z), euclidean_distance(x, y) + euclidean_distance(y, z) + 1e-9);
    }
}

TEST(MetricProperties, CrossoversAreGeometric) {
    Rng rng(13);
    auto h = [](const auto& a, const auto& b) { return hamming_distance(a, b); };
    for (int t = 0; t < 2000; ++t) {
        const auto n = gen::size_in(rng, 1, 10);
        const auto a = gen::symbols(rng, n, 4), b = gen::symbols(rng, n, 4);
        const auto z = mask_crossover(a, b, uniform_mask(n, rng));
        ASSERT_TRUE(in_segment(a, z, b, h));

        const auto p = gen::permutation(rng, n), q = gen::permutation(rng, n);
        const auto c = cycle_crossover(p, q, rng);
        ASSERT_TRUE(in_segment(p, c, q, h));
        ASSERT_TRUE(in_segment(p, c, q, [](const Permutation& u, const Permutation& v) { return swap_distance(u, v); }));

        const auto x = gen::reals(rng, n), y = gen::reals(rng, n);
        ASSERT_TRUE(in_segment(x, line_crossover(x, y, unit_real(rng)), y, euclidean_distance, kRealTolerance));
    }
}
