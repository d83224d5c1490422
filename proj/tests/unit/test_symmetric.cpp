#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qgx/metric.hpp"
#include "qgx/symmetric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qgx;

TEST(PermuteCoords, Convention) {
    EXPECT_EQ(permute_coords(RealVector({3, 0, 6}), Permutation({2, 1, 3})), RealVector({0, 3, 6}));
    EXPECT_EQ(permute_coords(SymbolVector({1, 2, 3}, 3), Permutation({3, 1, 2})), SymbolVector({3, 1, 2}, 3));
    EXPECT_THROW(permute_coords(RealVector({1, 2}), Permutation({1, 2, 3})), DimensionError);
}

TEST(SymNormalizeReal, WorkedExample) {
    const RealVector x({1, 4, 5}), y({3, 0, 6});
    const auto n = sym_normalize_real(x, y);
    EXPECT_EQ(n.point, RealVector({0, 3, 6}));
    EXPECT_NEAR(n.distance, std::sqrt(3.0), 1e-9);

    const std::vector<double> expected{std::sqrt(21.0), std::sqrt(33.0), std::sqrt(3.0),
                                       3.0,             std::sqrt(51.0), 3.0 * std::sqrt(5.0)};
    const auto act = coordinate_action_real(3);
    for (std::uint64_t g = 0; g < 6; ++g) EXPECT_NEAR(euclidean_distance(x, act.apply(g, y)), expected[g], 1e-9) << g;
}

TEST(SymNormalizeReal, Trivial) {
    const RealVector x({2, 1, 2});
    EXPECT_EQ(sym_normalize_real(x, RealVector({1, 2, 2})).distance, 0.0);
    EXPECT_EQ(sym_normalize_real(x, RealVector({1, 2, 2})).point, x);
    EXPECT_THROW(sym_normalize_real(x, RealVector({1})), DimensionError);
}

TEST(SymNormalizeReal, SortEqualsAssignmentEqualsEnumeration) {
    Rng rng(51);
    for (int t = 0; t < 400; ++t) {
        const auto n = gen::size_in(rng, 1, 6);
        const auto x = gen::reals(rng, n, t % 2 == 0), y = gen::reals(rng, n, t % 2 == 0);
        const auto s = sym_normalize_real(x, y);
        const auto h = sym_normalize_real_assignment(x, y);
        const double brute = std::sqrt(oracle::rearranged_sq_distance(gen::doubles(x), gen::doubles(y)));
        ASSERT_NEAR(s.distance, brute, 1e-9);
        ASSERT_NEAR(h.distance, brute, 1e-9);
        ASSERT_NEAR(euclidean_distance(x, s.point), s.distance, 1e-12);
        auto sx = gen::doubles(s.point), sy = gen::doubles(y);
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        ASSERT_EQ(sx, sy);
    }
}

TEST(SymNormalizeDiscrete, MatchesEnumeration) {
    Rng rng(52);
    EXPECT_EQ(sym_normalize_discrete(SymbolVector({1, 2, 2}, 2), SymbolVector({2, 1, 2}, 2)).distance, 0.0);
    for (int t = 0; t < 300; ++t) {
        const auto n = gen::size_in(rng, 1, 6);
        const int k = static_cast<int>(uniform_int(rng, 2, 4));
        const auto x = gen::symbols(rng, n, k), y = gen::symbols(rng, n, k);
        const auto r = sym_normalize_discrete(x, y);
        ASSERT_EQ(static_cast<std::size_t>(r.distance), oracle::rearranged_hamming(gen::ints(x), gen::ints(y)));
        ASSERT_EQ(hamming_distance(x, r.point), static_cast<std::size_t>(r.distance));
    }
}

TEST(SymCrossover, RealSegment) {
    Rng rng(53);
    auto qd = [](const RealVector& a, const RealVector& b) { return sym_normalize_real(a, b).distance; };
    EXPECT_EQ(sym_iq_crossover_real(RealVector({1, 4, 5}), RealVector({3, 0, 6}), 0.0), RealVector({0, 3, 6}));
    EXPECT_THROW(sym_iq_crossover_real(RealVector({1}), RealVector({2}), 2.0), ParameterError);
    for (int t = 0; t < 500; ++t) {
        const auto n = gen::size_in(rng, 1, 6);
        const auto x = gen::reals(rng, n), y = gen::reals(rng, n);
        const auto o = sym_iq_crossover_real(x, y, rng);
        ASSERT_TRUE(in_quotient_segment(x, o, y, qd, 1e-9));
    }
}

TEST(SymCrossover, DiscreteSegment) {
    Rng rng(54);
    auto qd = [](const SymbolVector& a, const SymbolVector& b) { return sym_normalize_discrete(a, b).distance; };
    for (int t = 0; t < 500; ++t) {
        const auto n = gen::size_in(rng, 1, 7);
        const auto x = gen::symbols(rng, n, 3), y = gen::symbols(rng, n, 3);
        ASSERT_TRUE(in_quotient_segment(x, sym_iq_crossover_discrete(x, y, rng), y, qd));
    }
}

TEST(SymmetricFunction, ValuesAndInvariance) {
    const std::vector<double> v{3, 1, 2};
    EXPECT_DOUBLE_EQ(evaluate(SymmetricFunction::sum_squares, v), 14.0);
    EXPECT_DOUBLE_EQ(evaluate(SymmetricFunction::product, v), 6.0);
    EXPECT_DOUBLE_EQ(evaluate(SymmetricFunction::range, v), 2.0);
    EXPECT_DOUBLE_EQ(evaluate(SymmetricFunction::sorted_target, v), 0.0);
    EXPECT_EQ(parse_symmetric_function(name(SymmetricFunction::range)), SymmetricFunction::range);
    EXPECT_FALSE(parse_symmetric_function("nope").has_value());

    Rng rng(55);
    for (int t = 0; t < 200; ++t) {
        const auto n = gen::size_in(rng, 1, 6);
        const auto x = gen::reals(rng, n);
        const auto y = permute_coords(x, gen::permutation(rng, n));
        for (auto f : {SymmetricFunction::sum_squares, SymmetricFunction::product, SymmetricFunction::range,
                       SymmetricFunction::sorted_target})
            ASSERT_NEAR(evaluate(f, x.values()), evaluate(f, y.values()), 1e-9);
    }
}
