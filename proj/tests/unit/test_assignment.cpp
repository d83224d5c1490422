#include <gtest/gtest.h>

#include <cmath>

#include "qgx/assignment.hpp"
#include "qgx/errors.hpp"
#include "qgx/rng.hpp"
#include "support/oracles.hpp"

using namespace qgx;

TEST(Hungarian, SmallExamples) {
    const auto a = hungarian(CostMatrix({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}}));
    EXPECT_DOUBLE_EQ(a.total, 5.0);
    EXPECT_EQ(a.columns, Permutation({2, 1, 3}));

    const auto id = hungarian(CostMatrix({{0, 9}, {9, 0}}));
    EXPECT_EQ(id.columns, Permutation({1, 2}));
    EXPECT_DOUBLE_EQ(id.total, 0.0);

    EXPECT_DOUBLE_EQ(hungarian(CostMatrix(std::vector<std::vector<double>>{{-3}})).total, -3.0);
    EXPECT_EQ(hungarian(CostMatrix()).columns.size(), 0u);
}

TEST(Hungarian, RejectsBadInput) {
    EXPECT_THROW(CostMatrix({{1, 2}, {3}}), InputError);
    EXPECT_THROW(CostMatrix({{1, NAN}, {0, 0}}), InputError);
    CostMatrix c(2);
    c(0, 1) = INFINITY;
    EXPECT_THROW(hungarian(c), InputError);
}

TEST(Hungarian, TotalMatchesReportedPermutation) {
    qgx::Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 12));
        CostMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<double>(uniform_int(rng, -20, 20));
        const auto a = hungarian(c);
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += c(i, static_cast<std::size_t>(a.columns[i] - 1));
        ASSERT_DOUBLE_EQ(s, a.total);
    }
}

TEST(Hungarian, MatchesExhaustiveOracle) {
    qgx::Rng rng(2);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 7));
        std::vector<std::vector<double>> rows(n, std::vector<double>(n));
        const bool integral = t % 2 == 0;
        for (auto& r : rows)
            for (auto& v : r) v = integral ? static_cast<double>(uniform_int(rng, 0, 4)) : 10.0 * unit_real(rng) - 5.0;
        ASSERT_NEAR(hungarian(CostMatrix(rows)).total, oracle::assignment_min(rows), 1e-9);
    }
}

TEST(Hungarian, DeterministicOnTies) {
    const CostMatrix flat(5, 1.0);
    EXPECT_EQ(hungarian(flat).columns, hungarian(flat).columns);
}
