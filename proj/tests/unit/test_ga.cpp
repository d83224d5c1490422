#include <gtest/gtest.h>

#include <algorithm>

#include "qgx/ga/engine.hpp"
#include "qgx/ga/problems.hpp"
#include "qgx/grouping.hpp"
#include "qgx/metric.hpp"
#include "support/generators.hpp"

using namespace qgx;
using namespace qgx::ga;

namespace {

GAConfig small(CrossoverMode mode, std::uint64_t seed = 7) {
    GAConfig c;
    c.population_size = 20;
    c.generations = 15;
    c.mode = mode;
    c.seed = seed;
    return c;
}

template <class G>
void expect_same(const RunResult<G>& a, const RunResult<G>& b) {
    EXPECT_EQ(a.best_per_generation, b.best_per_generation);
    EXPECT_EQ(a.mean_per_generation, b.mean_per_generation);
    EXPECT_EQ(a.evaluations_per_generation, b.evaluations_per_generation);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.best_fitness, b.best_fitness);
}

} // namespace

TEST(GAConfig, Validation) {
    GAConfig c;
    EXPECT_NO_THROW(c.validate());
    auto bad = [](auto edit) {
        GAConfig g;
        edit(g);
        return g;
    };
    EXPECT_THROW(bad([](GAConfig& g) { g.population_size = 3; }).validate(), ConfigError);
    EXPECT_THROW(bad([](GAConfig& g) { g.population_size = 0; }).validate(), ConfigError);
    EXPECT_THROW(bad([](GAConfig& g) { g.generations = 0; }).validate(), ConfigError);
    EXPECT_THROW(bad([](GAConfig& g) { g.crossover_rate = 1.5; }).validate(), ConfigError);
    EXPECT_THROW(bad([](GAConfig& g) { g.mutation_rate = -0.1; }).validate(), ConfigError);
    EXPECT_THROW(bad([](GAConfig& g) { g.tournament_size = 0; }).validate(), ConfigError);
}

TEST(GAConfig, Names) {
    for (auto f : {Family::grouping, Family::symmetric_real, Family::symmetric_discrete, Family::graph,
                   Family::circular, Family::sequence})
        EXPECT_EQ(parse_family(name(f)), f);
    EXPECT_EQ(parse_mode("raw"), CrossoverMode::raw);
    EXPECT_FALSE(parse_family("trees").has_value());
}

TEST(Operators, FamilyMismatchIsConfigError) {
    EXPECT_THROW(make_crossover<RealVector>(Family::grouping, CrossoverMode::raw, {}), ConfigError);
    EXPECT_THROW(make_crossover<Permutation>(Family::graph, CrossoverMode::quotient, {}), ConfigError);
    Rng rng(1);
    EXPECT_THROW(mutate(Permutation::identity(3), Family::grouping, 0.5, {}, rng), ConfigError);
    auto p = make_partition_problem(random_graph(8, 0.5, 1), 2);
    p.family = Family::circular;
    EXPECT_THROW(run_ga(p, small(CrossoverMode::raw)), ConfigError);
}

TEST(Mutation, RateZeroIsIdentity) {
    Rng rng(2);
    const OperatorOptions o;
    const auto s = gen::symbols(rng, 10, 4);
    EXPECT_EQ(mutate(s, Family::grouping, 0.0, o, rng), s);
    const auto r = gen::reals(rng, 5);
    EXPECT_EQ(mutate(r, Family::symmetric_real, 0.0, o, rng), r);
    const auto p = gen::permutation(rng, 6);
    EXPECT_EQ(mutate(p, Family::circular, 0.0, o, rng), p);
    const auto g = gen::graph(rng, 6);
    EXPECT_EQ(mutate(g, Family::graph, 0.0, o, rng), g);
    const Sequence q("acgt");
    EXPECT_EQ(mutate(q, Family::sequence, 0.0, o, rng), q);
}

TEST(Mutation, OutputsStayValid) {
    Rng rng(3);
    const OperatorOptions o;
    for (int t = 0; t < 1000; ++t) {
        const auto g = mutate(gen::graph(rng, 6), Family::graph, 0.3, o, rng);
        for (std::size_t i = 0; i < 6; ++i) {
            ASSERT_FALSE(g.edge(i, i));
            for (std::size_t j = 0; j < 6; ++j) ASSERT_EQ(g.edge(i, j), g.edge(j, i));
        }
        const auto p = mutate(gen::permutation(rng, 5), Family::circular, 1.0, o, rng);
        ASSERT_NO_THROW(Permutation(gen::ints(p)));
        const auto s = mutate(gen::symbols(rng, 5, 3), Family::grouping, 0.5, o, rng);
        ASSERT_TRUE(std::all_of(s.values().begin(), s.values().end(), [](int v) { return v >= 1 && v <= 3; }));
        const auto q = mutate(gen::sequence(rng, 6), Family::sequence, 1.0, o, rng);
        ASSERT_EQ(q.str().find(kGap), std::string::npos);
    }
}

TEST(Mutation, TranspositionChangesExactlyTwo) {
    Rng rng(4);
    const auto p = Permutation::identity(6);
    for (int t = 0; t < 100; ++t) ASSERT_EQ(hamming_distance(p, mutate(p, Family::circular, 1.0, {}, rng)), 2u);
}

TEST(RunGa, OneGenerationNoVariationKeepsInitialBest) {
    auto problem = make_partition_problem(random_graph(12, 0.4, 3), 3);
    GAConfig c = small(CrossoverMode::raw);
    c.generations = 1;
    c.crossover_rate = 0.0;
    c.mutation_rate = 0.0;
    const auto r = run_ga(problem, c);
    double initial_best = 1e300;
    for (std::size_t i = 0; i < c.population_size; ++i) {
        Rng rng = make_stream(c.seed, {0, i, ga::detail::kInit});
        initial_best = std::min(initial_best, problem.fitness(problem.initialize(rng)));
    }
    EXPECT_EQ(r.best_fitness, initial_best);
    EXPECT_EQ(r.best_per_generation.size(), 1u);
    EXPECT_EQ(r.evaluations, 2 * c.population_size);
}

TEST(RunGa, DeterministicAcrossRunsAndThreads) {
    auto problem = make_partition_problem(random_graph(24, 0.3, 5), 3);
    auto c = small(CrossoverMode::quotient, 11);
    const auto a = run_ga(problem, c);
    const auto b = run_ga(problem, c);
    c.threads = 4;
    const auto d = run_ga(problem, c);
    expect_same(a, b);
    expect_same(a, d);
}

TEST(RunGa, ElitismAndBudgetFairness) {
    auto problem = make_coloring_problem(random_graph(20, 0.3, 6), 3);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto raw = run_ga(problem, small(CrossoverMode::raw, seed));
        const auto quo = run_ga(problem, small(CrossoverMode::quotient, seed));
        for (const auto* r : {&raw, &quo}) {
            ASSERT_TRUE(std::is_sorted(r->best_per_generation.rbegin(), r->best_per_generation.rend()));
            ASSERT_EQ(r->evaluations, 20u * 16u);
            ASSERT_EQ(r->evaluations_per_generation.back(), r->evaluations);
        }
        ASSERT_EQ(raw.evaluations_per_generation, quo.evaluations_per_generation);
    }
}

TEST(RunGa, EveryFamilyRuns) {
    GAConfig c = small(CrossoverMode::quotient);
    c.generations = 5;
    for (auto mode : {CrossoverMode::raw, CrossoverMode::quotient}) {
        c.mode = mode;
        const auto tsp = run_ga(make_tsp_problem(random_tsp(8, 1)), c);
        EXPECT_EQ(tsp.best.size(), 8u);
        const auto real = run_ga(make_symmetric_real_problem(SymmetricFunction::sum_squares, 4, -2, 2), c);
        EXPECT_GE(real.best_fitness, 0.0);
        const auto disc = run_ga(make_symmetric_discrete_problem(SymmetricFunction::sorted_target, 4, 4), c);
        EXPECT_GE(disc.best_fitness, 0.0);
        const auto graph = run_ga(make_degree_sequence_problem({1, 1, 2, 2, 2}), c);
        EXPECT_EQ(graph.best.size(), 5u);
        const auto seq = run_ga(make_sequence_match_problem(Sequence("acgtac"), "acgt", 3, 9), c);
        EXPECT_EQ(seq.best_fitness, static_cast<double>(edit_distance(seq.best, Sequence("acgtac"))));
    }
}

TEST(Problems, FitnessValues) {
    const auto g = AdjacencyMatrix::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto part = make_partition_problem(g, 2);
    EXPECT_EQ(part.fitness(SymbolVector({1, 1, 2, 2}, 2)), 1.0);
    EXPECT_EQ(part.fitness(SymbolVector({1, 1, 1, 2}, 2)), 1.0 + 2.0);
    // label-symmetric
    EXPECT_EQ(part.fitness(SymbolVector({2, 2, 1, 1}, 2)), part.fitness(SymbolVector({1, 1, 2, 2}, 2)));
    const auto col = make_coloring_problem(g, 2);
    EXPECT_EQ(col.fitness(SymbolVector({1, 2, 1, 2}, 2)), 0.0);
    EXPECT_EQ(col.fitness(SymbolVector({1, 1, 1, 1}, 2)), 3.0);

    const auto inst = parse_tsp("4\n0 0\n1 0\n1 1\n0 1\n");
    EXPECT_DOUBLE_EQ(tour_length(inst, Permutation({1, 2, 3, 4})), 4.0);
    EXPECT_DOUBLE_EQ(tour_length(inst, Permutation({2, 3, 4, 1})), 4.0);
    EXPECT_THROW(parse_tsp("2\n0 0\n"), InputError);
    EXPECT_THROW(make_degree_sequence_problem({1, 5, 1}), ConfigError);
}
