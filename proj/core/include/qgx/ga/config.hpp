#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgx/circular.hpp"
#include "qgx/rng.hpp"

namespace qgx::ga {

/// Representation family; selects the raw and quotient crossovers.
enum class Family { grouping, symmetric_real, symmetric_discrete, graph, circular, sequence };

enum class CrossoverMode { raw, quotient };

std::string_view name(Family f);
std::string_view name(CrossoverMode m);
std::optional<Family> parse_family(std::string_view s);
std::optional<CrossoverMode> parse_mode(std::string_view s);

/// A minimization problem over genotypes of type `G`.
template <class G>
struct Problem {
    std::string name;
    Family family = Family::grouping;
    std::function<double(const G&)> fitness;  ///< must be pure and thread-safe
    std::function<G(Rng&)> initialize;
};

struct GAConfig {
    std::size_t population_size = 50;
    std::size_t generations = 100;
    double crossover_rate = 0.9;
    double mutation_rate = 0.05;
    std::size_t tournament_size = 2;
    CrossoverMode mode = CrossoverMode::quotient;
    std::uint64_t seed = 1;
    /// Worker threads for fitness evaluation; never affects results.
    std::size_t threads = 1;

    /// Throws ConfigError on the first invalid field.
    void validate() const;
};

/// Knobs of the variation operators.
struct OperatorOptions {
    double mutation_sigma = 0.1;
    PermutationMetric permutation_metric = PermutationMetric::hamming;
    std::size_t graph_restarts = 10;
    std::string sequence_alphabet = "acgt";
};

template <class G>
struct RunResult {
    std::vector<double> best_per_generation;
    std::vector<double> mean_per_generation;
    /// Cumulative evaluation count at the end of each generation.
    std::vector<std::size_t> evaluations_per_generation;
    G best;
    double best_fitness = 0.0;
    std::size_t evaluations = 0;
    double wall_seconds = 0.0;
};

} // namespace qgx::ga
