#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <numeric>
#include <thread>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/ga/config.hpp"
#include "qgx/ga/operators.hpp"
#include "qgx/rng.hpp"

namespace qgx::ga {

namespace detail {

enum StreamTag : std::uint64_t { kInit = 1, kVary = 2 };

/// Evaluates every genotype, splitting the index range over `threads`
/// workers. Each result lands in its own slot, so the output does not
/// depend on the thread count.
template <class G>
std::vector<double> evaluate_all(const Problem<G>& problem, const std::vector<G>& pop, std::size_t threads) {
    std::vector<double> fit(pop.size());
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(pop.size(), 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < pop.size(); ++i) fit[i] = problem.fitness(pop[i]);
        return fit;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (pop.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(pop.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fit[i] = problem.fitness(pop[i]);
        });
    }
    for (auto& w : workers) w.join();
    return fit;
}

inline std::size_t tournament(const std::vector<double>& fit, std::size_t size, Rng& rng) {
    auto best = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(fit.size()) - 1));
    for (std::size_t t = 1; t < size; ++t) {
        const auto c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(fit.size()) - 1));
        if (fit[c] < fit[best]) best = c;
    }
    return best;
}

inline std::size_t argmin(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

} // namespace detail

/// Generational GA with tournament selection and one elite, minimizing
/// `problem.fitness`.
///
/// Every individual of every generation draws its randomness from a stream
/// derived from (seed, generation, index), so a run is a pure function of
/// (problem, config, options). The evaluation count is
/// population × (generations + 1) in both crossover modes.
template <class G>
RunResult<G> run_ga(const Problem<G>& problem, const GAConfig& config, const OperatorOptions& options = {}) {
    config.validate();
    if (!problem.fitness || !problem.initialize) throw ConfigError("problem needs a fitness and an initializer");
    const auto crossover = make_crossover<G>(problem.family, config.mode, options);
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = config.population_size;

    std::vector<G> pop;
    pop.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = make_stream(config.seed, {0, i, detail::kInit});
        pop.push_back(problem.initialize(rng));
    }
    auto fit = detail::evaluate_all(problem, pop, config.threads);

    RunResult<G> result;
    result.evaluations = n;
    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        std::vector<G> next;
        next.reserve(n);
        next.push_back(pop[detail::argmin(fit)]);
        for (std::size_t i = 1; i < n; ++i) {
            Rng rng = make_stream(config.seed, {gen, i, detail::kVary});
            const auto a = detail::tournament(fit, config.tournament_size, rng);
            const auto b = detail::tournament(fit, config.tournament_size, rng);
            G child = unit_real(rng) < config.crossover_rate ? crossover(pop[a], pop[b], rng) : pop[a];
            next.push_back(mutate(child, problem.family, config.mutation_rate, options, rng));
        }
        pop = std::move(next);
        fit = detail::evaluate_all(problem, pop, config.threads);
        result.evaluations += n;

        result.best_per_generation.push_back(fit[detail::argmin(fit)]);
        result.mean_per_generation.push_back(std::accumulate(fit.begin(), fit.end(), 0.0) / static_cast<double>(n));
        result.evaluations_per_generation.push_back(result.evaluations);
    }
    const auto best = detail::argmin(fit);
    result.best = pop[best];
    result.best_fitness = fit[best];
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

} // namespace qgx::ga
