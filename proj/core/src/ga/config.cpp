#include "qgx/ga/config.hpp"

#include <array>
#include <utility>

#include "qgx/errors.hpp"

namespace qgx::ga {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilies{{
    {Family::grouping, "grouping"},
    {Family::symmetric_real, "symmetric-real"},
    {Family::symmetric_discrete, "symmetric-discrete"},
    {Family::graph, "graph"},
    {Family::circular, "circular"},
    {Family::sequence, "sequence"},
}};

} // namespace

std::string_view name(Family f) {
    for (auto [fam, n] : kFamilies)
        if (fam == f) return n;
    return "?";
}

std::string_view name(CrossoverMode m) { return m == CrossoverMode::raw ? "raw" : "quotient"; }

std::optional<Family> parse_family(std::string_view s) {
    for (auto [fam, n] : kFamilies)
        if (n == s) return fam;
    return std::nullopt;
}

std::optional<CrossoverMode> parse_mode(std::string_view s) {
    if (s == "raw") return CrossoverMode::raw;
    if (s == "quotient") return CrossoverMode::quotient;
    return std::nullopt;
}

void GAConfig::validate() const {
    if (population_size < 2 || population_size % 2 != 0)
        throw ConfigError("population_size must be even and >= 2");
    if (generations < 1) throw ConfigError("generations must be >= 1");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw ConfigError("crossover_rate must lie in [0,1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw ConfigError("mutation_rate must lie in [0,1]");
    if (tournament_size < 1) throw ConfigError("tournament_size must be >= 1");
    if (threads < 1) throw ConfigError("threads must be >= 1");
}

} // namespace qgx::ga
