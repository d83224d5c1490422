#include "qgx/ga/operators.hpp"

#include <string>

#include "qgx/circular.hpp"
#include "qgx/errors.hpp"
#include "qgx/grouping.hpp"
#include "qgx/metric.hpp"
#include "qgx/symmetric.hpp"

namespace qgx::ga {

namespace {

[[noreturn]] void wrong_family(Family f, const char* genotype) {
    throw ConfigError("family '" + std::string(name(f)) + "' does not use " + genotype + " genotypes");
}

bool hit(double rate, Rng& rng) { return rate > 0.0 && unit_real(rng) < rate; }

} // namespace

template <>
Crossover<SymbolVector> make_crossover(Family family, CrossoverMode mode, const OperatorOptions&) {
    if (family != Family::grouping && family != Family::symmetric_discrete) wrong_family(family, "k-ary vector");
    if (mode == CrossoverMode::raw)
        return [](const SymbolVector& a, const SymbolVector& b, Rng& rng) {
            return mask_crossover(a, b, uniform_mask(a.size(), rng));
        };
    if (family == Family::grouping)
        return [](const SymbolVector& a, const SymbolVector& b, Rng& rng) {
            return li_crossover(a, b, a.alphabet(), rng);
        };
    return [](const SymbolVector& a, const SymbolVector& b, Rng& rng) { return sym_iq_crossover_discrete(a, b, rng); };
}

template <>
Crossover<RealVector> make_crossover(Family family, CrossoverMode mode, const OperatorOptions&) {
    if (family != Family::symmetric_real) wrong_family(family, "real vector");
    if (mode == CrossoverMode::raw)
        return [](const RealVector& a, const RealVector& b, Rng& rng) { return line_crossover(a, b, unit_real(rng)); };
    return [](const RealVector& a, const RealVector& b, Rng& rng) { return sym_iq_crossover_real(a, b, rng); };
}

template <>
Crossover<Permutation> make_crossover(Family family, CrossoverMode mode, const OperatorOptions& options) {
    if (family != Family::circular) wrong_family(family, "permutation");
    if (mode == CrossoverMode::raw)
        return [](const Permutation& a, const Permutation& b, Rng& rng) { return cycle_crossover(a, b, rng); };
    return [metric = options.permutation_metric](const Permutation& a, const Permutation& b, Rng& rng) {
        return pi_cycle_crossover(a, b, metric, rng);
    };
}

template <>
Crossover<AdjacencyMatrix> make_crossover(Family family, CrossoverMode mode, const OperatorOptions& options) {
    if (family != Family::graph) wrong_family(family, "adjacency matrix");
    if (mode == CrossoverMode::raw)
        return [](const AdjacencyMatrix& a, const AdjacencyMatrix& b, Rng& rng) {
            return upper_mask_crossover(a, b, uniform_mask(upper_cell_count(a.size()), rng));
        };
    return [matcher = auto_graph_matcher(options.graph_restarts)](const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                                                                  Rng& rng) {
        return graph_iq_crossover(a, b, matcher, rng);
    };
}

template <>
Crossover<Sequence> make_crossover(Family family, CrossoverMode mode, const OperatorOptions&) {
    if (family != Family::sequence) wrong_family(family, "sequence");
    if (mode == CrossoverMode::raw)
        return [](const Sequence& a, const Sequence& b, Rng& rng) { return naive_sequence_crossover(a, b, rng); };
    return [](const Sequence& a, const Sequence& b, Rng& rng) { return homologous_crossover(a, b, rng); };
}

SymbolVector mutate(const SymbolVector& g, Family family, double rate, const OperatorOptions&, Rng& rng) {
    if (family != Family::grouping && family != Family::symmetric_discrete) wrong_family(family, "k-ary vector");
    SymbolVector out = g;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (hit(rate, rng)) out.set(i, static_cast<int>(uniform_int(rng, 1, g.alphabet())));
    return out;
}

RealVector mutate(const RealVector& g, Family family, double rate, const OperatorOptions& options, Rng& rng) {
    if (family != Family::symmetric_real) wrong_family(family, "real vector");
    RealVector out = g;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (hit(rate, rng)) out.set(i, out[i] + options.mutation_sigma * standard_normal(rng));
    return out;
}

Permutation mutate(const Permutation& g, Family family, double rate, const OperatorOptions&, Rng& rng) {
    if (family != Family::circular) wrong_family(family, "permutation");
    Permutation out = g;
    if (g.size() >= 2 && hit(rate, rng)) {
        const auto n = static_cast<std::int64_t>(g.size());
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, n - 2));
        if (j >= i) ++j;
        out.swap_positions(i, j);
    }
    return out;
}

AdjacencyMatrix mutate(const AdjacencyMatrix& g, Family family, double rate, const OperatorOptions&, Rng& rng) {
    if (family != Family::graph) wrong_family(family, "adjacency matrix");
    AdjacencyMatrix out = g;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (hit(rate, rng)) out.set_edge(i, j, !out.edge(i, j));
    return out;
}

Sequence mutate(const Sequence& g, Family family, double rate, const OperatorOptions& options, Rng& rng) {
    if (family != Family::sequence) wrong_family(family, "sequence");
    const auto& alphabet = options.sequence_alphabet;
    if (alphabet.empty() || alphabet.find(kGap) != std::string::npos)
        throw ConfigError("sequence alphabet must be non-empty and gap-free");
    if (!hit(rate, rng)) return g;
    auto letter = [&] { return alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1))]; };
    std::string s = g.str();
    const auto kind = g.empty() ? 0 : uniform_int(rng, 0, 2);
    if (kind == 0) {
        const auto pos = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(s.size())));
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), letter());
    } else {
        const auto pos = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(s.size()) - 1));
        if (kind == 1)
            s.erase(pos, 1);
        else
            s[pos] = letter();
    }
    return Sequence(std::move(s));
}

} // namespace qgx::ga
