#pragma once

#include <functional>

#include "qgx/ga/config.hpp"
#include "qgx/graphs.hpp"
#include "qgx/sequences.hpp"
#include "qgx/types.hpp"

namespace qgx::ga {

template <class G>
using Crossover = std::function<G(const G&, const G&, Rng&)>;

/// Raw or induced-quotient crossover for `family`; throws ConfigError when
/// `G` is not the genotype of `family`.
template <class G>
Crossover<G> make_crossover(Family family, CrossoverMode mode, const OperatorOptions& options);

template <>
Crossover<SymbolVector> make_crossover(Family, CrossoverMode, const OperatorOptions&);
template <>
Crossover<RealVector> make_crossover(Family, CrossoverMode, const OperatorOptions&);
template <>
Crossover<Permutation> make_crossover(Family, CrossoverMode, const OperatorOptions&);
template <>
Crossover<AdjacencyMatrix> make_crossover(Family, CrossoverMode, const OperatorOptions&);
template <>
Crossover<Sequence> make_crossover(Family, CrossoverMode, const OperatorOptions&);

/// Per-position random relabel with probability `rate`.
SymbolVector mutate(const SymbolVector& g, Family family, double rate, const OperatorOptions& options, Rng& rng);
/// Per-coordinate Gaussian perturbation with probability `rate`.
RealVector mutate(const RealVector& g, Family family, double rate, const OperatorOptions& options, Rng& rng);
/// One random transposition with probability `rate`.
Permutation mutate(const Permutation& g, Family family, double rate, const OperatorOptions& options, Rng& rng);
/// Per upper-triangle cell flip with probability `rate`.
AdjacencyMatrix mutate(const AdjacencyMatrix& g, Family family, double rate, const OperatorOptions& options,
                       Rng& rng);
/// One random insertion, deletion or substitution with probability `rate`.
Sequence mutate(const Sequence& g, Family family, double rate, const OperatorOptions& options, Rng& rng);

} // namespace qgx::ga
