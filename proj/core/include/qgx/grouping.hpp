#pragma once

// k-ary grouping encodings under label permutation: labeling-independent
// distance and the labeling-independent (induced quotient) crossover.

#include <cstddef>

#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

/// output_i = sigma(a_i); `sigma` acts on the k labels.
SymbolVector relabel(const SymbolVector& a, const Permutation& sigma);

/// Σ_k acting on {1..k}^n by relabeling, elements in lexicographic order.
GroupAction<SymbolVector> relabeling_action(int k);

struct LabelMatch {
    Permutation sigma;       ///< optimal relabeling of the second operand
    std::size_t distance = 0;
};

/// Optimal relabeling of `b` against `a` via assignment on the k×k
/// label co-occurrence matrix.
LabelMatch li_match(const SymbolVector& a, const SymbolVector& b, int k);

/// Labeling-independent distance min_σ H(a, σ(b)).
std::size_t li_distance(const SymbolVector& a, const SymbolVector& b, int k);

/// `b` relabeled to be Hamming-closest to `a`.
SymbolVector li_normalize(const SymbolVector& a, const SymbolVector& b, int k);

Normalizer<SymbolVector> li_normalizer(int k);

SymbolVector li_crossover(const SymbolVector& a, const SymbolVector& b, int k, const Mask& mask);
SymbolVector li_crossover(const SymbolVector& a, const SymbolVector& b, int k, Rng& rng);

} // namespace qgx
