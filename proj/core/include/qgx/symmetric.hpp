#pragma once

// Vectors under coordinate permutation: the quotient geometry behind
// symmetric fitness functions, for real (Euclidean) and k-ary (Hamming)
// genotypes.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

/// output_i = x_{sigma(i)}.
RealVector permute_coords(const RealVector& x, const Permutation& sigma);
SymbolVector permute_coords(const SymbolVector& x, const Permutation& sigma);

/// Σ_n acting on coordinates, elements in lexicographic order.
GroupAction<RealVector> coordinate_action_real(std::size_t n);
GroupAction<SymbolVector> coordinate_action_discrete(std::size_t n);

/// Rearrangement of `y` closest to `x` in Euclidean distance, by sort
/// matching: the r-th smallest entry of y goes where the r-th smallest
/// entry of x sits (equal values ordered by index).
Normalized<RealVector> sym_normalize_real(const RealVector& x, const RealVector& y);

/// The same minimization solved as an assignment on squared differences.
Normalized<RealVector> sym_normalize_real_assignment(const RealVector& x, const RealVector& y);

/// Rearrangement of `y` closest to `x` in Hamming distance (assignment on
/// mismatch costs).
Normalized<SymbolVector> sym_normalize_discrete(const SymbolVector& x, const SymbolVector& y);

Normalizer<RealVector> sym_real_normalizer();
Normalizer<SymbolVector> sym_discrete_normalizer();

RealVector sym_iq_crossover_real(const RealVector& x, const RealVector& y, double lambda);
RealVector sym_iq_crossover_real(const RealVector& x, const RealVector& y, Rng& rng);

SymbolVector sym_iq_crossover_discrete(const SymbolVector& x, const SymbolVector& y, const Mask& mask);
SymbolVector sym_iq_crossover_discrete(const SymbolVector& x, const SymbolVector& y, Rng& rng);

/// Bundled symmetric test functions (all minimized).
enum class SymmetricFunction {
    sum_squares,   ///< Σ x_i²
    product,       ///< Π x_i
    range,         ///< max - min
    sorted_target  ///< Σ (s_i - i)² over the ascending sort s; zero on any rearrangement of (1..n)
};

double evaluate(SymmetricFunction f, std::span<const double> x);
std::string_view name(SymmetricFunction f);
std::optional<SymmetricFunction> parse_symmetric_function(std::string_view s);

} // namespace qgx
