#pragma once

// Circular permutations as permutations modulo cyclic shifts, the
// position-independent cycle crossover, and a small-n reversal distance.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

enum class PermutationMetric { hamming, swap };

std::size_t permutation_distance(const Permutation& x, const Permutation& y, PermutationMetric metric);
std::optional<PermutationMetric> parse_permutation_metric(std::string_view s);

/// Rotates right by `steps` (mod n): the last `steps` entries move to the
/// front, so shift((1,2,3), 2) = (2,3,1).
Permutation shift(const Permutation& p, std::int64_t steps);

/// The cyclic shift group S_n; element k is the k-step right shift.
GroupAction<Permutation> shift_action(std::size_t n);

struct ShiftMatch {
    Permutation point;  ///< shift(y, steps)
    std::size_t distance = 0;
    std::size_t steps = 0;
};

/// Enumerates the n shifts of `y`; ties go to the smallest step count.
ShiftMatch circ_normalize(const Permutation& x, const Permutation& y,
                          PermutationMetric metric = PermutationMetric::hamming);

std::size_t circ_quotient_distance(const Permutation& x, const Permutation& y,
                                   PermutationMetric metric = PermutationMetric::hamming);

Normalizer<Permutation> circ_normalizer(PermutationMetric metric = PermutationMetric::hamming);

/// Cycle crossover of x and the shift of y closest to x.
Permutation pi_cycle_crossover(const Permutation& x, const Permutation& y, PermutationMetric metric,
                               std::span<const Parent> donors);
Permutation pi_cycle_crossover(const Permutation& x, const Permutation& y, PermutationMetric metric, Rng& rng);

inline constexpr std::size_t kReversalBfsCap = 7;

/// Minimum number of subsequence reversals taking x to y, by breadth-first
/// search over all permutations. Linear permutations only.
std::size_t reversal_distance_bfs(const Permutation& x, const Permutation& y);

} // namespace qgx
