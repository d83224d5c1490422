#pragma once

#include <cstddef>
#include <cstdint>

#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

/// n!, saturating at UINT64_MAX.
std::uint64_t factorial(std::size_t n) noexcept;

/// The permutation of rank `rank` (0-based) in lexicographic order of
/// one-line notation. Rank 0 is the identity.
Permutation nth_permutation(std::size_t n, std::uint64_t rank);

/// Uniformly random permutation (Fisher-Yates).
Permutation random_permutation(std::size_t n, Rng& rng);

} // namespace qgx
