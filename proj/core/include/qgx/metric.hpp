#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

/// Absolute tolerance used for real-valued metric comparisons.
inline constexpr double kRealTolerance = 1e-9;

std::size_t hamming_distance(const SymbolVector& a, const SymbolVector& b);
std::size_t hamming_distance(const Permutation& a, const Permutation& b);

double euclidean_distance(const RealVector& a, const RealVector& b);

/// Minimum number of transpositions taking `p` to `q`: n minus the number
/// of cycles of q∘p⁻¹.
std::size_t swap_distance(const Permutation& p, const Permutation& q);

/// Metric-segment membership: |d(x,z) + d(z,y) - d(x,y)| <= tol.
template <class Point, class Metric>
bool in_segment(const Point& x, const Point& z, const Point& y, Metric&& d, double tol = 0.0) {
    const double lhs = static_cast<double>(d(x, z)) + static_cast<double>(d(z, y));
    return std::abs(lhs - static_cast<double>(d(x, y))) <= tol;
}

/// Positionwise Bernoulli mask; `p_first` is the probability of inheriting from the first parent.
Mask uniform_mask(std::size_t n, Rng& rng, double p_first = 0.5);

/// Generic positionwise recombination used by every mask-based crossover.
template <class T>
std::vector<T> mask_select(std::span<const T> p1, std::span<const T> p2, const Mask& m) {
    if (p1.size() != p2.size() || p1.size() != m.size())
        throw DimensionError("mask crossover operands differ in length");
    std::vector<T> out(p1.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = m[i] == Parent::first ? p1[i] : p2[i];
    return out;
}

SymbolVector mask_crossover(const SymbolVector& p1, const SymbolVector& p2, const Mask& m);

/// Convex combination lambda·p1 + (1-lambda)·p2.
RealVector line_crossover(const RealVector& p1, const RealVector& p2, double lambda);

/// Position cycles of a parent pair. Each cycle is a list of 0-based
/// positions, ordered by smallest position.
std::vector<std::vector<std::size_t>> position_cycles(const Permutation& p1, const Permutation& p2);

/// Cycle crossover with the donor of cycle `c` given by `donors[c]`.
Permutation cycle_crossover(const Permutation& p1, const Permutation& p2, std::span<const Parent> donors);

/// Cycle crossover with one fair coin per cycle.
Permutation cycle_crossover(const Permutation& p1, const Permutation& p2, Rng& rng);

} // namespace qgx
