#pragma once

#include <cstddef>
#include <vector>

#include "qgx/types.hpp"

namespace qgx {

/// Square matrix of finite costs, row-major.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(std::size_t n, double fill = 0.0) : n_(n), entries_(n * n, fill) {}
    explicit CostMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

struct Assignment {
    /// Row i (1-based) is matched to column `columns(i)`.
    Permutation columns;
    double total = 0.0;
};

/// Minimum-cost perfect matching by the O(n³) shortest augmenting path
/// method with row/column potentials. Rows are inserted in ascending order
/// and columns scanned ascending, so equal-cost optima resolve the same way
/// on every call.
Assignment hungarian(const CostMatrix& cost);

} // namespace qgx
