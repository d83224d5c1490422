#include "qgx/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qgx/errors.hpp"

namespace qgx {

CostMatrix::CostMatrix(const std::vector<std::vector<double>>& rows) : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw InputError("cost matrix must be square");
        for (double v : r) {
            if (!std::isfinite(v)) throw InputError("cost matrix entries must be finite");
            entries_.push_back(v);
        }
    }
}

Assignment hungarian(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!std::isfinite(cost(r, c))) throw InputError("cost matrix entries must be finite");
    if (n == 0) return {Permutation(), 0.0};

    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based arrays; index 0 is the virtual column used to start each search.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
    std::vector<bool> used(n + 1);

    for (std::size_t row = 1; row <= n; ++row) {
        match_col[0] = row;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = match_col[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match_col[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match_col[j0] = match_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> columns(n);
    for (std::size_t j = 1; j <= n; ++j) columns[match_col[j] - 1] = static_cast<int>(j);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost(i, static_cast<std::size_t>(columns[i] - 1));
    return {Permutation(std::move(columns)), total};
}

} // namespace qgx
