#include "qgx/circular.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

namespace qgx {

std::size_t permutation_distance(const Permutation& x, const Permutation& y, PermutationMetric metric) {
    return metric == PermutationMetric::hamming ? hamming_distance(x, y) : swap_distance(x, y);
}

std::optional<PermutationMetric> parse_permutation_metric(std::string_view s) {
    if (s == "hamming") return PermutationMetric::hamming;
    if (s == "swap") return PermutationMetric::swap;
    return std::nullopt;
}

Permutation shift(const Permutation& p, std::int64_t steps) {
    const auto n = static_cast<std::int64_t>(p.size());
    if (n == 0) return p;
    const auto k = static_cast<std::size_t>(((steps % n) + n) % n);
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[(i + k) % p.size()] = p[i];
    return Permutation(std::move(out));
}

GroupAction<Permutation> shift_action(std::size_t n) {
    return GroupAction<Permutation>("shift(S" + std::to_string(n) + ")", std::max<std::size_t>(n, 1),
                                    [](std::uint64_t k, const Permutation& p) {
                                        return shift(p, static_cast<std::int64_t>(k));
                                    });
}

ShiftMatch circ_normalize(const Permutation& x, const Permutation& y, PermutationMetric metric) {
    if (x.size() != y.size()) throw DimensionError("permutations differ in size");
    ShiftMatch best{y, permutation_distance(x, y, metric), 0};
    for (std::size_t k = 1; k < y.size(); ++k) {
        auto candidate = shift(y, static_cast<std::int64_t>(k));
        const auto d = permutation_distance(x, candidate, metric);
        if (d < best.distance) best = {std::move(candidate), d, k};
    }
    return best;
}

std::size_t circ_quotient_distance(const Permutation& x, const Permutation& y, PermutationMetric metric) {
    return circ_normalize(x, y, metric).distance;
}

Normalizer<Permutation> circ_normalizer(PermutationMetric metric) {
    return {[metric](const Permutation& x, const Permutation& y) {
                auto m = circ_normalize(x, y, metric);
                return Normalized<Permutation>{std::move(m.point), static_cast<double>(m.distance)};
            },
            true};
}

Permutation pi_cycle_crossover(const Permutation& x, const Permutation& y, PermutationMetric metric,
                               std::span<const Parent> donors) {
    return cycle_crossover(x, circ_normalize(x, y, metric).point, donors);
}

Permutation pi_cycle_crossover(const Permutation& x, const Permutation& y, PermutationMetric metric, Rng& rng) {
    return cycle_crossover(x, circ_normalize(x, y, metric).point, rng);
}

std::size_t reversal_distance_bfs(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw DimensionError("permutations differ in size");
    if (x.size() > kReversalBfsCap)
        throw SizeCapError("reversal distance BFS is capped at n = " + std::to_string(kReversalBfsCap));
    using State = std::vector<int>;
    const State start(x.values().begin(), x.values().end());
    const State goal(y.values().begin(), y.values().end());
    std::map<State, std::size_t> dist{{start, 0}};
    std::deque<State> queue{start};
    while (!queue.empty()) {
        State s = std::move(queue.front());
        queue.pop_front();
        const auto ds = dist[s];
        if (s == goal) return ds;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                State t = s;
                std::reverse(t.begin() + static_cast<std::ptrdiff_t>(i), t.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                if (dist.emplace(t, ds + 1).second) queue.push_back(std::move(t));
            }
    }
    return SIZE_MAX;  // unreachable: reversals generate the symmetric group
}

} // namespace qgx
