#include "qgx/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qgx/assignment.hpp"
#include "qgx/combinatorics.hpp"
#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

namespace qgx {

namespace {

template <class T>
std::vector<T> permuted(std::span<const T> x, const Permutation& sigma) {
    if (sigma.size() != x.size()) throw DimensionError("permutation size differs from vector length");
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[static_cast<std::size_t>(sigma[i] - 1)];
    return out;
}

template <class T>
std::vector<std::size_t> sorted_order(std::span<const T> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
}

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionError("vectors differ in length");
}

} // namespace

RealVector permute_coords(const RealVector& x, const Permutation& sigma) {
    return RealVector(permuted(x.values(), sigma));
}

SymbolVector permute_coords(const SymbolVector& x, const Permutation& sigma) {
    return SymbolVector(permuted(x.values(), sigma), x.alphabet());
}

GroupAction<RealVector> coordinate_action_real(std::size_t n) {
    return GroupAction<RealVector>("coords(S" + std::to_string(n) + ")", factorial(n),
                                   [n](std::uint64_t g, const RealVector& x) {
                                       return permute_coords(x, nth_permutation(n, g));
                                   });
}

GroupAction<SymbolVector> coordinate_action_discrete(std::size_t n) {
    return GroupAction<SymbolVector>("coords(S" + std::to_string(n) + ")", factorial(n),
                                     [n](std::uint64_t g, const SymbolVector& x) {
                                         return permute_coords(x, nth_permutation(n, g));
                                     });
}

Normalized<RealVector> sym_normalize_real(const RealVector& x, const RealVector& y) {
    require_same_length(x.size(), y.size());
    const auto ox = sorted_order(x.values());
    const auto oy = sorted_order(y.values());
    std::vector<double> out(x.size());
    for (std::size_t r = 0; r < out.size(); ++r) out[ox[r]] = y[oy[r]];
    RealVector normalized(std::move(out));
    const double d = euclidean_distance(x, normalized);
    return {std::move(normalized), d};
}

Normalized<RealVector> sym_normalize_real_assignment(const RealVector& x, const RealVector& y) {
    require_same_length(x.size(), y.size());
    const auto n = x.size();
    CostMatrix cost(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double diff = x[i] - y[j];
            cost(i, j) = diff * diff;
        }
    RealVector normalized(permuted(y.values(), hungarian(cost).columns));
    const double d = euclidean_distance(x, normalized);
    return {std::move(normalized), d};
}

Normalized<SymbolVector> sym_normalize_discrete(const SymbolVector& x, const SymbolVector& y) {
    require_same_length(x.size(), y.size());
    if (x.alphabet() != y.alphabet()) throw DimensionError("vectors use different alphabets");
    const auto n = x.size();
    CostMatrix cost(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost(i, j) = x[i] != y[j] ? 1.0 : 0.0;
    SymbolVector normalized(permuted(y.values(), hungarian(cost).columns), y.alphabet());
    const auto d = static_cast<double>(hamming_distance(x, normalized));
    return {std::move(normalized), d};
}

Normalizer<RealVector> sym_real_normalizer() { return {sym_normalize_real, true}; }
Normalizer<SymbolVector> sym_discrete_normalizer() { return {sym_normalize_discrete, true}; }

RealVector sym_iq_crossover_real(const RealVector& x, const RealVector& y, double lambda) {
    return line_crossover(x, sym_normalize_real(x, y).point, lambda);
}

RealVector sym_iq_crossover_real(const RealVector& x, const RealVector& y, Rng& rng) {
    const auto normalized = sym_normalize_real(x, y);
    return line_crossover(x, normalized.point, unit_real(rng));
}

SymbolVector sym_iq_crossover_discrete(const SymbolVector& x, const SymbolVector& y, const Mask& mask) {
    return mask_crossover(x, sym_normalize_discrete(x, y).point, mask);
}

SymbolVector sym_iq_crossover_discrete(const SymbolVector& x, const SymbolVector& y, Rng& rng) {
    const auto normalized = sym_normalize_discrete(x, y);
    return mask_crossover(x, normalized.point, uniform_mask(x.size(), rng));
}

double evaluate(SymmetricFunction f, std::span<const double> x) {
    switch (f) {
    case SymmetricFunction::sum_squares:
        return std::accumulate(x.begin(), x.end(), 0.0, [](double s, double v) { return s + v * v; });
    case SymmetricFunction::product:
        return std::accumulate(x.begin(), x.end(), 1.0, std::multiplies<>());
    case SymmetricFunction::range: {
        const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
        return x.empty() ? 0.0 : *hi - *lo;
    }
    case SymmetricFunction::sorted_target: {
        std::vector<double> s(x.begin(), x.end());
        std::sort(s.begin(), s.end());
        double total = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double d = s[i] - static_cast<double>(i + 1);
            total += d * d;
        }
        return total;
    }
    }
    return 0.0;
}

std::string_view name(SymmetricFunction f) {
    switch (f) {
    case SymmetricFunction::sum_squares: return "sum_squares";
    case SymmetricFunction::product: return "product";
    case SymmetricFunction::range: return "range";
    case SymmetricFunction::sorted_target: return "sorted_target";
    }
    return "?";
}

std::optional<SymmetricFunction> parse_symmetric_function(std::string_view s) {
    for (auto f : {SymmetricFunction::sum_squares, SymmetricFunction::product, SymmetricFunction::range,
                   SymmetricFunction::sorted_target})
        if (name(f) == s) return f;
    return std::nullopt;
}

} // namespace qgx
