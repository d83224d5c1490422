#include "qgx/metric.hpp"

#include <string>

namespace qgx {

namespace {

template <class A, class B>
void require_same_length(const A& a, const B& b, const char* what) {
    if (a.size() != b.size())
        throw DimensionError(std::string(what) + ": lengths " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()) + " differ");
}

template <class Range>
std::size_t count_mismatches(const Range& a, const Range& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

} // namespace

std::size_t hamming_distance(const SymbolVector& a, const SymbolVector& b) {
    require_same_length(a, b, "hamming_distance");
    if (a.alphabet() != b.alphabet()) throw DimensionError("hamming_distance: alphabets differ");
    return count_mismatches(a.values(), b.values());
}

std::size_t hamming_distance(const Permutation& a, const Permutation& b) {
    require_same_length(a, b, "hamming_distance");
    return count_mismatches(a.values(), b.values());
}

double euclidean_distance(const RealVector& a, const RealVector& b) {
    require_same_length(a, b, "euclidean_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::size_t swap_distance(const Permutation& p, const Permutation& q) {
    require_same_length(p, q, "swap_distance");
    // Cycles of the position map i -> position of p[i] in q.
    const auto n = p.size();
    std::vector<std::size_t> where(n + 1);
    for (std::size_t i = 0; i < n; ++i) where[static_cast<std::size_t>(q[i])] = i;
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t i = s; !seen[i]; i = where[static_cast<std::size_t>(p[i])]) seen[i] = true;
    }
    return n - cycles;
}

Mask uniform_mask(std::size_t n, Rng& rng, double p_first) {
    if (!(p_first >= 0.0 && p_first <= 1.0)) throw ParameterError("mask probability must lie in [0,1]");
    std::vector<Parent> bits(n);
    for (auto& b : bits) b = unit_real(rng) < p_first ? Parent::first : Parent::second;
    return Mask(std::move(bits));
}

SymbolVector mask_crossover(const SymbolVector& p1, const SymbolVector& p2, const Mask& m) {
    if (p1.alphabet() != p2.alphabet()) throw DimensionError("mask_crossover: alphabets differ");
    return SymbolVector(mask_select(p1.values(), p2.values(), m), p1.alphabet());
}

RealVector line_crossover(const RealVector& p1, const RealVector& p2, double lambda) {
    require_same_length(p1, p2, "line_crossover");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParameterError("line_crossover: lambda must lie in [0,1]");
    std::vector<double> out(p1.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda * p1[i] + (1.0 - lambda) * p2[i];
    return RealVector(std::move(out));
}

std::vector<std::vector<std::size_t>> position_cycles(const Permutation& p1, const Permutation& p2) {
    require_same_length(p1, p2, "cycle_crossover");
    const auto n = p1.size();
    std::vector<std::size_t> where_in_p1(n + 1);
    for (std::size_t i = 0; i < n; ++i) where_in_p1[static_cast<std::size_t>(p1[i])] = i;

    std::vector<std::vector<std::size_t>> cycles;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto& cyc = cycles.emplace_back();
        for (std::size_t i = s; !seen[i]; i = where_in_p1[static_cast<std::size_t>(p2[i])]) {
            seen[i] = true;
            cyc.push_back(i);
        }
    }
    return cycles;
}

Permutation cycle_crossover(const Permutation& p1, const Permutation& p2, std::span<const Parent> donors) {
    const auto cycles = position_cycles(p1, p2);
    if (donors.size() != cycles.size()) throw DimensionError("cycle_crossover: one donor per cycle required");
    std::vector<int> child(p1.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        const auto& src = donors[c] == Parent::first ? p1 : p2;
        for (auto i : cycles[c]) child[i] = src[i];
    }
    return Permutation(std::move(child));
}

Permutation cycle_crossover(const Permutation& p1, const Permutation& p2, Rng& rng) {
    const auto n_cycles = position_cycles(p1, p2).size();
    std::vector<Parent> donors(n_cycles);
    for (auto& d : donors) d = fair_coin(rng) ? Parent::first : Parent::second;
    return cycle_crossover(p1, p2, donors);
}

} // namespace qgx
