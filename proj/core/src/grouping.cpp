#include "qgx/grouping.hpp"

#include <string>
#include <vector>

#include "qgx/assignment.hpp"
#include "qgx/combinatorics.hpp"
#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

namespace qgx {

namespace {

void require_alphabet(const SymbolVector& a, const SymbolVector& b, int k) {
    if (k < 1) throw ParameterError("alphabet size must be >= 1");
    if (a.size() != b.size()) throw DimensionError("grouping encodings differ in length");
    if (a.alphabet() != k || b.alphabet() != k)
        throw DimensionError("grouping encodings must use the alphabet {1.." + std::to_string(k) + "}");
}

} // namespace

SymbolVector relabel(const SymbolVector& a, const Permutation& sigma) {
    if (sigma.size() != static_cast<std::size_t>(a.alphabet()))
        throw DimensionError("relabeling size " + std::to_string(sigma.size()) + " != alphabet size " +
                             std::to_string(a.alphabet()));
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = sigma(a[i]);
    return SymbolVector(std::move(out), a.alphabet());
}

GroupAction<SymbolVector> relabeling_action(int k) {
    if (k < 1) throw ParameterError("alphabet size must be >= 1");
    const auto kk = static_cast<std::size_t>(k);
    return GroupAction<SymbolVector>("relabel(S" + std::to_string(k) + ")", factorial(kk),
                                     [kk](std::uint64_t g, const SymbolVector& x) {
                                         return relabel(x, nth_permutation(kk, g));
                                     });
}

LabelMatch li_match(const SymbolVector& a, const SymbolVector& b, int k) {
    require_alphabet(a, b, k);
    const auto kk = static_cast<std::size_t>(k);
    // Row = label of b, column = label of a; maximizing agreement.
    CostMatrix cost(kk);
    for (std::size_t p = 0; p < a.size(); ++p)
        cost(static_cast<std::size_t>(b[p] - 1), static_cast<std::size_t>(a[p] - 1)) -= 1.0;
    auto solved = hungarian(cost);
    const auto agreement = static_cast<std::size_t>(-solved.total + 0.5);
    return {std::move(solved.columns), a.size() - agreement};
}

std::size_t li_distance(const SymbolVector& a, const SymbolVector& b, int k) { return li_match(a, b, k).distance; }

SymbolVector li_normalize(const SymbolVector& a, const SymbolVector& b, int k) {
    return relabel(b, li_match(a, b, k).sigma);
}

Normalizer<SymbolVector> li_normalizer(int k) {
    return {[k](const SymbolVector& a, const SymbolVector& b) {
                auto m = li_match(a, b, k);
                return Normalized<SymbolVector>{relabel(b, m.sigma), static_cast<double>(m.distance)};
            },
            true};
}

SymbolVector li_crossover(const SymbolVector& a, const SymbolVector& b, int k, const Mask& mask) {
    return mask_crossover(a, li_normalize(a, b, k), mask);
}

SymbolVector li_crossover(const SymbolVector& a, const SymbolVector& b, int k, Rng& rng) {
    const auto normalized = li_normalize(a, b, k);
    return mask_crossover(a, normalized, uniform_mask(a.size(), rng));
}

} // namespace qgx
