#include "qgx/cli/verify.hpp"

#include <array>
#include <utility>

#include "qgx/circular.hpp"
#include "qgx/combinatorics.hpp"
#include "qgx/errors.hpp"
#include "qgx/graphs.hpp"
#include "qgx/grouping.hpp"
#include "qgx/metric.hpp"
#include "qgx/sequences.hpp"
#include "qgx/symmetric.hpp"

namespace qgx::cli {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 4> kSuites{{
    {Suite::metric, "metric"},
    {Suite::group, "group"},
    {Suite::quotient, "quotient"},
    {Suite::segment, "segment"},
}};

SymbolVector random_symbols(Rng& rng, std::size_t n, int k) {
    std::vector<int> v(n);
    for (auto& s : v) s = static_cast<int>(uniform_int(rng, 1, k));
    return SymbolVector(std::move(v), k);
}

void require_metric(const VerifyOptions& o, std::string_view family, std::initializer_list<std::string_view> allowed) {
    if (o.metric.empty()) return;
    for (auto m : allowed)
        if (o.metric == m) return;
    throw InputError("metric '" + o.metric + "' is not available for family '" + std::string(family) + "'");
}

template <class P>
FamilyVerifier verifier(std::function<std::vector<Kit<P>>(const VerifyOptions&)> make) {
    return [make = std::move(make)](Suite s, std::size_t trials, Rng& rng, const VerifyOptions& o)
               -> std::optional<std::vector<VerificationReport>> { return run_suite(s, make(o), trials, rng); };
}

auto symbol_hamming = [](const SymbolVector& a, const SymbolVector& b) { return static_cast<double>(hamming_distance(a, b)); };

std::vector<Kit<SymbolVector>> grouping_kits(const VerifyOptions& o) {
    require_metric(o, "grouping", {"hamming"});
    std::vector<Kit<SymbolVector>> kits;
    for (int k = 2; k <= 4; ++k)
        for (std::size_t n = 1; n <= 6; ++n)
            kits.push_back({relabeling_action(k),
                            [n, k](Rng& rng) { return random_symbols(rng, n, k); },
                            symbol_hamming,
                            li_normalizer(k),
                            [](const SymbolVector& a, const SymbolVector& b, Rng& rng) {
                                return mask_crossover(a, b, uniform_mask(a.size(), rng));
                            }});
    return kits;
}

std::vector<Kit<RealVector>> symmetric_real_kits(const VerifyOptions& o) {
    require_metric(o, "symmetric-real", {"euclidean"});
    std::vector<Kit<RealVector>> kits;
    for (std::size_t n = 1; n <= 5; ++n)
        kits.push_back({coordinate_action_real(n),
                        [n](Rng& rng) {
                            // a coarse grid half of the time, so equal classes and ties occur
                            const bool coarse = fair_coin(rng);
                            std::vector<double> v(n);
                            for (auto& c : v) c = coarse ? static_cast<double>(uniform_int(rng, -2, 2)) : 8.0 * unit_real(rng) - 4.0;
                            return RealVector(std::move(v));
                        },
                        [](const RealVector& a, const RealVector& b) { return euclidean_distance(a, b); },
                        sym_real_normalizer(),
                        [](const RealVector& a, const RealVector& b, Rng& rng) { return line_crossover(a, b, unit_real(rng)); },
                        1e-9,
                        n >= 5 ? std::size_t{8} : std::size_t{1}});
    return kits;
}

std::vector<Kit<SymbolVector>> symmetric_discrete_kits(const VerifyOptions& o) {
    require_metric(o, "symmetric-discrete", {"hamming"});
    std::vector<Kit<SymbolVector>> kits;
    for (std::size_t n = 1; n <= 5; ++n)
        kits.push_back({coordinate_action_discrete(n),
                        [n](Rng& rng) { return random_symbols(rng, n, 3); },
                        symbol_hamming,
                        sym_discrete_normalizer(),
                        [](const SymbolVector& a, const SymbolVector& b, Rng& rng) {
                            return mask_crossover(a, b, uniform_mask(a.size(), rng));
                        },
                        0.0,
                        n >= 5 ? std::size_t{8} : std::size_t{1}});
    return kits;
}

std::vector<Kit<AdjacencyMatrix>> graph_kits(const VerifyOptions& o) {
    require_metric(o, "graph", {"hamming"});
    std::vector<Kit<AdjacencyMatrix>> kits;
    for (std::size_t n = 1; n <= 5; ++n)
        kits.push_back({vertex_relabeling_action(n),
                        [n](Rng& rng) {
                            AdjacencyMatrix g(n);
                            for (std::size_t i = 0; i < n; ++i)
                                for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j, fair_coin(rng));
                            return g;
                        },
                        [](const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
                            return static_cast<double>(hamming_distance(a, b));
                        },
                        exact_graph_normalizer(),
                        [](const AdjacencyMatrix& a, const AdjacencyMatrix& b, Rng& rng) {
                            return upper_mask_crossover(a, b, uniform_mask(upper_cell_count(a.size()), rng));
                        },
                        0.0,
                        n >= 5 ? std::size_t{16} : std::size_t{1}});
    return kits;
}

std::vector<Kit<Permutation>> circular_kits(const VerifyOptions& o) {
    require_metric(o, "circular", {"hamming", "swap"});
    const auto metric = o.metric.empty() ? PermutationMetric::hamming : *parse_permutation_metric(o.metric);
    std::vector<Kit<Permutation>> kits;
    for (std::size_t n = 1; n <= 7; ++n)
        kits.push_back({shift_action(n),
                        [n](Rng& rng) { return random_permutation(n, rng); },
                        [metric](const Permutation& a, const Permutation& b) {
                            return static_cast<double>(permutation_distance(a, b, metric));
                        },
                        circ_normalizer(metric),
                        [](const Permutation& a, const Permutation& b, Rng& rng) { return cycle_crossover(a, b, rng); }});
    return kits;
}

Sequence random_sequence(Rng& rng, std::size_t max_len) {
    std::string s(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_len))), 'a');
    for (auto& c : s) c = "acgt"[uniform_int(rng, 0, 3)];
    return Sequence(std::move(s));
}

// Stretching is not a group action, so only the metric and segment suites apply.
std::optional<std::vector<VerificationReport>> verify_sequences(Suite s, std::size_t trials, Rng& rng,
                                                                const VerifyOptions& o) {
    require_metric(o, "sequence", {"edit"});
    auto d = [](const Sequence& a, const Sequence& b) { return static_cast<double>(edit_distance(a, b)); };
    Sampler<Sequence> sample = [](Rng& r) { return random_sequence(r, 12); };
    if (s == Suite::metric) return std::vector{verify_metric_axioms<Sequence>("metric", d, sample, trials, rng)};
    if (s != Suite::segment) return std::nullopt;
    VerificationReport align{"alignment"}, segment{"homologous-segment"};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto x = sample(rng), y = sample(rng);
        const auto a = optimal_align(x, y);
        align.record(a.mismatches() == edit_distance(x, y) && unstretch(a.left) == x && unstretch(a.right) == y,
                     [&] { return "alignment is not optimal for " + x.str() + " / " + y.str(); });
        const auto z = recombine_alignment(a, uniform_mask(a.length(), rng));
        segment.record(edit_distance(x, z) + edit_distance(z, y) == edit_distance(x, y), [&] {
            return "offspring '" + z.str() + "' leaves the segment of '" + x.str() + "' and '" + y.str() + "'";
        });
    }
    return std::vector{align, segment};
}

} // namespace

std::optional<Suite> parse_suite(std::string_view s) {
    for (auto [suite, n] : kSuites)
        if (n == s) return suite;
    return std::nullopt;
}

std::string_view name(Suite s) {
    for (auto [suite, n] : kSuites)
        if (suite == s) return n;
    return "?";
}

void merge(VerificationReport& total, const VerificationReport& part) {
    total.checks += part.checks;
    if (total.violations == 0 && part.violations > 0) total.first_witness = part.first_witness;
    total.violations += part.violations;
}

VerifierRegistry default_verifiers() {
    return {
        {"grouping", verifier<SymbolVector>(grouping_kits)},
        {"symmetric-real", verifier<RealVector>(symmetric_real_kits)},
        {"symmetric-discrete", verifier<SymbolVector>(symmetric_discrete_kits)},
        {"graph", verifier<AdjacencyMatrix>(graph_kits)},
        {"circular", verifier<Permutation>(circular_kits)},
        {"sequence", verify_sequences},
    };
}

} // namespace qgx::cli
