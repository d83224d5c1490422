#pragma once

// Property-verification suites run by `qgx verify`: each family contributes
// a list of kits (one per problem size) and every suite is executed over
// all kits with the trial budget split evenly between them.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgx/quotient.hpp"

namespace qgx::cli {

enum class Suite { metric, group, quotient, segment };

std::optional<Suite> parse_suite(std::string_view s);
std::string_view name(Suite s);

/// Everything a suite needs to exercise one family at one size.
template <class P>
struct Kit {
    GroupAction<P> action;
    Sampler<P> sample;
    std::function<double(const P&, const P&)> distance;
    Normalizer<P> normalizer;
    /// Base geometric crossover applied after normalization.
    std::function<P(const P&, const P&, Rng&)> crossover;
    double tolerance = 0.0;
    std::size_t two_sided_stride = 1;
};

/// Folds `part` into `total` (counts add, first witness wins).
void merge(VerificationReport& total, const VerificationReport& part);

template <class P>
std::vector<VerificationReport> run_suite(Suite suite, const std::vector<Kit<P>>& kits, std::size_t trials, Rng& rng) {
    using std::to_string;
    const std::size_t per_kit = std::max<std::size_t>(1, (trials + kits.size() - 1) / kits.size());
    std::vector<VerificationReport> out;
    auto fold = [&](std::size_t slot, const VerificationReport& r, std::string label) {
        if (out.size() <= slot) out.push_back(VerificationReport{std::move(label)});
        merge(out[slot], r);
    };
    for (const auto& kit : kits) {
        auto qd = [&](const P& a, const P& b) { return quotient_distance(a, b, kit.action, kit.distance); };
        switch (suite) {
        case Suite::metric:
            fold(0, verify_metric_axioms<P>("metric", kit.distance, kit.sample, per_kit, rng, kit.tolerance), "metric");
            fold(1, verify_metric_axioms<P>("quotient-pseudometric", qd, kit.sample, per_kit, rng, kit.tolerance, false),
                 "quotient-pseudometric");
            break;
        case Suite::group:
            fold(0, verify_equivalence(kit.action, kit.sample, per_kit, rng), "equivalence");
            fold(1, verify_isometry(kit.action, kit.distance, kit.sample, per_kit, rng, kit.tolerance), "isometry");
            break;
        case Suite::quotient:
            fold(0, verify_quotient_metric(kit.action, kit.distance, kit.sample, per_kit, rng, kit.tolerance,
                                           kit.two_sided_stride),
                 "quotient-metric");
            break;
        case Suite::segment: {
            VerificationReport normal{"normalizer"}, segment{"quotient-segment"};
            for (std::size_t t = 0; t < per_kit; ++t) {
                const P x = kit.sample(rng), y = kit.sample(rng);
                const auto n = kit.normalizer(x, y);
                normal.record(same_class(n.point, y, kit.action) &&
                                  detail::close(n.distance, qd(x, y), kit.tolerance) &&
                                  detail::close(n.distance, kit.distance(x, n.point), kit.tolerance),
                              [&] { return "normalizer is not optimal at x=" + to_string(x) + " y=" + to_string(y); });
                const P z = induced_quotient_crossover(x, y, kit.normalizer, kit.crossover, rng);
                segment.record(in_quotient_segment(x, z, y, qd, kit.tolerance), [&] {
                    return "offspring z=" + to_string(z) + " leaves the segment of x=" + to_string(x) +
                           " y=" + to_string(y);
                });
            }
            fold(0, normal, "normalizer");
            fold(1, segment, "quotient-segment");
            break;
        }
        }
    }
    return out;
}

struct VerifyOptions {
    std::string metric;  ///< empty selects the family default
};

/// Runs one suite for one family; returns nothing when the family does not
/// support the suite. Throws InputError for an unsupported metric.
using FamilyVerifier =
    std::function<std::optional<std::vector<VerificationReport>>(Suite, std::size_t trials, Rng&, const VerifyOptions&)>;

using VerifierRegistry = std::map<std::string, FamilyVerifier, std::less<>>;

/// Verifiers for the six bundled families.
VerifierRegistry default_verifiers();

} // namespace qgx::cli
