#pragma once

// Group actions as isometry sets, quotient distance, normalization and the
// induced quotient crossover, plus executable checks of the properties the
// construction relies on (equivalence, isometry, quotient metric).

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qgx/errors.hpp"
#include "qgx/rng.hpp"

namespace qgx {

inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;

/// Tie-break policy for enumeration normalizers. Points that are totally
/// ordered break ties lexicographically; specialize to `true` to break ties
/// by smallest enumeration index instead.
template <class Point>
struct tie_break_by_index : std::bool_constant<!std::totally_ordered<Point>> {};

/// A finite, enumerable set of transformations of `Point`, addressed by
/// index 0..order-1. A proper action is closed under composition and
/// inverse and contains the identity; `verify_equivalence` checks this.
template <class Point>
class GroupAction {
public:
    using Apply = std::function<Point(std::uint64_t, const Point&)>;
    using Transform = std::function<Point(const Point&)>;

    GroupAction(std::string name, std::uint64_t order, Apply apply)
        : name_(std::move(name)), order_(order), apply_(std::move(apply)) {
        if (order_ == 0) throw InputError("group action must have at least one element");
    }

    static GroupAction trivial() {
        return GroupAction("trivial", 1, [](std::uint64_t, const Point& x) { return x; });
    }

    /// Builds an action from an explicit element list (used for hand-built
    /// fixtures, which need not be groups).
    static GroupAction from_elements(std::string name, std::vector<Transform> elements) {
        const auto n = elements.size();
        return GroupAction(std::move(name), n,
                           [els = std::move(elements)](std::uint64_t g, const Point& x) { return els.at(g)(x); });
    }

    const std::string& name() const noexcept { return name_; }
    std::uint64_t order() const noexcept { return order_; }
    Point apply(std::uint64_t g, const Point& x) const { return apply_(g, x); }

    void require_enumerable(std::uint64_t cap) const {
        if (order_ > cap)
            throw OrbitTooLargeError("action '" + name_ + "' has " + std::to_string(order_) +
                                     " elements, above the enumeration cap of " + std::to_string(cap));
    }

private:
    std::string name_;
    std::uint64_t order_;
    Apply apply_;
};

/// Result of normalizing a second parent against a first.
template <class Point>
struct Normalized {
    Point point;
    double distance = 0.0;
};

/// A normalization procedure `(x, y) -> (y*, d(x, y*))` with `y*` in the
/// class of `y`. `exact` means `d(x, y*)` is the quotient distance.
template <class Point>
struct Normalizer {
    std::function<Normalized<Point>(const Point&, const Point&)> normalize;
    bool exact = true;

    Normalized<Point> operator()(const Point& x, const Point& y) const { return normalize(x, y); }
};

template <class Point>
std::vector<Point> orbit(const Point& x, const GroupAction<Point>& action, std::uint64_t cap = kDefaultOrbitCap) {
    action.require_enumerable(cap);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(action.order()));
    for (std::uint64_t g = 0; g < action.order(); ++g) out.push_back(action.apply(g, x));
    if constexpr (std::totally_ordered<Point>) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    } else {
        std::vector<Point> distinct;
        for (auto& p : out)
            if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(std::move(p));
        out = std::move(distinct);
    }
    return out;
}

template <class Point>
bool same_class(const Point& x, const Point& y, const GroupAction<Point>& action,
                std::uint64_t cap = kDefaultOrbitCap) {
    action.require_enumerable(cap);
    for (std::uint64_t g = 0; g < action.order(); ++g)
        if (action.apply(g, y) == x) return true;
    return false;
}

/// Exhaustive normalization: the member of y's orbit closest to x. Ties go
/// to the lexicographically smallest point, or to the smallest element
/// index when `tie_break_by_index<Point>` holds.
template <class Point, class Metric>
Normalized<Point> normalize_by_enumeration(const Point& x, const Point& y, const GroupAction<Point>& action,
                                           Metric&& d, std::uint64_t cap = kDefaultOrbitCap) {
    action.require_enumerable(cap);
    std::optional<Normalized<Point>> best;
    for (std::uint64_t g = 0; g < action.order(); ++g) {
        Point candidate = action.apply(g, y);
        const double dist = static_cast<double>(d(x, candidate));
        bool take = !best || dist < best->distance;
        if constexpr (!tie_break_by_index<Point>::value) {
            if (best && dist == best->distance && candidate < best->point) take = true;
        }
        if (take) best = Normalized<Point>{std::move(candidate), dist};
    }
    return *best;
}

/// One-sided quotient distance min_g d(x, g(y)).
template <class Point, class Metric>
double quotient_distance(const Point& x, const Point& y, const GroupAction<Point>& action, Metric&& d,
                         std::uint64_t cap = kDefaultOrbitCap) {
    action.require_enumerable(cap);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t g = 0; g < action.order(); ++g)
        best = std::min(best, static_cast<double>(d(x, action.apply(g, y))));
    return best;
}

/// Two-sided quotient distance min over both orbits; used to cross-check
/// the one-sided form.
template <class Point, class Metric>
double quotient_distance_two_sided(const Point& x, const Point& y, const GroupAction<Point>& action, Metric&& d,
                                   std::uint64_t cap = kDefaultOrbitCap) {
    const auto ox = orbit(x, action, cap);
    const auto oy = orbit(y, action, cap);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : ox)
        for (const auto& b : oy) best = std::min(best, static_cast<double>(d(a, b)));
    return best;
}

template <class Point, class Metric>
Normalizer<Point> make_enumeration_normalizer(GroupAction<Point> action, Metric d,
                                              std::uint64_t cap = kDefaultOrbitCap) {
    return Normalizer<Point>{[action = std::move(action), d = std::move(d), cap](const Point& x, const Point& y) {
                                 return normalize_by_enumeration(x, y, action, d, cap);
                             },
                             true};
}

/// Normalizes the second parent against the first, then applies the base
/// geometric crossover `gx(x, y*, rng)`.
template <class Point, class Crossover>
Point induced_quotient_crossover(const Point& x, const Point& y, const Normalizer<Point>& norm, Crossover&& gx,
                                 Rng& rng) {
    const auto normalized = norm(x, y);
    return gx(x, normalized.point, rng);
}

/// Quotient-segment membership: |qd(x,z) + qd(z,y) - qd(x,y)| <= tol.
template <class Point, class QuotientMetric>
bool in_quotient_segment(const Point& x, const Point& z, const Point& y, QuotientMetric&& qd, double tol = 0.0) {
    const double lhs = static_cast<double>(qd(x, z)) + static_cast<double>(qd(z, y));
    return std::abs(lhs - static_cast<double>(qd(x, y))) <= tol;
}

/// Outcome of a verification run: number of checks, number of violations
/// and the first counterexample.
struct VerificationReport {
    explicit VerificationReport(std::string report_name = {}) : name(std::move(report_name)) {}

    std::string name;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::string first_witness;

    bool passed() const noexcept { return violations == 0; }

    template <class Describe>
    void record(bool ok, Describe&& describe) {
        ++checks;
        if (ok) return;
        if (violations++ == 0) first_witness = describe();
    }
};

template <class Point>
using Sampler = std::function<Point(Rng&)>;

namespace detail {

inline std::uint64_t pick_element(std::uint64_t order, Rng& rng) {
    return static_cast<std::uint64_t>(uniform_int(rng, 0, static_cast<std::int64_t>(order - 1)));
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace detail

/// Checks that the action induces an equivalence relation: group axioms on
/// sampled elements (identity present, inverses present, closure), judged
/// by each element's images on a probe set, and reflexivity, symmetry and
/// transitivity of the orbit relation on sampled triples.
template <class Point>
VerificationReport verify_equivalence(const GroupAction<Point>& action, const Sampler<Point>& sample,
                                      std::size_t trials, Rng& rng, std::size_t probe_points = 6,
                                      std::uint64_t cap = 100'000) {
    using std::to_string;
    VerificationReport report{"equivalence:" + action.name()};
    action.require_enumerable(cap);
    const auto order = action.order();

    std::vector<Point> probe;
    for (std::size_t i = 0; i < probe_points; ++i) probe.push_back(sample(rng));
    auto images_of = [&](std::uint64_t g, const std::vector<Point>& pts) {
        std::vector<Point> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.push_back(action.apply(g, p));
        return out;
    };
    std::vector<std::vector<Point>> table(static_cast<std::size_t>(order));
    for (std::uint64_t g = 0; g < order; ++g) table[static_cast<std::size_t>(g)] = images_of(g, probe);
    auto find_element = [&](const std::vector<Point>& target) {
        return std::find(table.begin(), table.end(), target) != table.end();
    };

    report.record(find_element(probe), [&] { return std::string("no element acts as the identity on the probe set"); });

    // The inverse search is quadratic in the order, so element checks are capped.
    const std::size_t element_trials = std::clamp<std::size_t>(trials / 4, 1, 64);
    for (std::size_t t = 0; t < element_trials; ++t) {
        const auto g = detail::pick_element(order, rng);
        const auto h = detail::pick_element(order, rng);
        const auto& gx = table[static_cast<std::size_t>(g)];
        // inverse: some k with k(g(p)) = p for every probe point
        bool has_inverse = false;
        for (std::uint64_t k = 0; k < order && !has_inverse; ++k) has_inverse = images_of(k, gx) == probe;
        report.record(has_inverse, [&] { return "element " + std::to_string(g) + " has no inverse"; });

        std::vector<Point> composed;
        for (const auto& p : table[static_cast<std::size_t>(h)]) composed.push_back(action.apply(g, p));
        report.record(find_element(composed), [&] {
            return "composition of elements " + std::to_string(g) + " and " + std::to_string(h) + " is not in the set";
        });
    }

    for (std::size_t t = 0; t < trials; ++t) {
        const Point x = sample(rng);
        const Point y = fair_coin(rng) ? action.apply(detail::pick_element(order, rng), x) : sample(rng);
        const Point z = fair_coin(rng) ? action.apply(detail::pick_element(order, rng), y) : sample(rng);
        report.record(same_class(x, x, action, cap), [&] { return "not reflexive at x=" + to_string(x); });
        const bool xy = same_class(y, x, action, cap);  // y = g(x)
        const bool yx = same_class(x, y, action, cap);
        report.record(xy == yx, [&] { return "not symmetric at x=" + to_string(x) + " y=" + to_string(y); });
        const bool yz = same_class(z, y, action, cap);
        if (xy && yz)
            report.record(same_class(z, x, action, cap), [&] {
                return "not transitive at x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
            });
    }
    return report;
}

/// Checks d(g(x), g(y)) = d(x, y) on sampled (g, x, y).
template <class Point, class Metric>
VerificationReport verify_isometry(const GroupAction<Point>& action, Metric&& d, const Sampler<Point>& sample,
                                   std::size_t trials, Rng& rng, double tol = 0.0) {
    using std::to_string;
    VerificationReport report{"isometry:" + action.name()};
    for (std::size_t t = 0; t < trials; ++t) {
        const auto g = detail::pick_element(action.order(), rng);
        const Point x = sample(rng);
        const Point y = sample(rng);
        const double before = static_cast<double>(d(x, y));
        const double after = static_cast<double>(d(action.apply(g, x), action.apply(g, y)));
        report.record(detail::close(before, after, tol), [&] {
            return "element " + std::to_string(g) + " changes d(" + to_string(x) + ", " + to_string(y) + ")";
        });
    }
    return report;
}

/// Metric axioms (identity, symmetry, triangle inequality) of `d` on
/// sampled triples. With `strict_identity` distinct points must also be at
/// positive distance; disable it for distances on class representatives.
template <class Point, class Metric>
VerificationReport verify_metric_axioms(std::string name, Metric&& d, const Sampler<Point>& sample,
                                        std::size_t trials, Rng& rng, double tol = 0.0,
                                        bool strict_identity = true) {
    using std::to_string;
    VerificationReport report{std::move(name)};
    for (std::size_t t = 0; t < trials; ++t) {
        const Point x = sample(rng);
        const Point y = sample(rng);
        const Point z = sample(rng);
        const double xy = static_cast<double>(d(x, y));
        const double yx = static_cast<double>(d(y, x));
        report.record(static_cast<double>(d(x, x)) <= tol, [&] { return "d(x,x) != 0 at x=" + to_string(x); });
        report.record(xy >= 0.0 && (!strict_identity || (xy > tol) == !(x == y)), [&] {
            return "identity of indiscernibles fails at x=" + to_string(x) + " y=" + to_string(y);
        });
        report.record(detail::close(xy, yx, tol), [&] { return "asymmetric at x=" + to_string(x) + " y=" + to_string(y); });
        report.record(static_cast<double>(d(x, z)) <= xy + static_cast<double>(d(y, z)) + tol, [&] {
            return "triangle inequality fails at x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
        });
    }
    return report;
}

/// Checks that the induced quotient distance is a metric on classes:
/// identity, identity of indiscernibles on classes, symmetry, triangle
/// inequality, class invariance, and equality of the one-sided and
/// two-sided minimizations (the latter on every `two_sided_stride`-th pair).
template <class Point, class Metric>
VerificationReport verify_quotient_metric(const GroupAction<Point>& action, Metric&& d, const Sampler<Point>& sample,
                                          std::size_t trials, Rng& rng, double tol = 0.0,
                                          std::size_t two_sided_stride = 1, std::uint64_t cap = kDefaultOrbitCap) {
    using std::to_string;
    VerificationReport report{"quotient-metric:" + action.name()};
    auto qd = [&](const Point& a, const Point& b) { return quotient_distance(a, b, action, d, cap); };
    const auto order = action.order();
    for (std::size_t t = 0; t < trials; ++t) {
        const Point x = sample(rng);
        const Point y = sample(rng);
        const Point z = fair_coin(rng) ? sample(rng) : action.apply(detail::pick_element(order, rng), x);
        const Point gy = action.apply(detail::pick_element(order, rng), y);

        const double dxy = qd(x, y);
        const double dyx = qd(y, x);
        const double dxz = qd(x, z);
        const double dzy = qd(z, y);
        report.record(qd(x, x) <= tol, [&] { return "quotient d(x,x) != 0 at x=" + to_string(x); });
        report.record((dxz <= tol) == same_class(z, x, action, cap), [&] {
            return "zero quotient distance disagrees with class membership at x=" + to_string(x) + " z=" + to_string(z);
        });
        report.record(detail::close(dxy, dyx, tol), [&] {
            return "quotient distance asymmetric at x=" + to_string(x) + " y=" + to_string(y);
        });
        report.record(dxy <= dxz + dzy + tol, [&] {
            return "quotient triangle inequality fails at x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
        });
        report.record(detail::close(qd(x, gy), dxy, tol), [&] {
            return "quotient distance not class-invariant at x=" + to_string(x) + " y=" + to_string(y);
        });
        if (two_sided_stride != 0 && t % two_sided_stride == 0)
            report.record(detail::close(quotient_distance_two_sided(x, y, action, d, cap), dxy, tol), [&] {
                return "one-sided and two-sided minimization differ at x=" + to_string(x) + " y=" + to_string(y);
            });
    }
    return report;
}

} // namespace qgx
