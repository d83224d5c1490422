#include "qgx/ga/problems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgx/combinatorics.hpp"
#include "qgx/errors.hpp"
#include "qgx/rng.hpp"

namespace qgx::ga {

AdjacencyMatrix random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) throw ConfigError("edge probability must lie in [0,1]");
    Rng rng(mix64(seed));
    AdjacencyMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (unit_real(rng) < edge_probability) g.set_edge(i, j, true);
    return g;
}

namespace {

SymbolVector random_labels(std::size_t n, int k, Rng& rng) {
    std::vector<int> v(n);
    for (auto& s : v) s = static_cast<int>(uniform_int(rng, 1, k));
    return SymbolVector(std::move(v), k);
}

void require_labels(std::size_t n, int k) {
    if (n < 1) throw ConfigError("problem needs at least one node");
    if (k < 1) throw ConfigError("number of groups must be >= 1");
}

} // namespace

Problem<SymbolVector> make_partition_problem(AdjacencyMatrix graph, int k, double imbalance_weight) {
    const auto n = graph.size();
    require_labels(n, k);
    auto edges = graph.edges();
    return {"partition",
            Family::grouping,
            [edges, n, k, imbalance_weight](const SymbolVector& g) {
                double cut = 0.0;
                for (auto [u, v] : edges) cut += g[static_cast<std::size_t>(u - 1)] != g[static_cast<std::size_t>(v - 1)];
                std::vector<double> sizes(static_cast<std::size_t>(k), 0.0);
                for (std::size_t i = 0; i < n; ++i) sizes[static_cast<std::size_t>(g[i] - 1)] += 1.0;
                const double ideal = static_cast<double>(n) / k;
                double imbalance = 0.0;
                for (double s : sizes) imbalance += std::abs(s - ideal);
                return cut + imbalance_weight * imbalance;
            },
            [n, k](Rng& rng) { return random_labels(n, k, rng); }};
}

Problem<SymbolVector> make_coloring_problem(AdjacencyMatrix graph, int k) {
    const auto n = graph.size();
    require_labels(n, k);
    auto edges = graph.edges();
    return {"coloring",
            Family::grouping,
            [edges](const SymbolVector& g) {
                double conflicts = 0.0;
                for (auto [u, v] : edges)
                    conflicts += g[static_cast<std::size_t>(u - 1)] == g[static_cast<std::size_t>(v - 1)];
                return conflicts;
            },
            [n, k](Rng& rng) { return random_labels(n, k, rng); }};
}

TspInstance parse_tsp(const std::string& text) {
    std::istringstream is(text);
    long long n = -1;
    if (!(is >> n) || n < 1) throw InputError("tsp: expected a positive city count");
    TspInstance inst;
    for (long long i = 0; i < n; ++i) {
        double x = 0, y = 0;
        if (!(is >> x >> y) || !std::isfinite(x) || !std::isfinite(y))
            throw InputError("tsp: expected " + std::to_string(n) + " coordinate lines");
        inst.cities.emplace_back(x, y);
    }
    std::string extra;
    if (is >> extra) throw InputError("tsp: trailing data '" + extra + "'");
    return inst;
}

TspInstance random_tsp(std::size_t n, std::uint64_t seed) {
    Rng rng(mix64(seed));
    TspInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = unit_real(rng);
        inst.cities.emplace_back(x, unit_real(rng));
    }
    return inst;
}

double tour_length(const TspInstance& instance, const Permutation& tour) {
    if (tour.size() != instance.cities.size()) throw DimensionError("tour length differs from city count");
    double total = 0.0;
    for (std::size_t i = 0; i < tour.size(); ++i) {
        const auto& [x1, y1] = instance.cities[static_cast<std::size_t>(tour[i] - 1)];
        const auto& [x2, y2] = instance.cities[static_cast<std::size_t>(tour[(i + 1) % tour.size()] - 1)];
        total += std::hypot(x1 - x2, y1 - y2);
    }
    return total;
}

Problem<Permutation> make_tsp_problem(TspInstance instance) {
    const auto n = instance.cities.size();
    if (n < 1) throw ConfigError("tsp needs at least one city");
    return {"tsp",
            Family::circular,
            [inst = std::move(instance)](const Permutation& tour) { return tour_length(inst, tour); },
            [n](Rng& rng) { return random_permutation(n, rng); }};
}

Problem<RealVector> make_symmetric_real_problem(SymmetricFunction f, std::size_t n, double lo, double hi) {
    if (n < 1) throw ConfigError("dimension must be >= 1");
    if (!(lo <= hi)) throw ConfigError("lower bound must not exceed upper bound");
    return {std::string("symmetric:") + std::string(name(f)),
            Family::symmetric_real,
            [f](const RealVector& x) { return evaluate(f, x.values()); },
            [n, lo, hi](Rng& rng) {
                std::vector<double> v(n);
                for (auto& c : v) c = lo + (hi - lo) * unit_real(rng);
                return RealVector(std::move(v));
            }};
}

Problem<SymbolVector> make_symmetric_discrete_problem(SymmetricFunction f, std::size_t n, int k) {
    require_labels(n, k);
    return {std::string("symmetric:") + std::string(name(f)),
            Family::symmetric_discrete,
            [f](const SymbolVector& x) {
                std::vector<double> v(x.values().begin(), x.values().end());
                return evaluate(f, v);
            },
            [n, k](Rng& rng) { return random_labels(n, k, rng); }};
}

Problem<AdjacencyMatrix> make_degree_sequence_problem(std::vector<int> target_degrees, double edge_probability) {
    const auto n = target_degrees.size();
    if (n < 2) throw ConfigError("degree-sequence problem needs at least two vertices");
    for (int d : target_degrees)
        if (d < 0 || static_cast<std::size_t>(d) >= n) throw ConfigError("target degree out of range");
    std::sort(target_degrees.begin(), target_degrees.end());
    return {"degree_sequence",
            Family::graph,
            [target = std::move(target_degrees)](const AdjacencyMatrix& g) {
                std::vector<int> deg(g.size(), 0);
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = 0; j < g.size(); ++j) deg[i] += g.edge(i, j);
                std::sort(deg.begin(), deg.end());
                double total = 0.0;
                for (std::size_t i = 0; i < deg.size(); ++i) total += std::abs(deg[i] - target[i]);
                return total;
            },
            [n, edge_probability](Rng& rng) { return random_graph(n, edge_probability, rng()); }};
}

Problem<Sequence> make_sequence_match_problem(Sequence target, std::string alphabet, std::size_t min_len,
                                              std::size_t max_len) {
    if (alphabet.empty() || alphabet.find(kGap) != std::string::npos)
        throw ConfigError("sequence alphabet must be non-empty and gap-free");
    if (min_len > max_len) throw ConfigError("min_length must not exceed max_length");
    return {"sequence_match",
            Family::sequence,
            [t = std::move(target)](const Sequence& s) { return static_cast<double>(edit_distance(s, t)); },
            [alphabet = std::move(alphabet), min_len, max_len](Rng& rng) {
                const auto len = static_cast<std::size_t>(
                    uniform_int(rng, static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
                std::string s(len, ' ');
                for (auto& c : s)
                    c = alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1))];
                return Sequence(std::move(s));
            }};
}

} // namespace qgx::ga
