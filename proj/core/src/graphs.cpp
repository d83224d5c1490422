#include "qgx/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qgx/combinatorics.hpp"
#include "qgx/errors.hpp"
#include "qgx/metric.hpp"

namespace qgx {

AdjacencyMatrix::AdjacencyMatrix(const std::vector<std::vector<int>>& rows) : AdjacencyMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw InputError("adjacency matrix must be square");
        for (std::size_t j = 0; j < n_; ++j) {
            const int v = rows[i][j];
            if (v != 0 && v != 1) throw InputError("adjacency matrix entries must be 0 or 1");
            bits_[i * n_ + j] = static_cast<std::uint8_t>(v);
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (edge(i, i)) throw InputError("adjacency matrix must have a zero diagonal");
        for (std::size_t j = i + 1; j < n_; ++j)
            if (edge(i, j) != edge(j, i)) throw InputError("adjacency matrix must be symmetric");
    }
}

AdjacencyMatrix AdjacencyMatrix::from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    AdjacencyMatrix a(n);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
            throw InputError("edge endpoint outside 1.." + std::to_string(n));
        if (u == v) throw InputError("self-loops are not allowed");
        a.set_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), true);
    }
    return a;
}

void AdjacencyMatrix::set_edge(std::size_t i, std::size_t j, bool present) {
    if (i >= n_ || j >= n_) throw DimensionError("vertex index out of range");
    if (i == j) {
        if (present) throw InputError("self-loops are not allowed");
        return;
    }
    bits_[i * n_ + j] = bits_[j * n_ + i] = present ? 1 : 0;
}

std::size_t AdjacencyMatrix::edge_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)) / 2;
}

std::vector<std::pair<int, int>> AdjacencyMatrix::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (edge(i, j)) out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return out;
}

std::string to_string(const AdjacencyMatrix& a) {
    std::ostringstream os;
    const auto es = a.edges();
    os << a.size() << ' ' << es.size();
    for (auto [u, v] : es) os << '\n' << u << ' ' << v;
    return os.str();
}

AdjacencyMatrix parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    long long n = -1, m = -1;
    if (!(is >> n >> m) || n < 0 || m < 0) throw InputError("edge list: expected header 'n m'");
    std::vector<std::pair<int, int>> edges;
    for (long long e = 0; e < m; ++e) {
        int u = 0, v = 0;
        if (!(is >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    std::string extra;
    if (is >> extra) throw InputError("edge list: trailing data '" + extra + "'");
    return AdjacencyMatrix::from_edges(static_cast<std::size_t>(n), edges);
}

std::size_t hamming_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("graphs differ in vertex count");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) d += a.edge(i, j) != b.edge(i, j);
    return d;
}

AdjacencyMatrix conjugate(const AdjacencyMatrix& a, const Permutation& p) {
    if (p.size() != a.size()) throw DimensionError("permutation size differs from vertex count");
    const auto n = a.size();
    AdjacencyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.edge(static_cast<std::size_t>(p[i] - 1), static_cast<std::size_t>(p[j] - 1))) out.set_edge(i, j, true);
    return out;
}

GroupAction<AdjacencyMatrix> vertex_relabeling_action(std::size_t n) {
    return GroupAction<AdjacencyMatrix>("conjugate(P" + std::to_string(n) + ")", factorial(n),
                                        [n](std::uint64_t g, const AdjacencyMatrix& a) {
                                            return conjugate(a, nth_permutation(n, g));
                                        });
}

GraphMatch graph_quotient_distance_exact(const AdjacencyMatrix& a, const AdjacencyMatrix& b, std::size_t cap) {
    if (a.size() != b.size()) throw DimensionError("graphs differ in vertex count");
    const auto n = a.size();
    if (n > cap)
        throw SizeCapError("exact graph matching is capped at " + std::to_string(cap) + " vertices; use the heuristic");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    GraphMatch best{SIZE_MAX, Permutation::identity(n), true};
    do {
        Permutation p(perm);
        const auto d = hamming_distance(a, conjugate(b, p));
        if (d < best.distance) best = {d, std::move(p), true};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// Change in H(A, B∘π) when the images of positions x and y are exchanged.
long long swap_delta(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const std::vector<std::size_t>& pi,
                     std::size_t x, std::size_t y) {
    long long delta = 0;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if (k == x || k == y) continue;
        const bool ax = a.edge(x, k), ay = a.edge(y, k);
        delta += (ax != b.edge(pi[y], pi[k])) + (ay != b.edge(pi[x], pi[k]));
        delta -= (ax != b.edge(pi[x], pi[k])) + (ay != b.edge(pi[y], pi[k]));
    }
    return 2 * delta;
}

} // namespace

GraphMatch graph_match_heuristic(const AdjacencyMatrix& a, const AdjacencyMatrix& b, std::size_t restarts,
                                 Rng& rng) {
    if (a.size() != b.size()) throw DimensionError("graphs differ in vertex count");
    const auto n = a.size();
    const std::uint64_t base = rng();
    GraphMatch best{SIZE_MAX, Permutation::identity(n), false};
    for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
        Rng stream(derive_seed(base, {r}));
        const auto start = random_permutation(n, stream);
        std::vector<std::size_t> pi(n);
        for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<std::size_t>(start[i] - 1);

        for (;;) {
            long long best_delta = 0;
            std::size_t bx = 0, by = 0;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x + 1; y < n; ++y) {
                    const auto d = swap_delta(a, b, pi, x, y);
                    if (d < best_delta) {
                        best_delta = d;
                        bx = x;
                        by = y;
                    }
                }
            if (best_delta >= 0) break;
            std::swap(pi[bx], pi[by]);
        }

        std::vector<int> images(n);
        for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(pi[i] + 1);
        Permutation p(std::move(images));
        const auto d = hamming_distance(a, conjugate(b, p));
        if (d < best.distance || (d == best.distance && p < best.perm)) best = {d, std::move(p), false};
    }
    return best;
}

GraphMatcher exact_graph_matcher(std::size_t cap) {
    return [cap](const AdjacencyMatrix& a, const AdjacencyMatrix& b, Rng&) {
        return graph_quotient_distance_exact(a, b, cap);
    };
}

GraphMatcher heuristic_graph_matcher(std::size_t restarts) {
    return [restarts](const AdjacencyMatrix& a, const AdjacencyMatrix& b, Rng& rng) {
        return graph_match_heuristic(a, b, restarts, rng);
    };
}

GraphMatcher auto_graph_matcher(std::size_t restarts, std::size_t cap) {
    return [restarts, cap](const AdjacencyMatrix& a, const AdjacencyMatrix& b, Rng& rng) {
        return a.size() <= cap ? graph_quotient_distance_exact(a, b, cap) : graph_match_heuristic(a, b, restarts, rng);
    };
}

Normalizer<AdjacencyMatrix> exact_graph_normalizer(std::size_t cap) {
    return {[cap](const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
                auto m = graph_quotient_distance_exact(a, b, cap);
                return Normalized<AdjacencyMatrix>{conjugate(b, m.perm), static_cast<double>(m.distance)};
            },
            true};
}

AdjacencyMatrix upper_mask_crossover(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const Mask& mask) {
    if (a.size() != b.size()) throw DimensionError("graphs differ in vertex count");
    const auto n = a.size();
    if (mask.size() != upper_cell_count(n)) throw DimensionError("graph mask must cover n(n-1)/2 cells");
    AdjacencyMatrix out(n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++c)
            out.set_edge(i, j, mask[c] == Parent::first ? a.edge(i, j) : b.edge(i, j));
    return out;
}

AdjacencyMatrix graph_iq_crossover(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const GraphMatcher& matcher,
                                   const Mask& mask, Rng& rng) {
    const auto match = matcher(a, b, rng);
    return upper_mask_crossover(a, conjugate(b, match.perm), mask);
}

AdjacencyMatrix graph_iq_crossover(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const GraphMatcher& matcher,
                                   Rng& rng) {
    const auto match = matcher(a, b, rng);
    const auto mask = uniform_mask(upper_cell_count(a.size()), rng);
    return upper_mask_crossover(a, conjugate(b, match.perm), mask);
}

} // namespace qgx
