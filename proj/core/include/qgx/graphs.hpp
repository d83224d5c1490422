#pragma once

// Labeled simple graphs as adjacency matrices under vertex relabeling
// (A -> PAPᵀ), exact and heuristic graph matching, and graph matching
// before crossover.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"
#include "qgx/types.hpp"

namespace qgx {

/// Simple undirected graph on n labeled vertices: symmetric 0/1 matrix
/// with zero diagonal.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
    /// From explicit rows; rejects non-binary, asymmetric or looped input.
    explicit AdjacencyMatrix(const std::vector<std::vector<int>>& rows);

    /// From 1-based edges.
    static AdjacencyMatrix from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const noexcept { return n_; }
    bool edge(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set_edge(std::size_t i, std::size_t j, bool present);
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

template <>
struct tie_break_by_index<AdjacencyMatrix> : std::true_type {};

/// Edge-list text: "n m" header, then m lines "u v" (1-based).
std::string to_string(const AdjacencyMatrix& a);
AdjacencyMatrix parse_edge_list(const std::string& text);

/// Hamming distance over all n² cells (each undirected edge counts twice).
std::size_t hamming_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

/// PAPᵀ for the permutation matrix of `p`: result(i,j) = A(p(i), p(j)).
AdjacencyMatrix conjugate(const AdjacencyMatrix& a, const Permutation& p);

/// Vertex relabeling group P_n, elements in lexicographic order.
GroupAction<AdjacencyMatrix> vertex_relabeling_action(std::size_t n);

struct GraphMatch {
    std::size_t distance = 0;
    Permutation perm;  ///< B* = conjugate(B, perm)
    bool exact = false;
};

inline constexpr std::size_t kExactGraphCap = 8;

/// Exhaustive min over all n! relabelings of H(A, PBPᵀ); ties go to the
/// lexicographically smallest permutation.
GraphMatch graph_quotient_distance_exact(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                                         std::size_t cap = kExactGraphCap);

/// Steepest-descent over vertex transpositions from `restarts` random
/// starts. Restart r draws its start from a stream derived from one value
/// taken from `rng` and r, so a larger restart budget only adds candidates.
/// The result is an upper bound on the quotient distance.
GraphMatch graph_match_heuristic(const AdjacencyMatrix& a, const AdjacencyMatrix& b, std::size_t restarts, Rng& rng);

using GraphMatcher = std::function<GraphMatch(const AdjacencyMatrix&, const AdjacencyMatrix&, Rng&)>;

GraphMatcher exact_graph_matcher(std::size_t cap = kExactGraphCap);
GraphMatcher heuristic_graph_matcher(std::size_t restarts);
/// Exact up to `cap` vertices, heuristic above.
GraphMatcher auto_graph_matcher(std::size_t restarts, std::size_t cap = kExactGraphCap);

Normalizer<AdjacencyMatrix> exact_graph_normalizer(std::size_t cap = kExactGraphCap);

/// Number of upper-triangle cells, n(n-1)/2: the crossover mask length.
inline std::size_t upper_cell_count(std::size_t n) { return n * (n - 1) / 2; }

/// Mask crossover over upper-triangle cells (row-major, i < j), mirrored.
AdjacencyMatrix upper_mask_crossover(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const Mask& mask);

AdjacencyMatrix graph_iq_crossover(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const GraphMatcher& matcher,
                                   const Mask& mask, Rng& rng);
AdjacencyMatrix graph_iq_crossover(const AdjacencyMatrix& a, const AdjacencyMatrix& b, const GraphMatcher& matcher,
                                   Rng& rng);

} // namespace qgx
