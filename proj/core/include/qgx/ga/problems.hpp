#pragma once

// Desk-scale benchmark problems, one per representation family. All are
// minimization problems whose fitness ignores the redundancy the family's
// quotient removes (labels, coordinate order, rotation, vertex labels).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgx/ga/config.hpp"
#include "qgx/graphs.hpp"
#include "qgx/sequences.hpp"
#include "qgx/symmetric.hpp"
#include "qgx/types.hpp"

namespace qgx::ga {

/// G(n, p) random graph.
AdjacencyMatrix random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// k-way partitioning: cut edges + weight · Σ_parts |size - n/k|.
Problem<SymbolVector> make_partition_problem(AdjacencyMatrix graph, int k, double imbalance_weight = 1.0);

/// Graph coloring: number of monochromatic edges.
Problem<SymbolVector> make_coloring_problem(AdjacencyMatrix graph, int k);

struct TspInstance {
    std::vector<std::pair<double, double>> cities;
};

/// Text format: "n" then n lines "x y".
TspInstance parse_tsp(const std::string& text);
TspInstance random_tsp(std::size_t n, std::uint64_t seed);
/// Cyclic Euclidean length of the tour visiting cities in genotype order.
double tour_length(const TspInstance& instance, const Permutation& tour);
Problem<Permutation> make_tsp_problem(TspInstance instance);

/// Real vectors initialized uniformly in [lo, hi].
Problem<RealVector> make_symmetric_real_problem(SymmetricFunction f, std::size_t n, double lo, double hi);
/// k-ary vectors; the function is evaluated on the symbol values.
Problem<SymbolVector> make_symmetric_discrete_problem(SymmetricFunction f, std::size_t n, int k);

/// Graphs on n vertices scored by Σ |sorted degree - sorted target degree|.
Problem<AdjacencyMatrix> make_degree_sequence_problem(std::vector<int> target_degrees, double edge_probability = 0.3);

/// Strings scored by edit distance to `target`; initial lengths uniform in [min_len, max_len].
Problem<Sequence> make_sequence_match_problem(Sequence target, std::string alphabet, std::size_t min_len,
                                              std::size_t max_len);

} // namespace qgx::ga
