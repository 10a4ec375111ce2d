#pragma once

#include <vector>

#include "swarmctl/graph.hpp"

namespace swarmctl {

struct MatchingResult {
    /// Directed edges of a maximum matching, ascending by source.
    std::vector<Edge> matched_pairs;
    /// Nodes that are not the target of any matched edge, ascending. Empty when
    /// the matching is perfect.
    std::vector<NodeId> driver_nodes;
    /// max(n - |matching|, 1)
    std::size_t n_driver = 0;
    double fraction = 0.0;
};

/// Hopcroft-Karp on the bipartite view (BFS layering, iterative DFS). Neighbours
/// and free nodes are scanned in ascending index order, so the matched pairs
/// are reproducible. Throws DomainError on a graph with no nodes.
MatchingResult max_matching(const DirectedGraph& g);

inline constexpr std::size_t kBruteForceMaxNodes = 10;

/// Exhaustive search over all matchings; max(n - max|M|, 1). Throws SizeError
/// for n > 10.
std::size_t brute_force_driver_count(const DirectedGraph& g);

}  // namespace swarmctl
