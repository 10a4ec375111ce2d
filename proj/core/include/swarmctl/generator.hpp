#pragma once

#include <cstdint>
#include <variant>

#include "swarmctl/analytic.hpp"
#include "swarmctl/graph.hpp"

namespace swarmctl {

using OutDegreeSpec = std::variant<RegularDegree, BimodalDegree>;

/// Parameters of a random swarm signaling network instance.
struct NetworkSpec {
    std::size_t n = 0;
    OutDegreeSpec out_degree = RegularDegree{1};
    double removal_fraction = 0.0;
    std::uint64_t seed = 0;
};

/// Throws ValidationError on k >= n, max(k1, k2) >= n, alpha or p outside [0, 1].
void validate(const NetworkSpec& spec);

/// Mean out-degree implied by the spec before removal.
double nominal_mean_degree(const NetworkSpec& spec);

/// Out-degree per node: all k, or exactly round(alpha n) nodes with k1 placed by
/// a seeded shuffle. Each node then picks its targets uniformly without
/// replacement among the other n - 1 nodes. Links are NOT removed here.
DirectedGraph sample_ssn(const NetworkSpec& spec);

/// Removes floor(p L + 0.5) edges chosen uniformly without replacement. Order of
/// surviving edges is preserved.
DirectedGraph remove_links(const DirectedGraph& g, double p, std::uint64_t seed);

/// Number of edges remove_links() drops from a graph with `edge_count` edges.
std::size_t removal_count(std::size_t edge_count, double p);

}  // namespace swarmctl
