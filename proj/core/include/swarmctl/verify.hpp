#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "swarmctl/graph.hpp"

namespace swarmctl {

inline constexpr std::size_t kVerifyMaxNodes = 50;

/// Linear system dx/dt = A x + B u realised on a graph.
///
/// A(i, j) != 0 iff edge j -> i, weights uniform in [0.5, 1.5]. Column c of B
/// carries a 1 at drivers[c]. Nodes unreachable from every driver are attached
/// to existing inputs (column anchor_index mod M, weight in [0.5, 1.5]); this
/// adds no inputs but satisfies accessibility for cycles that a matching leaves
/// without a driver.
struct ControlSystem {
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;
    std::vector<NodeId> drivers;
    std::vector<NodeId> anchors;

    std::size_t inputs() const noexcept { return drivers.size(); }
};

/// Throws SizeError for n > 50 and ValidationError for an empty, repeated or
/// out-of-range driver set.
ControlSystem realize_system(const DirectedGraph& g, const std::vector<NodeId>& drivers,
                             std::uint64_t seed);

/// Numerical rank of [B, AB, ..., A^{n-1} B]. Each Krylov block is built from
/// the previous one and its columns rescaled to unit norm; singular values
/// above n * eps * sigma_max count.
std::size_t kalman_rank(const ControlSystem& sys);

struct VerificationReport {
    std::size_t n = 0;
    std::size_t n_driver = 0;
    std::vector<NodeId> drivers;
    std::vector<NodeId> anchors;
    std::vector<std::uint64_t> weight_seeds;
    std::vector<std::size_t> ranks;
    bool controllable = false;
};

/// Drivers from max_matching() (node 0 when the matching is perfect), checked
/// under `weight_seeds` independent weight draws derived from `seed`.
VerificationReport verify_driver_set(const DirectedGraph& g, std::uint64_t seed,
                                     std::size_t weight_seeds = 3);

}  // namespace swarmctl
