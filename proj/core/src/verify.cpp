#include "swarmctl/verify.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "swarmctl/errors.hpp"
#include "swarmctl/matching.hpp"
#include "swarmctl/rng.hpp"

namespace swarmctl {

namespace {

void require_desk_scale(std::size_t n) {
    if (n > kVerifyMaxNodes)
        throw SizeError("Kalman rank check supports at most " + std::to_string(kVerifyMaxNodes) +
                        " nodes, got " + std::to_string(n));
}

void normalize_columns(Eigen::MatrixXd& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double norm = m.col(c).norm();
        if (norm > 0.0) m.col(c) /= norm;
    }
}

}  // namespace

ControlSystem realize_system(const DirectedGraph& g, const std::vector<NodeId>& drivers,
                             std::uint64_t seed) {
    const std::size_t n = g.node_count();
    require_desk_scale(n);
    if (drivers.empty()) throw ValidationError("driver set must not be empty");
    std::vector<char> is_driver(n, 0);
    for (NodeId d : drivers) {
        if (d >= n) throw ValidationError("driver " + std::to_string(d) + " is not a node");
        if (is_driver[d]) throw ValidationError("driver " + std::to_string(d) + " repeated");
        is_driver[d] = 1;
    }

    Rng rng(seed);
    const auto nn = static_cast<Eigen::Index>(n);
    ControlSystem sys;
    sys.drivers = drivers;
    sys.a = Eigen::MatrixXd::Zero(nn, nn);
    for (const auto& e : g.edges()) sys.a(e.target, e.source) = rng.uniform(0.5, 1.5);

    const auto m = static_cast<Eigen::Index>(drivers.size());
    sys.b = Eigen::MatrixXd::Zero(nn, m);
    for (Eigen::Index c = 0; c < m; ++c) sys.b(drivers[static_cast<std::size_t>(c)], c) = 1.0;

    std::vector<char> reached(n, 0);
    std::vector<NodeId> frontier;
    auto flood = [&](NodeId start) {
        reached[start] = 1;
        frontier.assign(1, start);
        while (!frontier.empty()) {
            const NodeId u = frontier.back();
            frontier.pop_back();
            for (NodeId v : g.successors(u))
                if (!reached[v]) {
                    reached[v] = 1;
                    frontier.push_back(v);
                }
        }
    };
    for (NodeId d : drivers)
        if (!reached[d]) flood(d);
    for (NodeId u = 0; u < n; ++u) {
        if (reached[u]) continue;
        const auto column = static_cast<Eigen::Index>(sys.anchors.size() % drivers.size());
        sys.b(u, column) = rng.uniform(0.5, 1.5);
        sys.anchors.push_back(u);
        flood(u);
    }
    return sys;
}

std::size_t kalman_rank(const ControlSystem& sys) {
    const Eigen::Index n = sys.a.rows();
    require_desk_scale(static_cast<std::size_t>(n));
    const Eigen::Index m = sys.b.cols();
    if (n == 0 || m == 0) return 0;

    Eigen::MatrixXd c(n, n * m);
    Eigen::MatrixXd block = sys.b;
    normalize_columns(block);
    c.leftCols(m) = block;
    for (Eigen::Index j = 1; j < n; ++j) {
        block = sys.a * block;
        normalize_columns(block);
        c.middleCols(j * m, m) = block;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c.transpose());
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    const double tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * sigma(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > tol) ++rank;
    return rank;
}

VerificationReport verify_driver_set(const DirectedGraph& g, std::uint64_t seed,
                                     std::size_t weight_seeds) {
    require_desk_scale(g.node_count());
    const auto matching = max_matching(g);
    VerificationReport r;
    r.n = g.node_count();
    r.n_driver = matching.n_driver;
    r.drivers = matching.driver_nodes.empty() ? std::vector<NodeId>{0} : matching.driver_nodes;
    r.controllable = true;
    for (std::size_t i = 0; i < weight_seeds; ++i) {
        const std::uint64_t s = derive_seed(seed, i);
        const auto sys = realize_system(g, r.drivers, s);
        if (i == 0) r.anchors = sys.anchors;
        const std::size_t rank = kalman_rank(sys);
        r.weight_seeds.push_back(s);
        r.ranks.push_back(rank);
        r.controllable = r.controllable && rank == r.n;
    }
    return r;
}

}  // namespace swarmctl
