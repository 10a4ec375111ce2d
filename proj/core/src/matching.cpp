#include "swarmctl/matching.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "swarmctl/errors.hpp"

namespace swarmctl {

namespace {

constexpr NodeId kFree = std::numeric_limits<NodeId>::max();
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteView& view)
        : view_(view),
          pair_left_(view.left_count(), kFree),
          pair_right_(view.right_count(), kFree),
          dist_(view.left_count(), kUnreached),
          next_arc_(view.left_count(), 0) {}

    std::size_t run() {
        std::size_t size = 0;
        while (layer()) {
            std::fill(next_arc_.begin(), next_arc_.end(), 0);
            for (NodeId u = 0; u < view_.left_count(); ++u)
                if (pair_left_[u] == kFree && augment(u)) ++size;
        }
        return size;
    }

    const std::vector<NodeId>& pair_left() const { return pair_left_; }
    const std::vector<NodeId>& pair_right() const { return pair_right_; }

private:
    // BFS from every free left node; `limit_` becomes the length (in left
    // layers) of the shortest augmenting path.
    bool layer() {
        queue_.clear();
        for (NodeId u = 0; u < view_.left_count(); ++u) {
            if (pair_left_[u] == kFree) {
                dist_[u] = 0;
                queue_.push_back(u);
            } else {
                dist_[u] = kUnreached;
            }
        }
        limit_ = kUnreached;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const NodeId u = queue_[head];
            if (dist_[u] >= limit_) continue;
            for (NodeId v : view_.neighbours(u)) {
                const NodeId w = pair_right_[v];
                if (w == kFree) {
                    if (limit_ == kUnreached) limit_ = dist_[u] + 1;
                } else if (dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    queue_.push_back(w);
                }
            }
        }
        return limit_ != kUnreached;
    }

    bool augment(NodeId root) {
        stack_.clear();
        stack_.push_back(root);
        while (!stack_.empty()) {
            const NodeId u = stack_.back();
            const auto nb = view_.neighbours(u);
            if (next_arc_[u] == nb.size()) {
                dist_[u] = kUnreached;
                stack_.pop_back();
                if (!stack_.empty()) ++next_arc_[stack_.back()];
                continue;
            }
            const NodeId v = nb[next_arc_[u]];
            const NodeId w = pair_right_[v];
            if (w == kFree) {
                if (dist_[u] + 1 == limit_) {
                    flip_path();
                    return true;
                }
                ++next_arc_[u];
            } else if (dist_[w] != kUnreached && dist_[w] == dist_[u] + 1) {
                stack_.push_back(w);
            } else {
                ++next_arc_[u];
            }
        }
        return false;
    }

    void flip_path() {
        for (NodeId u : stack_) {
            const NodeId v = view_.neighbours(u)[next_arc_[u]];
            pair_left_[u] = v;
            pair_right_[v] = u;
            dist_[u] = kUnreached;  // vertex-disjoint paths within a phase
        }
    }

    const BipartiteView& view_;
    std::vector<NodeId> pair_left_;
    std::vector<NodeId> pair_right_;
    std::vector<std::size_t> dist_;
    std::vector<std::size_t> next_arc_;
    std::vector<NodeId> queue_;
    std::vector<NodeId> stack_;
    std::size_t limit_ = kUnreached;
};

struct BruteForce {
    std::vector<std::vector<NodeId>> predecessors;
    std::size_t n = 0;
    std::size_t best = 0;

    void search(std::size_t target, std::uint32_t used_sources, std::size_t size) {
        if (size + (n - target) <= best) return;
        if (target == n) {
            best = size;
            return;
        }
        for (NodeId s : predecessors[target]) {
            if (used_sources & (1u << s)) continue;
            search(target + 1, used_sources | (1u << s), size + 1);
        }
        search(target + 1, used_sources, size);
    }
};

}  // namespace

MatchingResult max_matching(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DomainError("driver nodes are undefined for a graph with no nodes");

    const BipartiteView view(g);
    HopcroftKarp hk(view);
    const std::size_t size = hk.run();

    MatchingResult r;
    r.matched_pairs.reserve(size);
    for (NodeId u = 0; u < n; ++u)
        if (hk.pair_left()[u] != kFree) r.matched_pairs.push_back({u, hk.pair_left()[u]});
    for (NodeId v = 0; v < n; ++v)
        if (hk.pair_right()[v] == kFree) r.driver_nodes.push_back(v);
    r.n_driver = std::max<std::size_t>(n - size, 1);
    r.fraction = static_cast<double>(r.n_driver) / static_cast<double>(n);
    return r;
}

std::size_t brute_force_driver_count(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    if (n > kBruteForceMaxNodes)
        throw SizeError("brute-force matching supports at most " +
                        std::to_string(kBruteForceMaxNodes) + " nodes, got " + std::to_string(n));
    if (n == 0) throw DomainError("driver nodes are undefined for a graph with no nodes");
    BruteForce bf;
    bf.n = n;
    bf.predecessors.resize(n);
    for (const auto& e : g.edges()) bf.predecessors[e.target].push_back(e.source);
    bf.search(0, 0, 0);
    return std::max<std::size_t>(n - bf.best, 1);
}

}  // namespace swarmctl
