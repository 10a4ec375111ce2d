#include "swarmctl/graph.hpp"

#include <algorithm>
#include <string>

#include "swarmctl/errors.hpp"

namespace swarmctl {

namespace {

std::string describe(const Edge& e) {
    return "(" + std::to_string(e.source) + ", " + std::to_string(e.target) + ")";
}

}  // namespace

DirectedGraph DirectedGraph::build(std::size_t n, std::vector<Edge> edges) {
    if (n > std::size_t{0xffffffffu}) throw ValidationError("node count exceeds 32-bit ids");
    for (const auto& e : edges) {
        if (e.source >= n || e.target >= n)
            throw ValidationError("edge " + describe(e) + " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
        if (e.source == e.target) throw ValidationError("self-loop " + describe(e));
    }

    DirectedGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : edges) ++g.offsets_[e.source + 1];
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.resize(edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : edges) g.adjacency_[cursor[e.source]++] = e.target;
    for (std::size_t u = 0; u < n; ++u) {
        auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last)
            throw ValidationError("duplicate edge " +
                                  describe({static_cast<NodeId>(u), *dup}));
    }
    g.edges_ = std::move(edges);
    return g;
}

std::span<const NodeId> DirectedGraph::successors(NodeId u) const {
    return std::span<const NodeId>(adjacency_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::vector<std::size_t> DirectedGraph::out_degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t u = 0; u < n_; ++u) d[u] = offsets_[u + 1] - offsets_[u];
    return d;
}

std::vector<std::size_t> DirectedGraph::in_degrees() const {
    std::vector<std::size_t> d(n_);
    for (const auto& e : edges_) ++d[e.target];
    return d;
}

BipartiteView::BipartiteView(const DirectedGraph& g) : n_(g.node_count()) {
    edges_.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges_.push_back({e.source, e.target});
    offsets_.assign(n_ + 1, 0);
    adjacency_.reserve(g.edge_count());
    for (std::size_t u = 0; u < n_; ++u) {
        auto succ = g.successors(static_cast<NodeId>(u));
        adjacency_.insert(adjacency_.end(), succ.begin(), succ.end());
        offsets_[u + 1] = adjacency_.size();
    }
}

std::span<const NodeId> BipartiteView::neighbours(NodeId u) const {
    return std::span<const NodeId>(adjacency_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

BipartiteView to_bipartite(const DirectedGraph& g) { return BipartiteView(g); }

DegreeHistograms degree_histograms(const DirectedGraph& g) {
    DegreeHistograms h;
    const std::size_t n = g.node_count();
    if (n == 0) return h;

    auto to_pmf = [n](const std::vector<std::size_t>& degrees) {
        const std::size_t max_d = *std::max_element(degrees.begin(), degrees.end());
        std::vector<std::size_t> counts(max_d + 1, 0);
        for (auto d : degrees) ++counts[d];
        std::vector<double> pmf(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i)
            pmf[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
        return pmf;
    };
    const auto out = g.out_degrees();
    const auto in = g.in_degrees();
    h.out_pmf = to_pmf(out);
    h.in_pmf = to_pmf(in);
    h.mean_out = static_cast<double>(g.edge_count()) / static_cast<double>(n);
    h.mean_in = h.mean_out;
    double ss = 0.0;
    for (auto d : in) {
        const double diff = static_cast<double>(d) - h.mean_in;
        ss += diff * diff;
    }
    h.var_in = ss / static_cast<double>(n);
    return h;
}

}  // namespace swarmctl
