#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace swarmctl {

using NodeId = std::uint32_t;

struct Edge {
    NodeId source = 0;
    NodeId target = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed simple graph on nodes 0..n-1.
///
/// Construction rejects self-loops, duplicate edges and out-of-range endpoints.
/// Edge order is preserved as given.
class DirectedGraph {
public:
    DirectedGraph() = default;

    static DirectedGraph build(std::size_t n, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Out-neighbours of `u` in ascending order.
    std::span<const NodeId> successors(NodeId u) const;

    std::vector<std::size_t> out_degrees() const;
    std::vector<std::size_t> in_degrees() const;

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
};

/// Source copies of all nodes on the left, target copies on the right; edge i of
/// the view is directed edge i of the graph.
struct BipartiteEdge {
    NodeId left = 0;
    NodeId right = 0;
    friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

class BipartiteView {
public:
    explicit BipartiteView(const DirectedGraph& g);

    std::size_t left_count() const noexcept { return n_; }
    std::size_t right_count() const noexcept { return n_; }
    std::span<const BipartiteEdge> edges() const noexcept { return edges_; }

    /// Right-side neighbours of left node u, ascending.
    std::span<const NodeId> neighbours(NodeId u) const;

    Edge to_directed(const BipartiteEdge& e) const noexcept { return {e.left, e.right}; }

private:
    std::size_t n_ = 0;
    std::vector<BipartiteEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
};

BipartiteView to_bipartite(const DirectedGraph& g);

struct DegreeHistograms {
    std::vector<double> out_pmf;
    std::vector<double> in_pmf;
    double mean_out = 0.0;
    double mean_in = 0.0;
    double var_in = 0.0;
};

DegreeHistograms degree_histograms(const DirectedGraph& g);

// Edge-list CSV: header "source,target", one zero-based edge per row.

/// Node count is max endpoint + 1 unless `node_count` is larger.
DirectedGraph read_edge_list(std::istream& in, std::size_t node_count = 0);
DirectedGraph read_edge_list_file(const std::string& path, std::size_t node_count = 0);
void write_edge_list(std::ostream& out, const DirectedGraph& g);
void write_edge_list_file(const std::string& path, const DirectedGraph& g);

}  // namespace swarmctl
