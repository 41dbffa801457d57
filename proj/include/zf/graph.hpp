#ifndef ZF_GRAPH_HPP
#define ZF_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "zf/vertex_set.hpp"

namespace zf {

// Unordered edge {u, v} stored with u < v.
using Edge = std::pair<int, int>;

// Canonical edge enumeration: u < v per pair, sorted lexicographically,
// duplicate-free. Gadget vertex blocks are laid out in this order.
using EdgeList = std::vector<Edge>;

// Immutable simple graph: vertex count plus symmetric adjacency.
// Rejects self-loops and out-of-range ids; duplicate edges collapse.
class Graph {
public:
    Graph() : n_(0) {}
    Graph(int n, const EdgeList& edges);

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& neighbor_set(int v) const { return rows_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Canonical sorted edge list.
    const EdgeList& edges() const { return edges_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    EdgeList edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> rows_;
};

// True iff n <= 1 or every vertex is reachable from vertex 0.
bool is_connected(const Graph& g);

} // namespace zf

#endif
