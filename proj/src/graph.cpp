#include "zf/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zf {

Graph::Graph(int n, const EdgeList& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    EdgeList canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u > v) std::swap(u, v);
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    edges_ = std::move(canon);

    adj_.resize(n);
    rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        rows_[u].set(v);
        rows_[v].set(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return rows_[u].test(v);
}

bool is_connected(const Graph& g) {
    int n = g.n();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

} // namespace zf
