#ifndef ZF_TESTS_UTIL_HPP
#define ZF_TESTS_UTIL_HPP

#include <set>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zft {

inline zf::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    zf::EdgeList list;
    for (auto [u, v] : edges) list.emplace_back(u, v);
    return zf::Graph(n, list);
}

inline zf::Graph path_graph(int n) {
    zf::EdgeList edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return zf::Graph(n, edges);
}

inline zf::Graph complete_graph(int n) {
    zf::EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return zf::Graph(n, edges);
}

inline zf::Graph cycle_graph(int n) {
    zf::EdgeList edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return zf::Graph(n, edges);
}

// Definition-scan oracle for the one-round force set, independent of the
// library routine: v is forced iff some eligible u has v as its unique
// neighbor outside `filled`.
inline std::set<int> forced_by_definition(const zf::Graph& g, const std::set<int>& filled,
                                          zf::Mode mode) {
    std::set<int> out;
    for (int u = 0; u < g.n(); ++u) {
        if (mode == zf::Mode::standard && !filled.count(u)) continue;
        std::vector<int> empty_nbrs;
        for (int v : g.neighbors(u))
            if (!filled.count(v)) empty_nbrs.push_back(v);
        if (empty_nbrs.size() == 1) out.insert(empty_nbrs[0]);
    }
    return out;
}

inline std::set<int> to_std_set(const zf::VertexSet& s) {
    auto m = s.members();
    return std::set<int>(m.begin(), m.end());
}

inline zf::VertexSet from_mask(int n, unsigned mask) {
    zf::VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.set(v);
    return s;
}

} // namespace zft

#endif
