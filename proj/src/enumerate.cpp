#include "zf/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zf {

namespace {

constexpr int kMaxEnumN = 6; // 2^15 masks, 720 permutations

std::vector<std::vector<int>> pair_index(int n) {
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    int next = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            idx[u][v] = idx[v][u] = next;
            ++next;
        }
    return idx;
}

Graph graph_from_mask(int n, uint32_t mask) {
    EdgeList edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

void check_n(int n) {
    if (n < 1 || n > kMaxEnumN)
        throw std::invalid_argument("graph enumeration supports 1 <= n <= " +
                                    std::to_string(kMaxEnumN));
}

} // namespace

std::vector<Graph> all_graphs(int n) {
    check_n(n);
    int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(size_t(1) << bits);
    for (uint32_t mask = 0; mask < (1u << bits); ++mask)
        out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<Graph> all_connected_graphs(int n) {
    auto graphs = all_graphs(n);
    std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
    return graphs;
}

std::vector<Graph> connected_graphs_upto_iso(int n) {
    check_n(n);
    int bits = n * (n - 1) / 2;
    auto idx = pair_index(n);

    std::set<uint32_t> canon_masks;
    std::vector<int> perm(n);
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        // Representative = minimum relabeled mask over all vertex
        // permutations; bail out as soon as some relabeling beats it.
        bool canonical = true;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            uint32_t relabeled = 0;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1) relabeled |= 1u << idx[perm[u]][perm[v]];
            if (relabeled < mask) {
                canonical = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!canonical) continue;
        Graph g = graph_from_mask(n, mask);
        if (is_connected(g)) canon_masks.insert(mask);
    }

    std::vector<Graph> out;
    out.reserve(canon_masks.size());
    for (uint32_t mask : canon_masks) out.push_back(graph_from_mask(n, mask));
    return out;
}

} // namespace zf
