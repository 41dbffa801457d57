#include "zf/random.hpp"

#include <stdexcept>

namespace zf {

Graph random_graph(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
    SplitMix64 gen(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (gen.next_unit() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, uint64_t seed, int max_retries) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
    SplitMix64 meta(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Graph g = random_graph(n, p, meta.next());
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("connectivity retry cap exceeded (" +
                             std::to_string(max_retries) + " attempts)");
}

VertexSet random_subset(int n, SplitMix64& gen) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (gen.next() & 1) s.set(v);
    return s;
}

} // namespace zf
