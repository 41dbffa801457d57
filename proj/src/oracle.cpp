#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zf/solvers.hpp"

namespace zf {

namespace {

// Single-word closure, independent of the VertexSet-based routine in
// forcing.cpp. Fills vertices as the sweep discovers them; the fixpoint is
// the same for any fill order.
uint64_t closure64(const std::vector<uint64_t>& adj, uint64_t filled, Mode mode,
                   uint64_t full, int n) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u) {
            if (mode == Mode::standard && !((filled >> u) & 1)) continue;
            uint64_t empty_nbrs = adj[u] & ~filled & full;
            if (std::popcount(empty_nbrs) == 1) {
                filled |= empty_nbrs;
                changed = true;
            }
        }
    }
    return filled;
}

} // namespace

FailedResult failed_forcing_number_bruteforce(const Graph& g, Mode mode,
                                              const OracleOptions& opts) {
    int n = g.n();
    if (n < 1)
        throw std::invalid_argument("empty graph has no proper subsets to evaluate");
    if (n > opts.max_n || n > 62)
        throw std::invalid_argument("graph exceeds the oracle size cap (n=" +
                                    std::to_string(n) + ")");

    std::vector<uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    uint64_t full = n == 62 ? ~0ULL >> 2 : (1ULL << n) - 1;

    int best = -1;
    uint64_t best_mask = 0;
    for (uint64_t s = 0; s <= full; ++s) {
        if (closure64(adj, s, mode, full, n) == full) continue;
        int c = std::popcount(s);
        if (c > best) {
            best = c;
            best_mask = s;
        }
    }
    if (best < 0) return {mode, std::nullopt, std::nullopt};

    VertexSet witness(n);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) witness.set(v);
    return {mode, best, witness};
}

} // namespace zf
