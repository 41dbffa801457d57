#include "zf/forcing.hpp"

#include <stdexcept>

namespace zf {

namespace {

void check_universe(const Graph& g, const VertexSet& filled) {
    if (filled.universe() != g.n())
        throw std::invalid_argument("filled set universe does not match graph");
}

} // namespace

const char* mode_name(Mode mode) {
    return mode == Mode::standard ? "standard" : "skew";
}

Mode mode_from_name(const std::string& name) {
    if (name == "standard") return Mode::standard;
    if (name == "skew") return Mode::skew;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

VertexSet forced_vertices(const Graph& g, const VertexSet& filled, Mode mode) {
    check_universe(g, filled);
    VertexSet out(g.n());
    for (int u = 0; u < g.n(); ++u) {
        if (mode == Mode::standard && !filled.test(u)) continue;
        VertexSet empty_nbrs = g.neighbor_set(u) - filled;
        if (empty_nbrs.count() == 1) out.set(empty_nbrs.first());
    }
    return out;
}

VertexSet closure(const Graph& g, const VertexSet& filled, Mode mode) {
    check_universe(g, filled);
    VertexSet cur = filled;
    for (;;) {
        VertexSet next = forced_vertices(g, cur, mode);
        if (next.none()) return cur;
        cur |= next;
    }
}

bool is_stalled(const Graph& g, const VertexSet& filled, Mode mode) {
    check_universe(g, filled);
    // Counting scan over adjacency lists with early exit; kept separate from
    // forced_vertices so the two characterizations can be tested against
    // each other.
    for (int u = 0; u < g.n(); ++u) {
        if (mode == Mode::standard && !filled.test(u)) continue;
        int empties = 0;
        for (int v : g.neighbors(u)) {
            if (!filled.test(v) && ++empties > 1) break;
        }
        if (empties == 1) return false;
    }
    return true;
}

bool is_forcing_set(const Graph& g, const VertexSet& filled, Mode mode) {
    return closure(g, filled, mode).count() == g.n();
}

} // namespace zf
