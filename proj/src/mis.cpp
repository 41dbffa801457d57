#include <vector>

#include "zf/solvers.hpp"

namespace zf {

namespace {

struct MisSearch {
    const Graph& g;
    VertexSet best;
    VertexSet cur;

    explicit MisSearch(const Graph& graph)
        : g(graph), best(graph.n()), cur(graph.n()) {}

    void rec(VertexSet pool) {
        // Pool vertices with no pool neighbor always join the set. Removing
        // one cannot isolate another, so a single pass suffices.
        std::vector<int> folded;
        for (int v : pool.members()) {
            if (!g.neighbor_set(v).intersects(pool)) {
                cur.set(v);
                folded.push_back(v);
                pool.reset(v);
            }
        }

        int cur_size = cur.count();
        if (cur_size + pool.count() > best.count()) {
            if (pool.none()) {
                best = cur;
            } else {
                // Branch on the pool vertex with the most pool neighbors,
                // smallest id on ties.
                int pivot = -1, pivot_deg = -1;
                for (int v : pool.members()) {
                    int d = (g.neighbor_set(v) & pool).count();
                    if (d > pivot_deg) {
                        pivot_deg = d;
                        pivot = v;
                    }
                }
                VertexSet incl = pool - g.neighbor_set(pivot);
                incl.reset(pivot);
                cur.set(pivot);
                rec(incl);
                cur.reset(pivot);

                pool.reset(pivot);
                rec(pool);
            }
        }

        for (int v : folded) cur.reset(v);
    }
};

} // namespace

MisResult max_independent_set(const Graph& g) {
    MisSearch search(g);
    if (g.n() > 0) search.rec(VertexSet::full(g.n()));
    return {search.best.count(), search.best};
}

} // namespace zf
