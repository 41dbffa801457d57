#include <vector>

#include "subset_budget.hpp"
#include "zf/solvers.hpp"

namespace zf {

namespace {

// Serial reference search. Same contract as failed_forcing_number, written
// for clarity: plain lexicographic enumeration of complements W with a
// from-scratch stalledness test per subset, no incremental counters.
struct RefScan {
    const Graph& g;
    Mode mode;
    int n;
    std::vector<int> w;
    std::vector<int> cnt;
    std::vector<uint8_t> in_w;
    std::vector<int> touched;

    RefScan(const Graph& graph, Mode m)
        : g(graph), mode(m), n(graph.n()), cnt(n, 0), in_w(n, 0) {}

    bool leaf_stalled() {
        for (int x : w) in_w[x] = 1;
        for (int x : w)
            for (int v : g.neighbors(x))
                if (cnt[v]++ == 0) touched.push_back(v);
        bool ok = true;
        for (int v : touched) {
            if (cnt[v] == 1 && (mode == Mode::skew || !in_w[v])) {
                ok = false;
                break;
            }
        }
        for (int v : touched) cnt[v] = 0;
        touched.clear();
        for (int x : w) in_w[x] = 0;
        return ok;
    }

    bool dfs(int lo, int need) {
        if (need == 0) return leaf_stalled();
        for (int x = lo; x + need <= n; ++x) {
            w.push_back(x);
            if (dfs(x + 1, need - 1)) return true;
            w.pop_back();
        }
        return false;
    }
};

} // namespace

FailedResult failed_forcing_number_serial(const Graph& g, Mode mode,
                                          const SearchOptions& opts) {
    int n = g.n();
    if (n < 1)
        throw std::invalid_argument("empty graph has no proper subsets to evaluate");
    RefScan scan(g, mode);
    uint64_t charged = 0;
    for (int t = 1; t <= n; ++t) {
        charged += detail::binom_capped(n, t, opts.budget + 1);
        if (charged > opts.budget)
            throw BudgetExceeded("complement search budget exceeded at |W|=" +
                                 std::to_string(t));
        if (scan.dfs(0, t)) {
            VertexSet s = VertexSet::full(n);
            for (int x : scan.w) s.reset(x);
            return {mode, n - t, s};
        }
    }
    return {mode, std::nullopt, std::nullopt};
}

} // namespace zf
