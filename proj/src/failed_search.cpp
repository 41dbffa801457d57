#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "subset_budget.hpp"
#include "zf/solvers.hpp"

namespace zf {

namespace {

// Per-thread incremental state for one cardinality class. cnt[v] counts
// |N(v) & W| for the current complement W; ones counts vertices with
// cnt == 1, ones_in_w those of them inside W. S = V \ W is stalled iff
//   skew:     ones == 0
//   standard: ones == ones_in_w (every unit-count vertex lies in W).
struct ClassScan {
    const Graph& g;
    Mode mode;
    int n;
    std::vector<uint16_t> cnt;
    std::vector<uint8_t> in_w;
    std::vector<int> stack;
    int ones = 0;
    int ones_in_w = 0;

    ClassScan(const Graph& graph, Mode m)
        : g(graph), mode(m), n(graph.n()), cnt(n, 0), in_w(n, 0) {}

    void push(int w) {
        for (int v : g.neighbors(w)) {
            uint16_t c = ++cnt[v];
            if (c == 1) {
                ++ones;
                if (in_w[v]) ++ones_in_w;
            } else if (c == 2) {
                --ones;
                if (in_w[v]) --ones_in_w;
            }
        }
        in_w[w] = 1;
        if (cnt[w] == 1) ++ones_in_w;
        stack.push_back(w);
    }

    void pop() {
        int w = stack.back();
        stack.pop_back();
        if (cnt[w] == 1) --ones_in_w;
        in_w[w] = 0;
        for (int v : g.neighbors(w)) {
            uint16_t c = --cnt[v];
            if (c == 0) {
                --ones;
                if (in_w[v]) --ones_in_w;
            } else if (c == 1) {
                ++ones;
                if (in_w[v]) ++ones_in_w;
            }
        }
    }

    bool stalled() const {
        return mode == Mode::skew ? ones == 0 : ones == ones_in_w;
    }

    // Extend the current stack by `need` ids from [lo, n), lexicographic.
    // Returns true on the first stalled hit, leaving the hit on the stack.
    // Abandons the subtree when a strictly smaller prefix already won;
    // such a prefix can never produce the canonical witness.
    bool extend(int lo, int need, const std::atomic<int>& best_first, int prefix) {
        if (need == 0) return stalled();
        if (prefix > best_first.load(std::memory_order_relaxed)) return false;
        for (int w = lo; w + need <= n; ++w) {
            push(w);
            if (extend(w + 1, need - 1, best_first, prefix)) return true;
            pop();
        }
        return false;
    }
};

// Lexicographically first stalled complement of size t, or nullopt.
// Parallel over the first element of W; the reduction keeps the hit with
// the smallest first element, which is the global lexicographic minimum
// because each prefix subtree is scanned serially in order.
std::optional<std::vector<int>> search_class(const Graph& g, Mode mode, int t, int threads) {
    int n = g.n();
    std::atomic<int> best_first{n};
    std::vector<std::vector<int>> hits(size_t(n) + 1);

#ifdef _OPENMP
    int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
        ClassScan scan(g, mode);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (int p = 0; p <= n - t; ++p) {
            if (p > best_first.load(std::memory_order_relaxed)) continue;
            scan.push(p);
            if (scan.extend(p + 1, t - 1, best_first, p)) {
                hits[p] = scan.stack;
                int cur = best_first.load(std::memory_order_relaxed);
                while (p < cur && !best_first.compare_exchange_weak(cur, p)) {
                }
            }
            while (!scan.stack.empty()) scan.pop();
        }
    }

    for (int p = 0; p + t <= n; ++p)
        if (!hits[p].empty()) return hits[p];
    return std::nullopt;
}

FailedResult wrap_hit(const Graph& g, Mode mode, int t, const std::vector<int>& w_ids) {
    VertexSet s = VertexSet::full(g.n());
    for (int w : w_ids) s.reset(w);
    return {mode, g.n() - t, s};
}

// Shared driver: scan complement cardinalities 1..t_max, charging the
// budget per class before scanning it so budget failures are independent
// of schedule and thread count.
std::optional<FailedResult> scan_classes(const Graph& g, Mode mode, int t_max,
                                         const SearchOptions& opts) {
    int n = g.n();
    if (n < 1)
        throw std::invalid_argument("empty graph has no proper subsets to evaluate");
    uint64_t charged = 0;
    for (int t = 1; t <= t_max; ++t) {
        charged += detail::binom_capped(n, t, opts.budget + 1);
        if (charged > opts.budget)
            throw BudgetExceeded("complement search budget exceeded at |W|=" +
                                 std::to_string(t));
        if (auto w = search_class(g, mode, t, opts.threads))
            return wrap_hit(g, mode, t, *w);
    }
    return std::nullopt;
}

} // namespace

FailedResult failed_forcing_number(const Graph& g, Mode mode, const SearchOptions& opts) {
    if (auto hit = scan_classes(g, mode, g.n(), opts)) return *hit;
    return {mode, std::nullopt, std::nullopt};
}

bool decide_failed(const Graph& g, int s, Mode mode, const SearchOptions& opts) {
    if (g.n() < 1)
        throw std::invalid_argument("empty graph has no proper subsets to evaluate");
    if (s < 0) throw std::invalid_argument("threshold s must be non-negative");
    int t_max = g.n() - s;
    if (t_max < 1) return false; // proper subsets have at most n-1 vertices
    return scan_classes(g, mode, t_max, opts).has_value();
}

} // namespace zf
