#include "zf/reduction.hpp"

#include <stdexcept>

#include "zf/forcing.hpp"

namespace zf {

namespace {

bool independent_in_source(const ReducedGraph& rg, const VertexSet& s_orig) {
    for (auto [a, b] : rg.source_edges)
        if (s_orig.test(a) && s_orig.test(b)) return false;
    return true;
}

VertexSet original_trace(const ReducedGraph& rg, const VertexSet& s) {
    VertexSet t(rg.n_src);
    for (int v = 0; v < rg.n_src; ++v)
        if (s.test(v)) t.set(v);
    return t;
}

} // namespace

Graph connectify(const Graph& g) {
    int n = g.n();
    if (n < 1) throw std::invalid_argument("connectify: empty graph");
    EdgeList edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
    return Graph(n + 1, edges);
}

ReducedGraph reduce(const Graph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("reduce: source must have at least 2 vertices");
    if (g.m() < 1) throw std::invalid_argument("reduce: source has no edges");
    if (!is_connected(g)) throw std::invalid_argument("reduce: source must be connected");

    ReducedGraph rg;
    rg.n_src = n;
    rg.source_edges = g.edges();
    int m = rg.m_src();
    int block = 2 * n + 1;
    int total = block * m + n + 1;
    int epsilon = total - 1;

    rg.labels.resize(total);
    for (int v = 0; v < n; ++v) rg.labels[v] = {LabelKind::original, v, -1, -1};
    for (int e = 0; e < m; ++e)
        for (int i = 0; i < block; ++i)
            rg.labels[n + e * block + i] = {LabelKind::path, -1, e, i};
    rg.labels[epsilon] = {LabelKind::epsilon, -1, -1, -1};

    EdgeList edges;
    edges.reserve(size_t(2 * n + 3) * m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = rg.source_edges[e];
        int mid = n + e * block;
        edges.emplace_back(u, mid);
        edges.emplace_back(mid, v);
        for (int i = 0; i + 1 < block; ++i)
            edges.emplace_back(mid + i, mid + i + 1);
        edges.emplace_back(epsilon, mid);
    }
    rg.graph = Graph(total, edges);
    return rg;
}

VertexSet build_witness(const ReducedGraph& rg, const VertexSet& independent) {
    if (independent.universe() != rg.n_src)
        throw std::invalid_argument("build_witness: set universe does not match source");
    if (!independent_in_source(rg, independent))
        throw std::invalid_argument("build_witness: set is not independent in the source");

    VertexSet w(rg.graph.n());
    for (int v : independent.members()) w.set(v);
    for (int e = 0; e < rg.m_src(); ++e)
        for (int i = 0; i < rg.block_len(); ++i) w.set(rg.path_id(e, i));
    return w;
}

bool stalled_paths_complete(const ReducedGraph& rg, const VertexSet& s) {
    if (!is_stalled(rg.graph, s, Mode::standard))
        throw std::invalid_argument("stalled_paths_complete: set is not stalled");

    int block = rg.block_len();
    for (int e = 0; e < rg.m_src(); ++e) {
        bool adjacent_pair = false;
        for (int i = 0; i + 1 < block && !adjacent_pair; ++i)
            adjacent_pair = s.test(rg.path_id(e, i)) && s.test(rg.path_id(e, i + 1));
        if (!adjacent_pair) continue;
        for (int i = 0; i < block; ++i)
            if (!s.test(rg.path_id(e, i))) return false;
    }
    return true;
}

StalledStructureReport check_stalled_structure(const ReducedGraph& rg, const VertexSet& s) {
    if (s.count() == rg.graph.n())
        throw std::invalid_argument("check_stalled_structure: set is not proper");
    if (!is_stalled(rg.graph, s, Mode::standard))
        throw std::invalid_argument("check_stalled_structure: set is not stalled");

    StalledStructureReport rep;
    int64_t threshold = int64_t(rg.block_len()) * rg.m_src() + 2;
    rep.hypothesis_applies = s.count() >= threshold;
    if (!rep.hypothesis_applies) return rep;

    for (int e = 0; e < rg.m_src() && rep.all_paths_filled; ++e)
        for (int i = 0; i < rg.block_len(); ++i)
            if (!s.test(rg.path_id(e, i))) {
                rep.all_paths_filled = false;
                break;
            }

    bool has_epsilon = s.test(rg.epsilon_id());
    rep.epsilon_absent = !has_epsilon;

    VertexSet trace = original_trace(rg, s);
    if (has_epsilon) {
        // The trace may not cut any source edge.
        for (auto [a, b] : rg.source_edges)
            if (trace.test(a) != trace.test(b)) {
                rep.trace_component_union = false;
                break;
            }
    }
    rep.trace_independent = independent_in_source(rg, trace);
    return rep;
}

ReductionCertificate verify_reduction(const Graph& g, const SearchOptions& opts) {
    ReductionCertificate cert;
    cert.n = g.n();
    cert.m = g.m();
    cert.k = max_independent_set(g).k;
    cert.predicted = int64_t(2 * cert.n + 1) * cert.m + cert.k;

    ReducedGraph rg = reduce(g);
    cert.standard_result = failed_forcing_number(rg.graph, Mode::standard, opts);
    cert.skew_result = failed_forcing_number(rg.graph, Mode::skew, opts);

    cert.verdict = cert.standard_result.value.has_value() &&
                   cert.skew_result.value.has_value() &&
                   int64_t(*cert.standard_result.value) == cert.predicted &&
                   int64_t(*cert.skew_result.value) == cert.predicted;
    return cert;
}

} // namespace zf
