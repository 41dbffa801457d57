#ifndef ZF_REDUCTION_HPP
#define ZF_REDUCTION_HPP

#include <cstdint>
#include <vector>

#include "zf/graph.hpp"
#include "zf/solvers.hpp"

namespace zf {

// Role of a gadget vertex: a vertex carried over from the source graph, a
// vertex on the per-edge path (layer 0 is the subdivision midpoint), or
// the apex adjacent to every midpoint.
enum class LabelKind { original, path, epsilon };

struct GadgetLabel {
    LabelKind kind;
    int vertex = -1; // original: source vertex id
    int edge = -1;   // path: index into source_edges
    int layer = -1;  // path: 0..2n
};

// Gadget graph produced by reduce(), with the labeling back to the source.
// Id layout: 0..n-1 are the source vertices, then one contiguous block of
// 2n+1 path vertices per source edge in canonical edge order, apex last.
struct ReducedGraph {
    Graph graph;
    std::vector<GadgetLabel> labels;
    EdgeList source_edges;
    int n_src = 0;

    int m_src() const { return int(source_edges.size()); }
    int block_len() const { return 2 * n_src + 1; }
    int path_id(int edge, int layer) const { return n_src + edge * block_len() + layer; }
    int epsilon_id() const { return graph.n() - 1; }
};

// Verdict of one reduction run: the maximum stalled subsets of the gadget
// in both modes against the size predicted from the source's maximum
// independent set.
struct ReductionCertificate {
    int n = 0;
    int m = 0;
    int k = 0;
    int64_t predicted = 0; // (2n+1)m + k
    FailedResult standard_result;
    FailedResult skew_result;
    bool verdict = false;
};

// Structural consequences that every large proper stalled subset of a
// gadget must satisfy. Each field is vacuously true when its size
// hypothesis |s| >= (2n+1)m + 2 does not apply.
struct StalledStructureReport {
    bool hypothesis_applies = false;
    bool all_paths_filled = true;       // every path vertex is in s
    bool epsilon_absent = true;         // the apex is not in s
    bool trace_component_union = true;  // only checked when the apex is in s
    bool trace_independent = true;      // s restricted to source vertices
    bool all_hold() const {
        return all_paths_filled && epsilon_absent && trace_component_union &&
               trace_independent;
    }
};

// g plus one new vertex (id n) adjacent to everything: connects the graph
// without changing the maximum independent set size.
Graph connectify(const Graph& g);

// Build the gadget: subdivide each edge, grow a path of 2n more vertices
// from each midpoint, attach the apex to all midpoints. Requires a
// connected source with n >= 2 and at least one edge.
ReducedGraph reduce(const Graph& g);

// Filled set made of the source-independent set's originals plus every
// path vertex. Always skew stalled (hence standard stalled).
VertexSet build_witness(const ReducedGraph& rg, const VertexSet& independent);

// For a standard-stalled s: whenever two consecutive path vertices of some
// edge are in s, the whole block of that edge is. Throws if s is not
// stalled.
bool stalled_paths_complete(const ReducedGraph& rg, const VertexSet& s);

// Evaluate the structural report for a proper standard-stalled s. Throws
// if s is not a proper stalled subset.
StalledStructureReport check_stalled_structure(const ReducedGraph& rg, const VertexSet& s);

// Full pipeline: MIS on the source, reduce, solve the gadget in both
// modes, compare with (2n+1)m + k.
ReductionCertificate verify_reduction(const Graph& g, const SearchOptions& opts = {});

} // namespace zf

#endif
