#ifndef ZF_FORCING_HPP
#define ZF_FORCING_HPP

#include <string>

#include "zf/graph.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

// standard: an empty vertex v is forced when some filled vertex u has v as
// its unique empty neighbor. skew: the forcing vertex u need not be filled.
enum class Mode { standard, skew };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

// All vertices forced in one synchronous round. Disjoint from `filled`.
VertexSet forced_vertices(const Graph& g, const VertexSet& filled, Mode mode);

// Least fixpoint containing `filled` under repeated forcing.
VertexSet closure(const Graph& g, const VertexSet& filled, Mode mode);

// Degree-count characterization: no eligible vertex has exactly one
// neighbor outside `filled`. Agrees with forced_vertices(...).none().
bool is_stalled(const Graph& g, const VertexSet& filled, Mode mode);

// True iff the closure fills every vertex.
bool is_forcing_set(const Graph& g, const VertexSet& filled, Mode mode);

} // namespace zf

#endif
