#ifndef ZF_ENUMERATE_HPP
#define ZF_ENUMERATE_HPP

#include <vector>

#include "zf/graph.hpp"

namespace zf {

// All 2^(n(n-1)/2) labeled simple graphs on n vertices, in edge-mask order
// (pair (0,1) is the lowest bit). Guarded to n <= 6.
std::vector<Graph> all_graphs(int n);

// The connected ones, same order.
std::vector<Graph> all_connected_graphs(int n);

// One representative per isomorphism class of connected graphs on exactly
// n vertices, ordered by canonical edge mask. Guarded to n <= 6.
std::vector<Graph> connected_graphs_upto_iso(int n);

} // namespace zf

#endif
