#ifndef ZF_IO_HPP
#define ZF_IO_HPP

#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class GraphFormat { edgelist, dimacs };

// Parse outcome: the graph plus non-fatal notes (currently only collapsed
// duplicate edges).
struct ParseResult {
    Graph graph;
    bool had_duplicates = false;
    std::vector<std::string> warnings;
};

// Edge-list format: header "n m", then m lines "u v" with 0-based ids.
// DIMACS subset: "c" comments, one "p edge n m" line, "e u v" lines 1-based.
// Lines starting with '#' (edge-list) or 'c' (DIMACS) and blank lines are
// ignored. Malformed input, self-loops and out-of-range ids throw
// std::runtime_error; duplicate edges collapse with a warning.
ParseResult parse_graph(const std::string& text, GraphFormat format);

ParseResult parse_graph_file(const std::string& path, GraphFormat format);

// Canonical text form; round-trips through parse_graph bit-exactly.
std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace zf

#endif
