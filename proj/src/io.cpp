#include "zf/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zf {

namespace {

[[noreturn]] void fail(size_t lineno, const std::string& what) {
    throw std::runtime_error("parse error (line " + std::to_string(lineno) + "): " + what);
}

long parse_int(const std::string& tok, size_t lineno) {
    size_t pos = 0;
    long val = 0;
    try {
        val = std::stol(tok, &pos);
    } catch (const std::exception&) {
        fail(lineno, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) fail(lineno, "expected integer, got '" + tok + "'");
    return val;
}

struct Line {
    size_t no;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text, char comment_prefix) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0][0] == comment_prefix) continue;
        out.push_back({lineno, std::move(toks)});
    }
    return out;
}

ParseResult build(int n, long m_declared, const std::vector<std::pair<int, int>>& raw_edges,
                  size_t header_line) {
    if (long(raw_edges.size()) != m_declared)
        fail(header_line, "declared " + std::to_string(m_declared) + " edges, found " +
                              std::to_string(raw_edges.size()));
    ParseResult res;
    std::set<std::pair<int, int>> seen;
    EdgeList edges;
    for (auto [u, v] : raw_edges) {
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            res.had_duplicates = true;
            continue;
        }
        edges.emplace_back(u, v);
    }
    if (res.had_duplicates)
        res.warnings.push_back("duplicate edges collapsed (" +
                               std::to_string(raw_edges.size() - edges.size()) + ")");
    res.graph = Graph(n, edges);
    return res;
}

ParseResult parse_edgelist(const std::string& text) {
    auto lines = tokenize(text, '#');
    if (lines.empty()) fail(0, "missing 'n m' header");
    const Line& header = lines[0];
    if (header.tokens.size() != 2) fail(header.no, "header must be 'n m'");
    long n = parse_int(header.tokens[0], header.no);
    long m = parse_int(header.tokens[1], header.no);
    if (n < 0 || m < 0) fail(header.no, "negative count in header");

    std::vector<std::pair<int, int>> raw;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens.size() != 2) fail(ln.no, "edge line must be 'u v'");
        long u = parse_int(ln.tokens[0], ln.no);
        long v = parse_int(ln.tokens[1], ln.no);
        if (u < 0 || u >= n || v < 0 || v >= n) fail(ln.no, "vertex id out of range");
        if (u == v) fail(ln.no, "self-loop");
        raw.emplace_back(int(u), int(v));
    }
    return build(int(n), m, raw, header.no);
}

ParseResult parse_dimacs(const std::string& text) {
    auto lines = tokenize(text, 'c');
    long n = -1, m = -1;
    size_t header_line = 0;
    std::vector<std::pair<int, int>> raw;
    for (const Line& ln : lines) {
        if (ln.tokens[0] == "p") {
            if (n >= 0) fail(ln.no, "duplicate problem line");
            if (ln.tokens.size() != 4 || ln.tokens[1] != "edge")
                fail(ln.no, "problem line must be 'p edge n m'");
            n = parse_int(ln.tokens[2], ln.no);
            m = parse_int(ln.tokens[3], ln.no);
            if (n < 0 || m < 0) fail(ln.no, "negative count in problem line");
            header_line = ln.no;
        } else if (ln.tokens[0] == "e") {
            if (n < 0) fail(ln.no, "edge before problem line");
            if (ln.tokens.size() != 3) fail(ln.no, "edge line must be 'e u v'");
            long u = parse_int(ln.tokens[1], ln.no);
            long v = parse_int(ln.tokens[2], ln.no);
            if (u < 1 || u > n || v < 1 || v > n) fail(ln.no, "vertex id out of range");
            if (u == v) fail(ln.no, "self-loop");
            raw.emplace_back(int(u - 1), int(v - 1));
        } else {
            fail(ln.no, "unknown line type '" + ln.tokens[0] + "'");
        }
    }
    if (n < 0) fail(0, "missing problem line");
    return build(int(n), m, raw, header_line);
}

} // namespace

ParseResult parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(text) : parse_dimacs(text);
}

ParseResult parse_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::edgelist) {
        out << g.n() << ' ' << g.m() << '\n';
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.n() << ' ' << g.m() << '\n';
        for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

} // namespace zf
