#pragma once

// Text format for graphs:
//   # optional comment lines
//   n m
//   u v        (one line per edge, 0 <= u < v < n)
// The reader rejects loops, duplicate edges, out-of-range endpoints and
// malformed headers. The writer emits edges sorted lexicographically with
// u < v, so write/read round-trips are identity.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace sgc {

inline Graph read_graph(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    int line_no = 0;

    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string data;
    if (!next_data_line(data)) throw std::invalid_argument("graph: missing header line");
    {
        std::istringstream hs(data);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw std::invalid_argument("graph: bad header at line " + std::to_string(line_no));
        if (n < 0 || m < 0) throw std::invalid_argument("graph: negative header values");
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(data))
            throw std::invalid_argument("graph: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(data);
        long long u, v;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw std::invalid_argument("graph: bad edge at line " + std::to_string(line_no));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range at line " + std::to_string(line_no));
        if (u >= v)
            throw std::invalid_argument("graph: edges must satisfy u < v at line " + std::to_string(line_no));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(data)) throw std::invalid_argument("graph: trailing data after edge list");
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph: cannot open " + path);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

inline Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("graph: cannot open " + path + " for writing");
    write_graph(out, g);
}

} // namespace sgc
