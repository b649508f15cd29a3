#pragma once

// Modules, the partition into maximal strong modules, quotient graphs and
// primality. The partition is defined for graphs whose complement and
// underlying graph are both connected (single vertices included); all other
// inputs are rejected because the partition is not meaningful there.

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sgc {

struct ModulePartition {
    Graph host;
    std::vector<VertexSet> parts;

    // Index of the part containing each vertex.
    std::vector<int> part_of() const {
        std::vector<int> out(host.vertex_count(), -1);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int v : parts[i]) out[v] = static_cast<int>(i);
        return out;
    }
};

// True iff every vertex outside x is adjacent to all of x or none of x.
inline bool is_module(const Graph& g, const VertexSet& x) {
    check_in_range(g, x, "is_module");
    const int n = g.vertex_count();
    std::vector<bool> in(n, false);
    for (int v : x) in[v] = true;
    for (int z = 0; z < n; ++z) {
        if (in[z]) continue;
        int seen = 0;
        for (int v : x)
            if (g.adjacent(z, v)) ++seen;
        if (seen != 0 && seen != x.size()) return false;
    }
    return true;
}

namespace detail {

// Grows {u, v} to the smallest module containing both: while some outside
// vertex is adjacent to part of the set but not all of it, pull it in.
// Returns the member bitmap; `size` reports the final cardinality.
inline std::vector<bool> module_closure(const Graph& g, int u, int v, int& size) {
    const int n = g.vertex_count();
    std::vector<bool> in(n, false);
    in[u] = in[v] = true;
    size = 2;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int z = 0; z < n; ++z) {
            if (in[z]) continue;
            int adj = 0, total = 0;
            for (int w = 0; w < n; ++w) {
                if (!in[w]) continue;
                ++total;
                if (g.adjacent(z, w)) ++adj;
            }
            if (adj != 0 && adj != total) {
                in[z] = true;
                ++size;
                grew = true;
            }
        }
    }
    return in;
}

} // namespace detail

// Partition of V(g) into maximal strong modules. Two vertices share a part
// exactly when the smallest module containing both is proper; every proper
// module sits inside a single part, which the implementation exploits to
// classify whole closures at once.
inline ModulePartition maximal_strong_modules(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g) || !is_connected(complement(g)))
        throw std::invalid_argument(
            "maximal_strong_modules: graph and complement must both be connected");

    std::vector<int> part(n, -1);
    std::vector<VertexSet> parts;
    for (int u = 0; u < n; ++u) {
        if (part[u] != -1) continue;
        std::vector<int> members{u};
        int id = static_cast<int>(parts.size());
        part[u] = id;
        for (int v = u + 1; v < n; ++v) {
            if (part[v] != -1) continue;
            int size = 0;
            std::vector<bool> closure = detail::module_closure(g, u, v, size);
            if (size == n) continue;
            for (int w = 0; w < n; ++w)
                if (closure[w] && part[w] == -1) {
                    part[w] = id;
                    members.push_back(w);
                }
        }
        parts.emplace_back(std::move(members));
    }
    return ModulePartition{g, std::move(parts)};
}

// True iff g has at least 3 vertices and only trivial modules.
inline bool is_prime(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    if (!is_connected(g) || !is_connected(complement(g))) return false;
    ModulePartition p = maximal_strong_modules(g);
    return static_cast<int>(p.parts.size()) == n;
}

// One vertex per maximal strong module; quotient vertices are adjacent
// exactly when the parts are fully joined in g. Vertex i of the result is
// the part with the i-th smallest minimum element, matching the order
// produced by maximal_strong_modules.
inline Graph quotient_graph_of(const ModulePartition& p) {
    const int k = static_cast<int>(p.parts.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p.host.adjacent(p.parts[i].ids().front(), p.parts[j].ids().front()))
                b.add_edge(i, j);
    return b.take();
}

inline Graph quotient_graph(const Graph& g) {
    return quotient_graph_of(maximal_strong_modules(g));
}

inline void write_module_partition(std::ostream& out, const ModulePartition& p) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        out << i << ':';
        for (int v : p.parts[i]) out << ' ' << v;
        out << '\n';
    }
}

inline std::string module_partition_to_string(const ModulePartition& p) {
    std::ostringstream out;
    write_module_partition(out, p);
    return out.str();
}

} // namespace sgc
