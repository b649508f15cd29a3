#pragma once

// Tree families (paths, stars, bistars, tristars, claw subdivisions and
// general spiders), shape classification, canonical codes for free-tree
// isomorphism, enumeration of all free trees of a given order, and the
// 40-member catalog of trees whose status is not resolved to hard.
//
// Vertex layouts produced by build_tree:
//   Path(n)            0-1-...-(n-1)
//   Star(x)            center 0, leaves 1..x
//   Bistar(x,y)        centers 0,1; x leaves 2..x+1 on 0; y leaves on 1
//   Tristar(x,y,z)     spine 0-1-2; x leaves on 0, y on 1, z on 2, in order
//   ClawSubdivision    center 0; legs laid out consecutively, x then y then z
// Parameters are canonicalized on construction: bistar x <= y, tristar
// x <= z, claw subdivision x <= y <= z.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_io.hpp"

namespace sgc {

enum class TreeShape { Path, Star, Bistar, Tristar, ClawSubdivision, Explicit };

struct TreeSpec {
    TreeShape shape = TreeShape::Path;
    int a = 1, b = 0, c = 0;
    Graph graph; // Explicit only

    static TreeSpec path(int n) {
        if (n < 1) throw std::invalid_argument("tree spec: path needs n >= 1");
        TreeSpec s;
        s.shape = TreeShape::Path;
        s.a = n;
        return s;
    }
    static TreeSpec star(int x) {
        if (x < 1) throw std::invalid_argument("tree spec: star needs x >= 1");
        TreeSpec s;
        s.shape = TreeShape::Star;
        s.a = x;
        return s;
    }
    static TreeSpec bistar(int x, int y) {
        if (x < 1 || y < 1) throw std::invalid_argument("tree spec: bistar needs x, y >= 1");
        TreeSpec s;
        s.shape = TreeShape::Bistar;
        s.a = std::min(x, y);
        s.b = std::max(x, y);
        return s;
    }
    static TreeSpec tristar(int x, int y, int z) {
        if (x < 1 || z < 1 || y < 0)
            throw std::invalid_argument("tree spec: tristar needs x, z >= 1 and y >= 0");
        TreeSpec s;
        s.shape = TreeShape::Tristar;
        s.a = std::min(x, z);
        s.b = y;
        s.c = std::max(x, z);
        return s;
    }
    static TreeSpec claw_subdivision(int x, int y, int z) {
        if (x < 1 || y < 1 || z < 1)
            throw std::invalid_argument("tree spec: claw subdivision needs x, y, z >= 1");
        std::vector<int> legs{x, y, z};
        std::sort(legs.begin(), legs.end());
        TreeSpec s;
        s.shape = TreeShape::ClawSubdivision;
        s.a = legs[0];
        s.b = legs[1];
        s.c = legs[2];
        return s;
    }
    static TreeSpec explicit_tree(Graph g) {
        if (!is_tree(g)) throw std::invalid_argument("tree spec: explicit graph must be a tree");
        TreeSpec s;
        s.shape = TreeShape::Explicit;
        s.graph = std::move(g);
        return s;
    }
};

// Spider: center plus paths (legs) attached to it. The general form covers
// claw subdivisions (3 legs) and the wider spiders used by the hardness
// cascade. Center is vertex 0; legs are laid out consecutively.
inline Graph build_spider(const std::vector<int>& legs) {
    int n = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("build_spider: leg lengths must be >= 1");
        n += len;
    }
    GraphBuilder b(n);
    int next = 1;
    for (int len : legs) {
        b.add_edge(0, next);
        for (int i = 1; i < len; ++i) b.add_edge(next + i - 1, next + i);
        next += len;
    }
    return b.take();
}

inline Graph build_tree(const TreeSpec& spec) {
    switch (spec.shape) {
        case TreeShape::Path: {
            GraphBuilder b(spec.a);
            for (int i = 0; i + 1 < spec.a; ++i) b.add_edge(i, i + 1);
            return b.take();
        }
        case TreeShape::Star: {
            GraphBuilder b(spec.a + 1);
            for (int i = 1; i <= spec.a; ++i) b.add_edge(0, i);
            return b.take();
        }
        case TreeShape::Bistar: {
            const int x = spec.a, y = spec.b;
            GraphBuilder b(x + y + 2);
            b.add_edge(0, 1);
            for (int i = 0; i < x; ++i) b.add_edge(0, 2 + i);
            for (int i = 0; i < y; ++i) b.add_edge(1, 2 + x + i);
            return b.take();
        }
        case TreeShape::Tristar: {
            const int x = spec.a, y = spec.b, z = spec.c;
            GraphBuilder b(x + y + z + 3);
            b.add_edge(0, 1);
            b.add_edge(1, 2);
            for (int i = 0; i < x; ++i) b.add_edge(0, 3 + i);
            for (int i = 0; i < y; ++i) b.add_edge(1, 3 + x + i);
            for (int i = 0; i < z; ++i) b.add_edge(2, 3 + x + y + i);
            return b.take();
        }
        case TreeShape::ClawSubdivision:
            return build_spider({spec.a, spec.b, spec.c});
        case TreeShape::Explicit:
            return spec.graph;
    }
    throw std::logic_error("build_tree: unhandled shape");
}

// Internal vertices of a tree are those of degree at least 2; the rest,
// including the vertex of a one-vertex tree, count as leaves.
inline std::vector<int> tree_leaves(const Graph& t) {
    std::vector<int> out;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) <= 1) out.push_back(v);
    return out;
}

inline std::vector<int> internal_vertices(const Graph& t) {
    std::vector<int> out;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) >= 2) out.push_back(v);
    return out;
}

// Induced subgraph on the internal vertices. Trees without internal
// vertices have no internal tree and are rejected.
inline Graph internal_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("internal_tree: input must be a tree");
    std::vector<int> internal = internal_vertices(t);
    if (internal.empty())
        throw std::invalid_argument("internal_tree: tree has no internal vertices");
    return induced_subgraph(t, VertexSet(internal));
}

// Number of leaf neighbors of v.
inline int leaf_neighbor_count(const Graph& t, int v) {
    int count = 0;
    for (int u : t.neighbors(v))
        if (t.degree(u) == 1) ++count;
    return count;
}

// Leg lengths (edge counts) when t is a spider with at least 3 legs:
// exactly one vertex of degree >= 3 and every other vertex of degree <= 2.
inline std::optional<std::vector<int>> spider_legs(const Graph& t) {
    if (!is_tree(t)) return std::nullopt;
    int center = -1;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.degree(v) >= 3) {
            if (center != -1) return std::nullopt;
            center = v;
        }
    }
    if (center == -1) return std::nullopt;
    std::vector<int> legs;
    for (int start : t.neighbors(center)) {
        int len = 1, prev = center, cur = start;
        while (t.degree(cur) == 2) {
            for (int w : t.neighbors(cur))
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    return legs;
}

// Canonical family tag of a tree, keyed by the number of internal vertices,
// with paths preferred whenever the tree is a path. Trees with 4 or more
// internal vertices and 4 or more leaves fall back to Explicit.
inline TreeSpec classify_shape(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("classify_shape: input must be a tree");
    const int n = t.vertex_count();
    std::vector<int> internal = internal_vertices(t);
    const int p = static_cast<int>(internal.size());

    if (p == 0) return TreeSpec::path(n);
    if (p == 1) {
        if (n == 3) return TreeSpec::path(3);
        return TreeSpec::star(n - 1);
    }
    if (p == 2) {
        int x = leaf_neighbor_count(t, internal[0]);
        int y = leaf_neighbor_count(t, internal[1]);
        if (x == 1 && y == 1) return TreeSpec::path(4);
        return TreeSpec::bistar(x, y);
    }
    if (p == 3) {
        // the internal tree is a P3; its middle vertex carries the y count
        Graph inner = induced_subgraph(t, VertexSet(internal));
        int mid = -1;
        for (int i = 0; i < 3; ++i)
            if (inner.degree(i) == 2) mid = i;
        std::vector<int> ends;
        for (int i = 0; i < 3; ++i)
            if (i != mid) ends.push_back(i);
        int x = leaf_neighbor_count(t, internal[ends[0]]);
        int y = leaf_neighbor_count(t, internal[mid]);
        int z = leaf_neighbor_count(t, internal[ends[1]]);
        if (x == 1 && y == 0 && z == 1) return TreeSpec::path(5);
        return TreeSpec::tristar(x, y, z);
    }

    int leaf_count = n - p;
    if (leaf_count == 2) return TreeSpec::path(n);
    if (leaf_count == 3) {
        auto legs = spider_legs(t);
        return TreeSpec::claw_subdivision((*legs)[0], (*legs)[1], (*legs)[2]);
    }
    return TreeSpec::explicit_tree(t);
}

// Grammar: P<n>, K1,<x>, T<x>,<y>, T<x>,<y>,<z>, C<x>,<y>,<z>, @<path>.
inline TreeSpec parse_tree_spec(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("tree spec: empty");
    if (text[0] == '@') return TreeSpec::explicit_tree(read_graph_file(text.substr(1)));

    auto parse_ints = [&](std::size_t from) {
        std::vector<int> out;
        std::size_t i = from;
        while (i < text.size()) {
            std::size_t next = text.find(',', i);
            std::string token = text.substr(i, next == std::string::npos ? next : next - i);
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("tree spec: bad number in '" + text + "'");
            out.push_back(std::stoi(token));
            if (next == std::string::npos) break;
            i = next + 1;
            if (i == text.size()) throw std::invalid_argument("tree spec: trailing comma");
        }
        return out;
    };

    char kind = text[0];
    if (kind == 'P') {
        auto v = parse_ints(1);
        if (v.size() != 1) throw std::invalid_argument("tree spec: path takes one number");
        return TreeSpec::path(v[0]);
    }
    if (kind == 'K') {
        if (text.rfind("K1,", 0) != 0) throw std::invalid_argument("tree spec: stars are K1,<x>");
        auto v = parse_ints(3);
        if (v.size() != 1) throw std::invalid_argument("tree spec: star takes one number");
        return TreeSpec::star(v[0]);
    }
    if (kind == 'T') {
        auto v = parse_ints(1);
        if (v.size() == 2) return TreeSpec::bistar(v[0], v[1]);
        if (v.size() == 3) return TreeSpec::tristar(v[0], v[1], v[2]);
        throw std::invalid_argument("tree spec: T takes two or three numbers");
    }
    if (kind == 'C') {
        auto v = parse_ints(1);
        if (v.size() != 3) throw std::invalid_argument("tree spec: C takes three numbers");
        return TreeSpec::claw_subdivision(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("tree spec: unrecognized form '" + text + "'");
}

inline std::string format_tree_spec(const TreeSpec& spec) {
    switch (spec.shape) {
        case TreeShape::Path:
            return "P" + std::to_string(spec.a);
        case TreeShape::Star:
            return "K1," + std::to_string(spec.a);
        case TreeShape::Bistar:
            return "T" + std::to_string(spec.a) + "," + std::to_string(spec.b);
        case TreeShape::Tristar:
            return "T" + std::to_string(spec.a) + "," + std::to_string(spec.b) + "," +
                   std::to_string(spec.c);
        case TreeShape::ClawSubdivision:
            return "C" + std::to_string(spec.a) + "," + std::to_string(spec.b) + "," +
                   std::to_string(spec.c);
        case TreeShape::Explicit:
            break;
    }
    // spiders with more than 3 legs keep the subscript-list notation
    if (auto legs = spider_legs(spec.graph)) {
        std::string out = "C";
        for (std::size_t i = 0; i < legs->size(); ++i)
            out += (i ? "," : "") + std::to_string((*legs)[i]);
        return out;
    }
    return "tree(n=" + std::to_string(spec.graph.vertex_count()) + ")";
}

// Readable name for an arbitrary tree: its family tag when it has one.
inline std::string tree_display_name(const Graph& t) {
    return format_tree_spec(classify_shape(t));
}

namespace detail {

inline std::string ahu_rooted_code(const Graph& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : t.neighbors(v))
        if (u != parent) child_codes.push_back(ahu_rooted_code(t, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
}

// Center(s) of a tree by repeated leaf removal; one or two vertices.
inline std::vector<int> tree_centers(const Graph& t) {
    const int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] == 1) frontier.push_back(v);
    }
    int remaining = n;
    std::vector<bool> removed(n, false);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[v] = true;
            --remaining;
            for (int u : t.neighbors(v))
                if (!removed[u] && --degree[u] == 1) next.push_back(u);
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

} // namespace detail

// Canonical code: equal codes iff the trees are isomorphic. Rooted at the
// center; bicentral trees combine the two halves across the central edge.
inline std::string free_tree_code(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("free_tree_code: input must be a tree");
    std::vector<int> centers = detail::tree_centers(t);
    if (centers.size() == 1) return detail::ahu_rooted_code(t, centers[0], -1);
    std::string a = detail::ahu_rooted_code(t, centers[0], centers[1]);
    std::string b = detail::ahu_rooted_code(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

// All free trees with exactly n vertices, one representative per
// isomorphism class, in a deterministic order. Built by extending each
// (n-1)-vertex tree with one leaf in every position and deduplicating,
// which is exhaustive because removing a leaf of any n-vertex tree yields
// an (n-1)-vertex tree.
inline std::vector<Graph> enumerate_free_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_free_trees: n must be >= 1");
    std::vector<Graph> current{Graph::complete(1)};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::map<std::string, bool> seen;
        for (const Graph& t : current) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                GraphBuilder b(size);
                for (auto [x, y] : t.edges()) b.add_edge(x, y);
                b.add_edge(v, size - 1);
                Graph candidate = b.take();
                std::string code = free_tree_code(candidate);
                if (!seen.emplace(code, true).second) continue;
                next.push_back(std::move(candidate));
            }
        }
        current = std::move(next);
    }
    return current;
}

// The catalog: the 40 pairwise non-isomorphic trees the hardness map leaves
// unresolved. Five path members, stars with up to 4 leaves, bistars with
// both sides at most 4, the tristar block, and seven claw subdivisions;
// overlaps between the families are deduplicated by canonical code.
inline const std::vector<Graph>& catalog_members() {
    static const std::vector<Graph> members = [] {
        std::vector<TreeSpec> specs;
        for (int n = 1; n <= 5; ++n) specs.push_back(TreeSpec::path(n));
        for (int x = 1; x <= 4; ++x) specs.push_back(TreeSpec::star(x));
        for (int x = 1; x <= 4; ++x)
            for (int y = x; y <= 4; ++y) specs.push_back(TreeSpec::bistar(x, y));
        specs.push_back(TreeSpec::tristar(1, 0, 1));
        specs.push_back(TreeSpec::tristar(1, 0, 2));
        for (int y = 1; y <= 4; ++y)
            for (int z = 1; z <= 5; ++z) specs.push_back(TreeSpec::tristar(1, y, z));
        for (auto [x, y, z] : {std::array{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2},
                               {1, 2, 3}, {2, 2, 2}, {2, 2, 3}})
            specs.push_back(TreeSpec::claw_subdivision(x, y, z));

        std::vector<Graph> out;
        std::map<std::string, bool> seen;
        for (const TreeSpec& s : specs) {
            Graph t = build_tree(s);
            if (seen.emplace(free_tree_code(t), true).second) out.push_back(std::move(t));
        }
        return out;
    }();
    return members;
}

inline bool is_catalog_member(const Graph& t) {
    static const std::map<std::string, bool> codes = [] {
        std::map<std::string, bool> out;
        for (const Graph& m : catalog_members()) out.emplace(free_tree_code(m), true);
        return out;
    }();
    return is_tree(t) && codes.count(free_tree_code(t)) > 0;
}

} // namespace sgc
