#pragma once

// Undirected simple graphs over dense 0-based vertex ids, plus the elementary
// operations the rest of the library is built on: complementation, subgraph
// complementation, induced-subgraph search, composition, connectivity and
// small-scale isomorphism. Graph and VertexSet are immutable values; every
// operation returns a fresh graph.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sgc {

// Thrown when an enumeration budget runs out. Deliberately distinct from a
// negative answer: callers that get this know nothing about the instance.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A set of vertex ids, kept sorted and duplicate-free.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) { normalize(); }

    static VertexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return VertexSet(std::move(v));
    }

    bool contains(int v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    bool operator==(const VertexSet& o) const = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
        if (!ids_.empty() && ids_.front() < 0)
            throw std::invalid_argument("VertexSet: negative vertex id");
    }
    std::vector<int> ids_;
};

// A witness that flipping `members` puts a graph into the desired class,
// labelled with which procedure produced it.
struct SolutionSet {
    VertexSet members;
    std::string provenance;
};

namespace detail {

inline int word_count(int n) { return (n + 63) / 64; }

inline bool get_bit(const std::uint64_t* row, int i) {
    return (row[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(std::uint64_t* row, int i) {
    row[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline int popcount_words(const std::uint64_t* w, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
    return c;
}

} // namespace detail

class Graph {
public:
    Graph() = default;

    static Graph empty(int n) {
        check_order(n);
        Graph g;
        g.n_ = n;
        g.words_ = detail::word_count(n);
        g.adj_.assign(static_cast<std::size_t>(n) * g.words_, 0);
        return g;
    }

    static Graph complete(int n) {
        Graph g = empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge_unchecked(u, v);
        return g;
    }

    // Validates ids and rejects loops and duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g = empty(n);
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (g.adjacent(u, v))
                throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            g.add_edge_unchecked(u, v);
        }
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += detail::popcount_words(row(v), words_);
        return total / 2;
    }

    bool adjacent(int u, int v) const { return detail::get_bit(row(u), v); }

    int degree(int v) const { return detail::popcount_words(row(v), words_); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        const std::uint64_t* r = row(v);
        for (int u = 0; u < n_; ++u)
            if (detail::get_bit(r, u)) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
    int row_words() const { return words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    static void check_order(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    void add_edge_unchecked(int u, int v) {
        detail::set_bit(mutable_row(u), v);
        detail::set_bit(mutable_row(v), u);
    }

    std::uint64_t* mutable_row(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;

    friend class GraphBuilder;
};

// Mutable construction helper for the operations below. Cheaper than
// accumulating an edge list when the adjacency is computed bit by bit.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(Graph::empty(n)) {}
    explicit GraphBuilder(const Graph& g) : g_(g) {}

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("GraphBuilder: loop");
        g_.add_edge_unchecked(u, v);
    }
    void toggle_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("GraphBuilder: loop");
        g_.mutable_row(u)[v >> 6] ^= std::uint64_t{1} << (v & 63);
        g_.mutable_row(v)[u >> 6] ^= std::uint64_t{1} << (u & 63);
    }
    void remove_edge(int u, int v) {
        if (g_.adjacent(u, v)) toggle_edge(u, v);
    }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    int vertex_count() const { return g_.vertex_count(); }
    Graph take() { return std::move(g_); }

private:
    Graph g_;
};

inline void check_in_range(const Graph& g, const VertexSet& s, const char* what) {
    if (!s.empty() && s.ids().back() >= g.vertex_count())
        throw std::invalid_argument(std::string(what) + ": vertex id out of range");
}

// Flips the adjacency of every vertex pair inside s; pairs with an endpoint
// outside s are untouched.
inline Graph subgraph_complement(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "subgraph_complement");
    GraphBuilder b(g);
    const auto& ids = s.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            b.toggle_edge(ids[i], ids[j]);
    return b.take();
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.take();
}

// Induced subgraph on the given vertices; result vertex i corresponds to the
// i-th smallest member of a.
inline Graph induced_subgraph(const Graph& g, const VertexSet& a) {
    check_in_range(g, a, "induced_subgraph");
    const auto& ids = a.ids();
    GraphBuilder b(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.take();
}

// Relabels vertices: vertex v of g becomes perm[v] of the result.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) b.add_edge(perm[u], perm[v]);
    return b.take();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    GraphBuilder b(ng + h.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
    return b.take();
}

inline Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    GraphBuilder b(ng + nh);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) b.add_edge(u, ng + v);
    return b.take();
}

// Substitution g[h]: every vertex of g is replaced by a copy of h. Vertex
// (u, a) gets id u * |V(h)| + a. Copies of h are joined completely when the
// underlying g vertices are adjacent.
inline Graph substitute(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    GraphBuilder b(ng * nh);
    for (int u = 0; u < ng; ++u)
        for (auto [a, c] : h.edges()) b.add_edge(u * nh + a, u * nh + c);
    for (auto [u, v] : g.edges())
        for (int a = 0; a < nh; ++a)
            for (int c = 0; c < nh; ++c) b.add_edge(u * nh + a, v * nh + c);
    return b.take();
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = id;
                    q.push(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

inline bool induces_clique(const Graph& g, const VertexSet& s) {
    const auto& ids = s.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!g.adjacent(ids[i], ids[j])) return false;
    return true;
}

inline bool induces_independent_set(const Graph& g, const VertexSet& s) {
    const auto& ids = s.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) return false;
    return true;
}

namespace detail {

// Assignment order for the induced-subgraph search. The first vertex is a
// maximum-degree pattern vertex; afterwards we greedily pick the vertex whose
// constraints against already-placed vertices prune the host domain hardest,
// weighting edge and non-edge constraints by the host's density. Ties break
// toward smaller ids, so the order (and hence the returned witness) is a
// deterministic function of the inputs.
inline std::vector<int> pattern_order(const Graph& h, double host_density) {
    const int k = h.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    if (k == 0) return order;

    double d = std::min(0.95, std::max(0.05, host_density));
    // Cost reductions per constraint: log factors of the survival rate.
    double edge_gain = -std::log(d);
    double nonedge_gain = -std::log(1.0 - d);

    int first = 0;
    for (int v = 1; v < k; ++v)
        if (h.degree(v) > h.degree(first)) first = v;
    order.push_back(first);
    placed[first] = true;

    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        double best_score = -1.0;
        bool best_connected = false;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int nbr = 0, non = 0;
            for (int u : order) (h.adjacent(u, v) ? nbr : non)++;
            bool connected = nbr > 0;
            double score = nbr * edge_gain + non * nonedge_gain;
            // Prefer vertices adjacent to the placed prefix: their domain is
            // a neighborhood intersection rather than the whole host.
            if (std::make_tuple(connected, score) > std::make_tuple(best_connected, best_score)) {
                best = v;
                best_connected = connected;
                best_score = score;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;
    std::vector<int> chosen;          // host vertex per order position
    std::vector<std::uint64_t> used;  // host vertices already mapped
    std::vector<std::uint64_t> domain;

    InducedSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        int n = g.vertex_count();
        double density = n < 2 ? 0.5
                               : 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1));
        order = pattern_order(h, density);
        used.assign(g.row_words(), 0);
        domain.assign(g.row_words(), 0);
    }

    bool run(int depth) {
        const int k = h.vertex_count();
        if (depth == k) return true;
        const int n = g.vertex_count();
        const int words = g.row_words();
        int p = order[depth];

        std::vector<std::uint64_t> dom(words, ~std::uint64_t{0});
        if (n % 64) dom[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;
        if (words > 0 && n == 0) dom[0] = 0;
        for (int i = 0; i < depth; ++i) {
            const std::uint64_t* r = g.row(chosen[i]);
            if (h.adjacent(order[i], p))
                for (int w = 0; w < words; ++w) dom[w] &= r[w];
            else
                for (int w = 0; w < words; ++w) dom[w] &= ~r[w];
        }
        for (int w = 0; w < words; ++w) dom[w] &= ~used[w];

        int want = h.degree(p);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = dom[w];
            while (bits) {
                int c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (g.degree(c) < want) continue;
                chosen.push_back(c);
                set_bit(used.data(), c);
                if (run(depth + 1)) return true;
                used[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
                chosen.pop_back();
            }
        }
        return false;
    }
};

} // namespace detail

// Searches g for an induced copy of h. Returns a witness vertex set, or
// nullopt when g is h-free. Exhaustive, so the nullopt answer is a proof.
inline std::optional<VertexSet> contains_induced(const Graph& g, const Graph& h) {
    if (h.vertex_count() == 0) return VertexSet{};
    if (h.vertex_count() > g.vertex_count()) return std::nullopt;
    detail::InducedSearch s(g, h);
    if (!s.run(0)) return std::nullopt;
    return VertexSet(s.chosen);
}

namespace detail {

// One round of neighborhood color refinement; returns per-vertex colors
// canonicalized to 0..k-1 in order of first appearance of the class key.
inline std::vector<int> refine_colors(const Graph& g, const std::vector<int>& colors) {
    const int n = g.vertex_count();
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> around;
        for (int u : g.neighbors(v)) around.push_back(colors[u]);
        std::sort(around.begin(), around.end());
        around.push_back(colors[v]);
        keys[v] = {std::move(around), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(n);
    int next = -1;
    const std::vector<int>* prev = nullptr;
    for (auto& [key, v] : sorted) {
        if (!prev || *prev != key) {
            ++next;
            prev = &key;
        }
        out[v] = next;
    }
    return out;
}

inline std::vector<int> stable_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colors(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<int> refined = refine_colors(g, colors);
        if (refined == colors) break;
        colors = std::move(refined);
    }
    return colors;
}

inline std::vector<std::size_t> color_histogram(const std::vector<int>& colors) {
    std::vector<std::size_t> h;
    for (int c : colors) {
        if (static_cast<std::size_t>(c) >= h.size()) h.resize(c + 1, 0);
        ++h[static_cast<std::size_t>(c)];
    }
    return h;
}

inline bool iso_backtrack(const Graph& a, const Graph& b,
                          const std::vector<int>& ca, const std::vector<int>& cb,
                          std::vector<int>& map, std::vector<bool>& taken, int v) {
    const int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (taken[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        taken[w] = true;
        if (iso_backtrack(a, b, ca, cb, map, taken, v + 1)) return true;
        taken[w] = false;
    }
    return false;
}

} // namespace detail

// Exact isomorphism test. Color refinement first, then backtracking over
// color-compatible bijections. Intended for graphs up to roughly 20 vertices.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<int> ca = detail::stable_colors(a);
    std::vector<int> cb = detail::stable_colors(b);
    if (detail::color_histogram(ca) != detail::color_histogram(cb)) return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<bool> taken(b.vertex_count(), false);
    return detail::iso_backtrack(a, b, ca, cb, map, taken, 0);
}

inline bool is_self_complementary(const Graph& g) {
    return is_isomorphic(g, complement(g));
}

namespace detail {

// Unit-capacity max flow on the vertex-split network, which equals the
// number of internally disjoint s-t paths for non-adjacent s and t.
class VertexFlow {
public:
    VertexFlow(const Graph& g, int s, int t) : g_(g), n_(g.vertex_count()) {
        // Node 2v = "in", 2v+1 = "out". Arcs: in->out cap 1 (cap n for s,t),
        // and u.out -> v.in cap n for each edge uv (both directions).
        node_count_ = 2 * n_;
        head_.assign(node_count_, -1);
        for (int v = 0; v < n_; ++v)
            add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n_ : 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, n_);
            add_arc(2 * v + 1, 2 * u, n_);
        }
        source_ = 2 * s;
        sink_ = 2 * t + 1;
    }

    int max_flow() {
        int total = 0;
        while (bfs()) {
            ptr_.assign(node_count_, 0);
            for (int v = 0; v < node_count_; ++v) ptr_[v] = head_[v];
            while (int pushed = dfs(source_, n_)) total += pushed;
        }
        return total;
    }

private:
    struct Arc {
        int to, next, cap;
    };

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    bool bfs() {
        level_.assign(node_count_, -1);
        std::queue<int> q;
        q.push(source_);
        level_[source_] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] == -1) {
                    level_[arcs_[e].to] = level_[v] + 1;
                    q.push(arcs_[e].to);
                }
        }
        return level_[sink_] != -1;
    }

    int dfs(int v, int limit) {
        if (v == sink_ || limit == 0) return limit;
        for (int& e = ptr_[v]; e != -1; e = arcs_[e].next) {
            Arc& a = arcs_[e];
            if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                int pushed = dfs(a.to, std::min(limit, a.cap));
                if (pushed > 0) {
                    a.cap -= pushed;
                    arcs_[e ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    const Graph& g_;
    int n_, node_count_, source_ = 0, sink_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> head_, level_, ptr_;
};

inline int st_vertex_connectivity(const Graph& g, int s, int t) {
    return VertexFlow(g, s, t).max_flow();
}

} // namespace detail

// Minimum number of vertices whose removal disconnects the graph or reduces
// it to a single vertex. Complete graphs give n-1; graphs with at most one
// vertex give 0.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    if (!is_connected(g)) return 0;

    // A minimum cut either avoids v0 (then some non-neighbor of v0 sits on
    // the far side) or contains v0 (then two non-adjacent neighbors of v0
    // straddle it). v0 is taken of minimum degree to keep the pair set small.
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    int best = g.degree(v0);
    for (int t = 0; t < n; ++t)
        if (t != v0 && !g.adjacent(v0, t))
            best = std::min(best, detail::st_vertex_connectivity(g, v0, t));
    std::vector<int> nb = g.neighbors(v0);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j]))
                best = std::min(best, detail::st_vertex_connectivity(g, nb[i], nb[j]));
    return best;
}

} // namespace sgc
