#pragma once

// Exact solvers for subgraph complementation. brute_force_solve is the
// canonical-order exhaustive search used as ground truth everywhere else.
// paw_solve is the polynomial-track decision procedure for paw targets:
// preprocessing (paw-free component removal, twin-module shrinking), then a
// five-step search over triangle candidates and neighborhood partitions.
// Every YES answer carries a witness that is re-checked before it is
// returned.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

inline Graph paw_graph() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

inline Graph triangle_graph() { return Graph::complete(3); }

inline Graph edge_plus_isolated_graph() { return Graph::from_edges(3, {{0, 1}}); }

inline constexpr std::uint64_t kDefaultSolveBudget = std::uint64_t{1} << 22;
inline constexpr int kPartitionHostCap = 18;

// A graph is paw-free exactly when every connected component is triangle-free
// or complete multipartite, so no quartic scan is needed.
inline bool is_paw_free(const Graph& g) {
    const int words = g.row_words();
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 4) continue;
        std::vector<std::uint64_t> cmask(static_cast<std::size_t>(words), 0);
        for (int v : comp) detail::set_bit(cmask.data(), v);
        bool has_triangle = false;
        for (std::size_t i = 0; i < comp.size() && !has_triangle; ++i) {
            for (std::size_t j = i + 1; j < comp.size() && !has_triangle; ++j) {
                if (!g.adjacent(comp[i], comp[j])) continue;
                const std::uint64_t* a = g.row(comp[i]);
                const std::uint64_t* b = g.row(comp[j]);
                for (int w = 0; w < words; ++w)
                    if (a[w] & b[w] & cmask[w]) {
                        has_triangle = true;
                        break;
                    }
            }
        }
        if (!has_triangle) continue;
        // Complete multipartite means every edge dominates its component.
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = i + 1; j < comp.size(); ++j) {
                if (!g.adjacent(comp[i], comp[j])) continue;
                const std::uint64_t* a = g.row(comp[i]);
                const std::uint64_t* b = g.row(comp[j]);
                std::vector<std::uint64_t> cover(cmask);
                for (int w = 0; w < words; ++w) cover[w] &= ~(a[w] | b[w]);
                cover[static_cast<std::size_t>(comp[i] >> 6)] &=
                    ~(std::uint64_t{1} << (comp[i] & 63));
                cover[static_cast<std::size_t>(comp[j] >> 6)] &=
                    ~(std::uint64_t{1} << (comp[j] & 63));
                for (int w = 0; w < words; ++w)
                    if (cover[w]) return false;
            }
        }
    }
    return true;
}

// Enumerates vertex subsets by size then lexicographically and returns the
// first S with (g plus S flipped) free of induced h. The budget bounds the
// whole subset space up front; running out is reported as an error, never as
// a NO.
inline std::optional<SolutionSet> brute_force_solve(const Graph& g, const Graph& h,
                                                    std::uint64_t budget = kDefaultSolveBudget) {
    const int n = g.vertex_count();
    if (n >= 63 || (std::uint64_t{1} << n) > budget)
        throw BudgetError("brute force: subset space exceeds the budget");
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexSet s(idx);
            if (!contains_induced(subgraph_complement(g, s), h).has_value())
                return SolutionSet{s, "brute-force"};
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

// A bipartition of a neighborhood: the P side induces no edge and the Q side
// has no independent triple.
struct SplitPartition {
    VertexSet p_side;
    VertexSet q_side;
};

// A bipartition of a neighborhood: the X side induces a connected subgraph or
// an independent set of at most three vertices (possibly empty).
struct ComponentPartition {
    VertexSet x_side;
    VertexSet y_side;
};

enum class PartitionMode { Exhaustive, RestrictedPolynomial };

namespace detail {

inline std::vector<std::uint32_t> host_adjacency(const Graph& g, const std::vector<int>& host) {
    const int k = static_cast<int>(host.size());
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(host[static_cast<std::size_t>(i)], host[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
            }
    return adj;
}

inline bool host_mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t x) {
    if (x == 0) return false;
    std::uint32_t seen = x & (~x + 1);
    while (true) {
        std::uint32_t frontier = 0;
        for (std::uint32_t rest = seen; rest; rest &= rest - 1)
            frontier |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
        std::uint32_t grown = seen | (frontier & x);
        if (grown == seen) break;
        seen = grown;
    }
    return seen == x;
}

inline bool host_mask_independent(const std::vector<std::uint32_t>& adj, std::uint32_t x) {
    for (std::uint32_t rest = x; rest; rest &= rest - 1)
        if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & x) return false;
    return true;
}

inline VertexSet host_mask_to_set(const std::vector<int>& host, std::uint32_t m) {
    std::vector<int> ids;
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
        ids.push_back(host[static_cast<std::size_t>(std::countr_zero(rest))]);
    return VertexSet(std::move(ids));
}

inline void check_partition_host(const Graph& g, const VertexSet& host, int size_cap,
                                 const char* what) {
    check_in_range(g, host, what);
    if (host.size() > size_cap) throw BudgetError(std::string(what) + ": host exceeds the size cap");
}

} // namespace detail

inline std::vector<SplitPartition> enumerate_split_partitions(const Graph& g,
                                                              const VertexSet& host,
                                                              int size_cap = kPartitionHostCap) {
    detail::check_partition_host(g, host, size_cap, "split partitions");
    const auto& ids = host.ids();
    const int k = host.size();
    auto adj = detail::host_adjacency(g, ids);
    std::vector<std::uint32_t> hollow_triples;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (adj[static_cast<std::size_t>(i)] & (std::uint32_t{1} << j)) continue;
            for (int l = j + 1; l < k; ++l)
                if (!(adj[static_cast<std::size_t>(l)] &
                      ((std::uint32_t{1} << i) | (std::uint32_t{1} << j))))
                    hollow_triples.push_back((std::uint32_t{1} << i) | (std::uint32_t{1} << j) |
                                             (std::uint32_t{1} << l));
        }
    const std::uint32_t all = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    std::vector<SplitPartition> out;
    for (std::uint32_t m = 0;; ++m) {
        if (detail::host_mask_independent(adj, m)) {
            std::uint32_t q = all & ~m;
            bool ok = true;
            for (std::uint32_t t : hollow_triples)
                if ((t & q) == t) {
                    ok = false;
                    break;
                }
            if (ok)
                out.push_back({detail::host_mask_to_set(ids, m), detail::host_mask_to_set(ids, q)});
        }
        if (m == all) break;
    }
    return out;
}

inline std::vector<ComponentPartition> enumerate_component_partitions(
    const Graph& g, const VertexSet& host, PartitionMode mode = PartitionMode::Exhaustive,
    int size_cap = kPartitionHostCap) {
    detail::check_partition_host(g, host, size_cap, "component partitions");
    const auto& ids = host.ids();
    const int k = host.size();
    auto adj = detail::host_adjacency(g, ids);
    const std::uint32_t all = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    auto qualifies = [&](std::uint32_t x) {
        if (std::popcount(x) <= 3 && detail::host_mask_independent(adj, x)) return true;
        return detail::host_mask_connected(adj, x);
    };
    std::vector<std::uint32_t> picks;
    if (mode == PartitionMode::Exhaustive) {
        for (std::uint32_t m = 0;; ++m) {
            if (qualifies(m)) picks.push_back(m);
            if (m == all) break;
        }
    } else {
        std::set<std::uint32_t> chosen;
        chosen.insert(0);
        std::uint32_t left = all;
        while (left) {
            std::uint32_t start = left & (~left + 1);
            std::uint32_t comp = start;
            while (true) {
                std::uint32_t frontier = 0;
                for (std::uint32_t rest = comp; rest; rest &= rest - 1)
                    frontier |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
                std::uint32_t grown = comp | (frontier & all);
                if (grown == comp) break;
                comp = grown;
            }
            chosen.insert(comp);
            left &= ~comp;
        }
        for (int i = 0; i < k; ++i) {
            std::uint32_t a = std::uint32_t{1} << i;
            chosen.insert(a);
            for (int j = i + 1; j < k; ++j) {
                std::uint32_t b = a | (std::uint32_t{1} << j);
                if (!detail::host_mask_independent(adj, b)) continue;
                chosen.insert(b);
                for (int l = j + 1; l < k; ++l) {
                    std::uint32_t c = b | (std::uint32_t{1} << l);
                    if (detail::host_mask_independent(adj, c)) chosen.insert(c);
                }
            }
        }
        picks.assign(chosen.begin(), chosen.end());
    }
    std::vector<ComponentPartition> out;
    out.reserve(picks.size());
    for (std::uint32_t m : picks)
        out.push_back({detail::host_mask_to_set(ids, m), detail::host_mask_to_set(ids, all & ~m)});
    return out;
}

// One preprocessing move: either a paw-free component was deleted, or an
// independent/clique module was cut down to three members.
struct ShrinkStep {
    enum class Kind { Component, IndependentModule, CliqueModule };
    Kind kind;
    std::vector<int> kept;
    std::vector<int> removed;
};

struct ShrunkInstance {
    Graph graph;
    std::vector<int> original_ids;
    std::vector<ShrinkStep> steps;
};

namespace detail {

// Returns the vertices of one twin class of size at least four (the class
// with the smallest member wins), or an empty list if there is none. Open
// rows give independent modules, closed rows give clique modules.
inline std::vector<int> oversized_twin_class(const Graph& g, bool closed) {
    const int n = g.vertex_count();
    const int words = g.row_words();
    std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> key(g.row(v), g.row(v) + words);
        if (closed) detail::set_bit(key.data(), v);
        classes[key].push_back(v);
    }
    std::vector<int> best;
    for (const auto& [key, members] : classes) {
        if (members.size() < 4) continue;
        if (best.empty() || members.front() < best.front()) best = members;
    }
    return best;
}

} // namespace detail

// Applies the verdict-preserving reductions until none fires: paw-free
// connected components are deleted, and independent or clique modules with
// more than three vertices keep only their three smallest members. The trace
// remembers original vertex ids so solutions of the shrunk graph can be
// lifted back.
inline ShrunkInstance shrink_paw_instance_traced(const Graph& g) {
    Graph cur = g;
    std::vector<int> orig(static_cast<std::size_t>(g.vertex_count()));
    std::iota(orig.begin(), orig.end(), 0);
    std::vector<ShrinkStep> steps;

    auto to_original = [&](const std::vector<int>& cur_ids) {
        std::vector<int> out;
        out.reserve(cur_ids.size());
        for (int v : cur_ids) out.push_back(orig[static_cast<std::size_t>(v)]);
        return out;
    };
    auto remove_cur_ids = [&](const std::vector<int>& doomed) {
        std::vector<int> keep;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (std::find(doomed.begin(), doomed.end(), v) == doomed.end()) keep.push_back(v);
        cur = induced_subgraph(cur, VertexSet(keep));
        std::vector<int> next;
        next.reserve(keep.size());
        for (int v : keep) next.push_back(orig[static_cast<std::size_t>(v)]);
        orig = std::move(next);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& comp : connected_components(cur)) {
            if (!is_paw_free(induced_subgraph(cur, VertexSet(comp)))) continue;
            steps.push_back({ShrinkStep::Kind::Component, {}, to_original(comp)});
            remove_cur_ids(comp);
            changed = true;
            break;
        }
        if (changed) continue;
        auto cls = detail::oversized_twin_class(cur, false);
        ShrinkStep::Kind kind = ShrinkStep::Kind::IndependentModule;
        if (cls.empty()) {
            cls = detail::oversized_twin_class(cur, true);
            kind = ShrinkStep::Kind::CliqueModule;
        }
        if (!cls.empty()) {
            std::vector<int> keep3(cls.begin(), cls.begin() + 3);
            std::vector<int> drop(cls.begin() + 3, cls.end());
            steps.push_back({kind, to_original(keep3), to_original(drop)});
            remove_cur_ids(drop);
            changed = true;
        }
    }
    return {std::move(cur), std::move(orig), std::move(steps)};
}

inline Graph shrink_paw_instance(const Graph& g) {
    return shrink_paw_instance_traced(g).graph;
}

// Turns a solution of the shrunk graph into one of the original graph by
// replaying the shrink steps backwards. Removed module members rejoin the
// flip set exactly when keeping them out would duplicate an unsafe survivor:
// members left out of the flip keep their original twin kind, members inside
// the flip have it inverted, and adding a false twin of an untouched vertex
// is always safe while adding a true twin is safe only next to two other
// mutual true twins. So for an independent module the removed members join
// when all three kept members are flipped, and for a clique module they join
// as soon as two kept members are flipped.
inline VertexSet lift_shrunk_solution(const ShrunkInstance& inst, const VertexSet& s) {
    check_in_range(inst.graph, s, "shrunk solution");
    std::set<int> acc;
    for (int v : s) acc.insert(inst.original_ids[static_cast<std::size_t>(v)]);
    for (auto it = inst.steps.rbegin(); it != inst.steps.rend(); ++it) {
        if (it->kind == ShrinkStep::Kind::Component) continue;
        int flipped = 0;
        for (int v : it->kept)
            if (acc.count(v) != 0) ++flipped;
        int join_at = it->kind == ShrinkStep::Kind::CliqueModule ? 2 : 3;
        if (flipped >= join_at) acc.insert(it->removed.begin(), it->removed.end());
    }
    return VertexSet(std::vector<int>(acc.begin(), acc.end()));
}

using ComponentOracle = std::function<std::optional<SolutionSet>(const Graph&, const Graph&)>;

// Stand-in for the dedicated single-component solvers: plain exhaustive
// search against the requested pattern.
inline std::optional<SolutionSet> single_component_brute_oracle(
    const Graph& g, const Graph& pattern, std::uint64_t budget = kDefaultSolveBudget) {
    return brute_force_solve(g, pattern, budget);
}

// Decides whether some flip makes g paw-free.
//
// Step 1 accepts paw-free inputs as they are. Step 2 asks the pluggable
// oracle whether one flip reaches a triangle-free graph or a complete
// multipartite graph. Step 3 tries, for every triangle, the union of the
// pairwise common neighborhoods. Step 4 walks every ordered adjacent pair
// (u, v) and tries the Q sides of split partitions, the Y sides of component
// partitions, and the Y' plus Z combinations built from u's neighborhood.
// Step 5 answers NO. Each candidate is checked for real, so YES answers are
// always sound; the witness is lifted back to the input graph and checked
// once more before it is returned.
inline std::optional<SolutionSet> paw_solve(const Graph& g, const ComponentOracle& oracle = {},
                                            PartitionMode mode = PartitionMode::Exhaustive) {
    ShrunkInstance inst = shrink_paw_instance_traced(g);
    const Graph& G = inst.graph;
    const int n = G.vertex_count();

    auto finish = [&](const VertexSet& s) -> std::optional<SolutionSet> {
        VertexSet lifted = lift_shrunk_solution(inst, s);
        if (!is_paw_free(subgraph_complement(g, lifted)))
            throw std::logic_error("paw solver: lifted witness failed the final check");
        return SolutionSet{lifted, "paw algorithm"};
    };

    if (is_paw_free(G)) return finish(VertexSet{});

    const ComponentOracle fallback = [](const Graph& gg, const Graph& pattern) {
        return single_component_brute_oracle(gg, pattern);
    };
    const ComponentOracle& ask = oracle ? oracle : fallback;
    for (const Graph& pattern : {triangle_graph(), edge_plus_isolated_graph()}) {
        if (auto s = ask(G, pattern)) {
            if (is_paw_free(subgraph_complement(G, s->members))) return finish(s->members);
        }
    }

    if (n > 64) throw BudgetError("paw solver: shrunk instance too large for exhaustive search");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (G.adjacent(u, v)) {
                adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
    auto bit = [](int v) { return std::uint64_t{1} << v; };
    auto above = [](int v) { return v >= 63 ? std::uint64_t{0} : ~((std::uint64_t{2} << v) - 1); };
    auto mask_to_set = [&](std::uint64_t m) {
        std::vector<int> ids;
        for (std::uint64_t rest = m; rest; rest &= rest - 1)
            ids.push_back(std::countr_zero(rest));
        return VertexSet(std::move(ids));
    };
    auto set_to_mask = [&](const VertexSet& s) {
        std::uint64_t m = 0;
        for (int v : s) m |= bit(v);
        return m;
    };

    std::unordered_set<std::uint64_t> seen;
    std::optional<VertexSet> found;
    auto try_mask = [&](std::uint64_t m) {
        if (!seen.insert(m).second) return false;
        VertexSet s = mask_to_set(m);
        if (!is_paw_free(subgraph_complement(G, s))) return false;
        found = std::move(s);
        return true;
    };

    for (int u = 0; u < n; ++u)
        for (std::uint64_t vrest = adj[static_cast<std::size_t>(u)] & above(u); vrest;
             vrest &= vrest - 1) {
            int v = std::countr_zero(vrest);
            std::uint64_t wmask =
                adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)] & above(v);
            for (std::uint64_t wrest = wmask; wrest; wrest &= wrest - 1) {
                int w = std::countr_zero(wrest);
                std::uint64_t cand =
                    (adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]) |
                    (adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(w)]) |
                    (adj[static_cast<std::size_t>(v)] & adj[static_cast<std::size_t>(w)]);
                if (try_mask(cand)) return finish(*found);
            }
        }

    std::vector<std::optional<std::vector<std::uint64_t>>> q_sides(static_cast<std::size_t>(n));
    std::vector<std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>>> xy_pairs(
        static_cast<std::size_t>(n));
    auto q_sides_of = [&](int v) -> const std::vector<std::uint64_t>& {
        auto& slot = q_sides[static_cast<std::size_t>(v)];
        if (!slot) {
            std::vector<std::uint64_t> qs;
            for (const auto& sp : enumerate_split_partitions(G, VertexSet(G.neighbors(v))))
                qs.push_back(set_to_mask(sp.q_side));
            std::sort(qs.begin(), qs.end());
            qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
            slot = std::move(qs);
        }
        return *slot;
    };
    auto xy_pairs_of = [&](int v) -> const std::vector<std::pair<std::uint64_t, std::uint64_t>>& {
        auto& slot = xy_pairs[static_cast<std::size_t>(v)];
        if (!slot) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> xy;
            for (const auto& cp : enumerate_component_partitions(G, VertexSet(G.neighbors(v)), mode))
                xy.emplace_back(set_to_mask(cp.x_side), set_to_mask(cp.y_side));
            slot = std::move(xy);
        }
        return *slot;
    };

    for (int u = 0; u < n; ++u) {
        for (std::uint64_t vrest = adj[static_cast<std::size_t>(u)]; vrest; vrest &= vrest - 1) {
            int v = std::countr_zero(vrest);
            for (std::uint64_t qu : q_sides_of(u))
                for (std::uint64_t qv : q_sides_of(v))
                    if (try_mask(qu | qv)) return finish(*found);
            std::vector<std::uint64_t> yu, yv;
            for (const auto& [x, y] : xy_pairs_of(u)) yu.push_back(y);
            for (const auto& [x, y] : xy_pairs_of(v)) yv.push_back(y);
            std::sort(yu.begin(), yu.end());
            yu.erase(std::unique(yu.begin(), yu.end()), yu.end());
            std::sort(yv.begin(), yv.end());
            yv.erase(std::unique(yv.begin(), yv.end()), yv.end());
            for (std::uint64_t a : yu)
                for (std::uint64_t b : yv)
                    if (try_mask(a | b)) return finish(*found);

            std::uint64_t isolated = 0;
            for (std::uint64_t rest = adj[static_cast<std::size_t>(u)]; rest; rest &= rest - 1) {
                int w = std::countr_zero(rest);
                if ((adj[static_cast<std::size_t>(w)] & adj[static_cast<std::size_t>(u)]) == 0)
                    isolated |= bit(w);
            }
            std::uint64_t z_base = bit(v) | (adj[static_cast<std::size_t>(u)] & ~isolated);
            for (const auto& [x_v, y_v] : xy_pairs_of(v)) {
                std::uint64_t z = z_base;
                for (std::uint64_t rest = isolated; rest; rest &= rest - 1) {
                    int i = std::countr_zero(rest);
                    if (adj[static_cast<std::size_t>(i)] & x_v) z |= bit(i);
                }
                if (try_mask(z | y_v)) return finish(*found);
                for (std::uint64_t arest = y_v; arest; arest &= arest - 1) {
                    std::uint64_t a = arest & (~arest + 1);
                    if (try_mask(z | (y_v & ~a))) return finish(*found);
                    for (std::uint64_t brest = arest & (arest - 1); brest; brest &= brest - 1) {
                        std::uint64_t b = brest & (~brest + 1);
                        if (try_mask(z | (y_v & ~a & ~b))) return finish(*found);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

enum class SolveVerdict { Yes, No, Budget };

struct SolveOutcome {
    SolveVerdict verdict;
    std::optional<SolutionSet> solution;
};

inline void write_solve_outcome(std::ostream& out, const SolveOutcome& outcome) {
    switch (outcome.verdict) {
        case SolveVerdict::No:
            out << "verdict: no\n";
            return;
        case SolveVerdict::Budget:
            out << "verdict: budget\n";
            return;
        case SolveVerdict::Yes:
            break;
    }
    if (!outcome.solution)
        throw std::invalid_argument("solver outcome: a yes verdict requires a witness");
    out << "verdict: yes\nS:";
    for (int v : outcome.solution->members) out << ' ' << v;
    out << '\n';
}

inline SolveOutcome read_solve_outcome(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("verdict: ", 0) != 0)
        throw std::invalid_argument("solver outcome: missing verdict line");
    std::string verdict = line.substr(9);
    if (verdict == "no") return {SolveVerdict::No, std::nullopt};
    if (verdict == "budget") return {SolveVerdict::Budget, std::nullopt};
    if (verdict != "yes")
        throw std::invalid_argument("solver outcome: unknown verdict '" + verdict + "'");
    if (!std::getline(in, line) || line.rfind("S:", 0) != 0)
        throw std::invalid_argument("solver outcome: missing witness line");
    std::istringstream fields(line.substr(2));
    std::vector<int> ids;
    std::string token;
    while (fields >> token) {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument("solver outcome: bad vertex id '" + token + "'");
        ids.push_back(value);
    }
    return {SolveVerdict::Yes, SolutionSet{VertexSet(std::move(ids)), "deserialized"}};
}

} // namespace sgc
