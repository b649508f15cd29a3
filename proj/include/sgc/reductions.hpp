#pragma once

// Gadget compilers for the hardness reductions. Each compiler emits the
// built graph together with one role string per vertex, so a solution can
// be translated across the reduction and the gadget structure can be
// audited afterwards. Satisfiability based compilers keep the source
// formula on the instance; graph based compilers keep the original
// vertices at ids 0..n-1 with "src" roles.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "hardness.hpp"
#include "modular.hpp"
#include "sat.hpp"
#include "trees.hpp"

namespace sgc {

// ---------------------------------------------------------------------------
// vertex roles

enum class RoleKind { Literal, VarSet, ClauseSet, Attachment };

// One role per gadget vertex. Literal roles carry the 1-based variable and
// a polarity. Set roles carry the owning gadget index (1-based), the set
// number inside that gadget, and the position inside the set. Attachment
// roles carry the source vertex they were introduced for, a block name,
// and the position inside the block.
struct Role {
    RoleKind kind = RoleKind::Attachment;
    int var = 0;
    bool positive = true;
    int owner = 0;
    int set = 0;
    int index = 0;
    std::string name;

    static Role literal(int var, bool positive) {
        Role r;
        r.kind = RoleKind::Literal;
        r.var = var;
        r.positive = positive;
        return r;
    }

    static Role var_set(int owner, int set, int index) {
        Role r;
        r.kind = RoleKind::VarSet;
        r.owner = owner;
        r.set = set;
        r.index = index;
        return r;
    }

    static Role clause_set(int owner, int set, int index) {
        Role r;
        r.kind = RoleKind::ClauseSet;
        r.owner = owner;
        r.set = set;
        r.index = index;
        return r;
    }

    static Role attachment(int owner, std::string name, int index) {
        Role r;
        r.kind = RoleKind::Attachment;
        r.owner = owner;
        r.name = std::move(name);
        r.index = index;
        return r;
    }

    bool operator==(const Role&) const = default;
};

inline std::string role_to_string(const Role& r) {
    std::ostringstream out;
    switch (r.kind) {
        case RoleKind::Literal:
            out << "lit:" << (r.positive ? '+' : '-') << r.var;
            break;
        case RoleKind::VarSet:
            out << "var:" << r.owner << "/set:" << r.set << "/idx:" << r.index;
            break;
        case RoleKind::ClauseSet:
            out << "cls:" << r.owner << "/set:" << r.set << "/idx:" << r.index;
            break;
        case RoleKind::Attachment:
            out << "att:" << r.owner << '/' << r.name << '/' << r.index;
            break;
    }
    return out.str();
}

namespace detail {

inline int parse_role_int(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(std::string("role: bad ") + what + " in '" + text + "'");
    return std::stoi(text);
}

inline std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::string expect_field(const std::string& part, const std::string& key) {
    if (part.size() <= key.size() || part.compare(0, key.size(), key) != 0 ||
        part[key.size()] != ':')
        throw std::invalid_argument("role: expected '" + key + ":' in '" + part + "'");
    return part.substr(key.size() + 1);
}

} // namespace detail

inline Role parse_role(const std::string& text) {
    if (text.rfind("lit:", 0) == 0) {
        std::string body = text.substr(4);
        if (body.size() < 2 || (body[0] != '+' && body[0] != '-'))
            throw std::invalid_argument("role: literal needs a sign in '" + text + "'");
        int var = detail::parse_role_int(body.substr(1), "variable");
        if (var < 1) throw std::invalid_argument("role: variable must be positive");
        return Role::literal(var, body[0] == '+');
    }
    if (text.rfind("var:", 0) == 0 || text.rfind("cls:", 0) == 0) {
        bool clause = text.rfind("cls:", 0) == 0;
        auto parts = detail::split_on(text, '/');
        if (parts.size() != 3)
            throw std::invalid_argument("role: expected three fields in '" + text + "'");
        int owner = detail::parse_role_int(parts[0].substr(4), "gadget index");
        int set = detail::parse_role_int(detail::expect_field(parts[1], "set"), "set");
        int index = detail::parse_role_int(detail::expect_field(parts[2], "idx"), "index");
        if (owner < 1) throw std::invalid_argument("role: gadget index must be positive");
        return clause ? Role::clause_set(owner, set, index) : Role::var_set(owner, set, index);
    }
    if (text.rfind("att:", 0) == 0) {
        auto parts = detail::split_on(text, '/');
        if (parts.size() != 3)
            throw std::invalid_argument("role: expected three fields in '" + text + "'");
        int owner = detail::parse_role_int(parts[0].substr(4), "source vertex");
        if (parts[1].empty() || parts[1].find(' ') != std::string::npos)
            throw std::invalid_argument("role: bad block name in '" + text + "'");
        int index = detail::parse_role_int(parts[2], "index");
        return Role::attachment(owner, parts[1], index);
    }
    throw std::invalid_argument("role: unknown prefix in '" + text + "'");
}

// ---------------------------------------------------------------------------
// instances

struct GadgetInstance {
    Graph graph;
    std::vector<Role> roles;
    std::string construction;
    std::string source;
    std::optional<CnfFormula> formula;
};

namespace detail {

// Accumulates vertices with roles and an edge set, then freezes them into
// a GadgetInstance. Edges live in an ordered set so late removals (some
// constructions first join two blocks and then delete one pair) stay cheap.
class InstanceBuilder {
  public:
    struct SetRef {
        int start = 0;
        int size = 0;
    };

    int size() const { return static_cast<int>(roles_.size()); }

    int add_vertex(Role r) {
        roles_.push_back(std::move(r));
        return size() - 1;
    }

    SetRef add_copy(const Graph& inside, auto role_of) {
        SetRef ref{size(), inside.vertex_count()};
        for (int k = 0; k < ref.size; ++k) roles_.push_back(role_of(k));
        for (int u = 0; u < ref.size; ++u)
            for (int v = u + 1; v < ref.size; ++v)
                if (inside.adjacent(u, v)) add_edge(ref.start + u, ref.start + v);
        return ref;
    }

    void add_edge(int u, int v) { edges_.insert(std::minmax(u, v)); }

    void remove_edge(int u, int v) { edges_.erase(std::minmax(u, v)); }

    void connect(SetRef a, SetRef b) {
        for (int u = a.start; u < a.start + a.size; ++u)
            for (int v = b.start; v < b.start + b.size; ++v) add_edge(u, v);
    }

    void connect(int u, SetRef b) {
        for (int v = b.start; v < b.start + b.size; ++v) add_edge(u, v);
    }

    GadgetInstance take(std::string construction, std::string source) {
        GadgetInstance inst;
        inst.graph =
            Graph::from_edges(size(), std::vector<std::pair<int, int>>(edges_.begin(), edges_.end()));
        inst.roles = std::move(roles_);
        inst.construction = std::move(construction);
        inst.source = std::move(source);
        return inst;
    }

  private:
    std::vector<Role> roles_;
    std::set<std::pair<int, int>> edges_;
};

// r disjoint copies of K_r on r*r vertices, clique c on [c*r, (c+1)*r).
inline Graph r_copies_of_kr(int r) {
    GraphBuilder b(r * r);
    for (int c = 0; c < r; ++c)
        for (int u = c * r; u < (c + 1) * r; ++u)
            for (int v = u + 1; v < (c + 1) * r; ++v) b.add_edge(u, v);
    return b.take();
}

// Replace every vertex of the base by r disjoint copies of K_r; two blocks
// are fully joined exactly when their base vertices are adjacent.
inline Graph blow_into_rkr(const Graph& base, int r) {
    const int n = base.vertex_count();
    const int block = r * r;
    GraphBuilder b(n * block);
    for (int u = 0; u < n; ++u)
        for (int c = 0; c < r; ++c)
            for (int i = u * block + c * r; i < u * block + (c + 1) * r; ++i)
                for (int j = i + 1; j < u * block + (c + 1) * r; ++j) b.add_edge(i, j);
    for (auto [u, v] : base.edges())
        for (int i = u * block; i < (u + 1) * block; ++i)
            for (int j = v * block; j < (v + 1) * block; ++j) b.add_edge(i, j);
    return b.take();
}

// Gathers the vertices of every attachment block with the given name,
// keyed by owning source vertex.
inline std::map<int, std::vector<int>> attachment_blocks(const GadgetInstance& inst,
                                                         const std::string& name) {
    std::map<int, std::vector<int>> blocks;
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == RoleKind::Attachment && r.name == name) blocks[r.owner].push_back(v);
    }
    return blocks;
}

} // namespace detail

// ---------------------------------------------------------------------------
// duplication

// Replace vertex i of the quotient by an independent set of profile[i]
// clones; blocks are fully joined along quotient edges.
inline Graph blowup_independent(const Graph& hq, const std::vector<int>& profile) {
    const int n = hq.vertex_count();
    if (static_cast<int>(profile.size()) != n)
        throw std::invalid_argument("blowup_independent: profile length must match the order");
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (profile[static_cast<std::size_t>(i)] < 1)
            throw std::invalid_argument("blowup_independent: block sizes must be positive");
        offset[static_cast<std::size_t>(i) + 1] =
            offset[static_cast<std::size_t>(i)] + profile[static_cast<std::size_t>(i)];
    }
    GraphBuilder b(offset[static_cast<std::size_t>(n)]);
    for (auto [u, v] : hq.edges())
        for (int i = offset[static_cast<std::size_t>(u)]; i < offset[static_cast<std::size_t>(u) + 1]; ++i)
            for (int j = offset[static_cast<std::size_t>(v)]; j < offset[static_cast<std::size_t>(v) + 1]; ++j)
                b.add_edge(i, j);
    return b.take();
}

// Replace every vertex u of the source graph by a block W_u inducing r
// disjoint K_r's; blocks are fully joined along source edges.
inline GadgetInstance instance_blowup_rkr(const Graph& gp, int r) {
    if (r < 1) throw std::invalid_argument("instance_blowup_rkr: r must be positive");
    const int n = gp.vertex_count();
    const int block = r * r;
    detail::InstanceBuilder b;
    const Graph inside = detail::r_copies_of_kr(r);
    std::vector<detail::InstanceBuilder::SetRef> w(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        w[static_cast<std::size_t>(u)] =
            b.add_copy(inside, [&](int k) { return Role::attachment(u, "W", k); });
    for (auto [u, v] : gp.edges())
        b.connect(w[static_cast<std::size_t>(u)], w[static_cast<std::size_t>(v)]);
    std::ostringstream src;
    src << "rK_r blowup of a " << n << "-vertex graph, r=" << r << ", block=" << block;
    return b.take("blowup", src.str());
}

inline SolutionSet map_solution_duplication_forward(const VertexSet& s_src,
                                                    const GadgetInstance& inst) {
    if (inst.construction != "blowup")
        throw std::invalid_argument("duplication map: instance was not built by the blowup");
    auto blocks = detail::attachment_blocks(inst, "W");
    std::vector<int> out;
    for (int u : s_src) {
        auto it = blocks.find(u);
        if (it == blocks.end())
            throw std::invalid_argument("duplication map: source vertex out of range");
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return {VertexSet(std::move(out)), "lifted from a source solution"};
}

inline VertexSet map_solution_duplication_backward(const VertexSet& s,
                                                   const GadgetInstance& inst) {
    if (inst.construction != "blowup")
        throw std::invalid_argument("duplication map: instance was not built by the blowup");
    auto blocks = detail::attachment_blocks(inst, "W");
    std::vector<int> out;
    for (const auto& [u, verts] : blocks) {
        const int block = static_cast<int>(verts.size());
        const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(block))));
        if (r * r != block)
            throw std::invalid_argument("duplication map: block size is not a square");
        for (int c = 0; c < r; ++c) {
            bool whole_clique = true;
            for (int k = c * r; k < (c + 1) * r; ++k)
                if (!s.contains(verts[static_cast<std::size_t>(k)])) {
                    whole_clique = false;
                    break;
                }
            if (whole_clique) {
                out.push_back(u);
                break;
            }
        }
    }
    return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// 5-connected hosts

// Placement data for the 5-connected compiler: a permutation of the host
// vertices (the first two entries are the positions played by the literal
// singletons) and four host vertices inducing a K4 or a 4K1 where the
// clause literals sit.
struct FiveConnLayout {
    std::vector<int> order;
    std::vector<int> vprime;
};

inline FiveConnLayout default_5conn_layout(const Graph& h) {
    auto four = contains_induced(h, Graph::complete(4));
    if (!four) four = contains_induced(h, Graph::empty(4));
    if (!four)
        throw std::invalid_argument("5conn layout: host has neither a K4 nor a 4K1");
    const bool clique_case = induces_clique(h, *four);
    const int t = h.vertex_count();

    // the literal singletons need a non-adjacent pair in the K4 case and an
    // adjacent pair otherwise; prefer one disjoint from the special four
    int v1 = -1, v2 = -1;
    for (int pass = 0; pass < 2 && v1 == -1; ++pass) {
        for (int u = 0; u < t && v1 == -1; ++u)
            for (int v = u + 1; v < t; ++v) {
                if (h.adjacent(u, v) == clique_case) continue;
                if (pass == 0 && (four->contains(u) || four->contains(v))) continue;
                v1 = u;
                v2 = v;
                break;
            }
    }
    if (v1 == -1)
        throw std::invalid_argument("5conn layout: host has no usable literal pair");

    FiveConnLayout layout;
    layout.order = {v1, v2};
    for (int v = 0; v < t; ++v)
        if (v != v1 && v != v2) layout.order.push_back(v);
    layout.vprime = four->ids();
    return layout;
}

inline GadgetInstance build_5conn_instance(const CnfFormula& phi, const Graph& h,
                                           const FiveConnLayout& layout) {
    if (phi.mode != SatMode::AtLeast2)
        throw std::invalid_argument("5conn: formula must use the threshold-2 mode");
    for (const auto& clause : phi.clauses)
        if (clause.size() != 4)
            throw std::invalid_argument("5conn: clauses must have width 4");
    if (vertex_connectivity(h) < 5)
        throw std::invalid_argument("5conn: host must be 5-connected");
    if (!is_prime(h)) throw std::invalid_argument("5conn: host must be prime");
    if (is_self_complementary(h))
        throw std::invalid_argument("5conn: host must not be self-complementary");

    const int t = h.vertex_count();
    if (static_cast<int>(layout.order.size()) != t)
        throw std::invalid_argument("5conn: layout order must list every host vertex");
    std::vector<bool> seen(static_cast<std::size_t>(t), false);
    for (int v : layout.order) {
        if (v < 0 || v >= t || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("5conn: layout order must be a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (layout.vprime.size() != 4)
        throw std::invalid_argument("5conn: special set must have four vertices");
    VertexSet vprime(layout.vprime);
    if (vprime.size() != 4)
        throw std::invalid_argument("5conn: special set must have four distinct vertices");
    check_in_range(h, vprime, "5conn special set");
    const bool clique_case = induces_clique(h, vprime);
    if (!clique_case && !induces_independent_set(h, vprime))
        throw std::invalid_argument("5conn: special set must induce a K4 or a 4K1");
    if (h.adjacent(layout.order[0], layout.order[1]) == clique_case)
        throw std::invalid_argument("5conn: literal positions have the wrong adjacency");

    const Graph ch = complement(h);
    const int n = phi.num_vars;
    const int m = static_cast<int>(phi.clauses.size());
    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;

    // variable gadgets: one set per host position, literal singletons at
    // the first two order entries, complement copies elsewhere
    std::vector<int> pos_lit(static_cast<std::size_t>(2 * n), 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<SetRef> sets(static_cast<std::size_t>(t) + 1);
        int x = b.add_vertex(Role::literal(i, true));
        int xbar = b.add_vertex(Role::literal(i, false));
        pos_lit[static_cast<std::size_t>(2 * (i - 1))] = x;
        pos_lit[static_cast<std::size_t>(2 * (i - 1) + 1)] = xbar;
        sets[1] = {x, 1};
        sets[2] = {xbar, 1};
        for (int j = 3; j <= t; ++j)
            sets[static_cast<std::size_t>(j)] =
                b.add_copy(ch, [&](int k) { return Role::var_set(i, j, k); });
        for (int a = 1; a <= t; ++a)
            for (int c = a + 1; c <= t; ++c) {
                if (a == 1 && c == 2) continue;
                if (h.adjacent(layout.order[static_cast<std::size_t>(a - 1)],
                               layout.order[static_cast<std::size_t>(c - 1)]))
                    b.connect(sets[static_cast<std::size_t>(a)], sets[static_cast<std::size_t>(c)]);
            }
    }
    // literal vertices form a clique exactly when the special set does
    if (clique_case)
        for (std::size_t i = 0; i < pos_lit.size(); ++i)
            for (std::size_t j = i + 1; j < pos_lit.size(); ++j)
                b.add_edge(pos_lit[i], pos_lit[j]);

    auto literal_vertex = [&](int lit) {
        int v = std::abs(lit);
        return pos_lit[static_cast<std::size_t>(2 * (v - 1) + (lit > 0 ? 0 : 1))];
    };

    // clause gadgets fill the non-special positions; the clause literals
    // play the special four
    std::vector<int> free_pos;
    for (int v : layout.order)
        if (!vprime.contains(v)) free_pos.push_back(v);
    for (int i = 1; i <= m; ++i) {
        const auto& clause = phi.clauses[static_cast<std::size_t>(i - 1)];
        std::vector<SetRef> csets(static_cast<std::size_t>(t - 4) + 1);
        for (int j = 1; j <= t - 4; ++j)
            csets[static_cast<std::size_t>(j)] =
                b.add_copy(ch, [&](int k) { return Role::clause_set(i, j, k); });
        for (int a = 1; a <= t - 4; ++a) {
            for (int c = a + 1; c <= t - 4; ++c)
                if (h.adjacent(free_pos[static_cast<std::size_t>(a - 1)],
                               free_pos[static_cast<std::size_t>(c - 1)]))
                    b.connect(csets[static_cast<std::size_t>(a)], csets[static_cast<std::size_t>(c)]);
            for (int q = 0; q < 4; ++q)
                if (h.adjacent(free_pos[static_cast<std::size_t>(a - 1)], layout.vprime[static_cast<std::size_t>(q)]))
                    b.connect(literal_vertex(clause[static_cast<std::size_t>(q)]),
                              csets[static_cast<std::size_t>(a)]);
        }
    }

    std::ostringstream src;
    src << "width-4 threshold-2 formula, n=" << n << " m=" << m << ", host on " << t
        << " vertices";
    GadgetInstance inst = b.take("5conn", src.str());
    inst.formula = phi;
    return inst;
}

// ---------------------------------------------------------------------------
// leaf attachments

// Attach to every source vertex u a fully joined copy of the complement of
// the given prime tree; different copies stay non-adjacent.
inline GadgetInstance attach_leaf_complements(const Graph& gp, const Graph& t) {
    if (!is_tree(t) || !is_prime(t))
        throw std::invalid_argument("attach_leaf_complements: attachment must be a prime tree");
    const Graph ct = complement(t);
    const int n = gp.vertex_count();
    detail::InstanceBuilder b;
    for (int u = 0; u < n; ++u) b.add_vertex(Role::attachment(u, "src", 0));
    for (auto [u, v] : gp.edges()) b.add_edge(u, v);
    for (int u = 0; u < n; ++u) {
        auto w = b.add_copy(ct, [&](int k) { return Role::attachment(u, "W", k); });
        b.connect(u, w);
    }
    std::ostringstream src;
    src << "leaf attachments over a " << n << "-vertex graph, tree on " << t.vertex_count()
        << " vertices";
    return b.take("leafattach", src.str());
}

// ---------------------------------------------------------------------------
// trees with many leaves and internal vertices

namespace detail {

// Deterministic module layout for a hard tree: internal vertices first
// with an adjacent pair in front, then leaf twin classes by smallest
// member. Mirrors the layout the satisfiability compiler expects.
struct TreeModules {
    std::vector<int> internal_order;
    std::vector<std::vector<int>> leaf_classes;
    Graph quotient;
    int r = 1;
};

inline TreeModules tree_modules(const Graph& t) {
    TreeModules tm;
    std::vector<int> internal = internal_vertices(t);
    int a0 = -1, b0 = -1;
    for (std::size_t i = 0; i < internal.size() && a0 == -1; ++i)
        for (std::size_t j = i + 1; j < internal.size(); ++j)
            if (t.adjacent(internal[i], internal[j])) {
                a0 = internal[i];
                b0 = internal[j];
                break;
            }
    if (a0 == -1) throw std::invalid_argument("tree modules: no adjacent internal pair");
    tm.internal_order = {a0, b0};
    for (int v : internal)
        if (v != a0 && v != b0) tm.internal_order.push_back(v);

    std::map<int, std::vector<int>> by_parent;
    for (int leaf : tree_leaves(t)) by_parent[t.neighbors(leaf).front()].push_back(leaf);
    for (auto& entry : by_parent) {
        tm.leaf_classes.push_back(entry.second);
        tm.r = std::max(tm.r, static_cast<int>(entry.second.size()));
    }
    std::sort(tm.leaf_classes.begin(), tm.leaf_classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });

    std::vector<int> rep = tm.internal_order;
    for (const auto& cls : tm.leaf_classes) rep.push_back(cls.front());
    GraphBuilder qb(static_cast<int>(rep.size()));
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (std::size_t j = i + 1; j < rep.size(); ++j)
            if (t.adjacent(rep[i], rep[j])) qb.add_edge(static_cast<int>(i), static_cast<int>(j));
    tm.quotient = qb.take();
    return tm;
}

} // namespace detail

inline GadgetInstance build_tree_ksat_instance(const CnfFormula& phi, const Graph& t) {
    if (!detail::i4l4_applicable(t))
        throw std::invalid_argument("tree ksat: tree is outside the supported family");
    std::vector<int> leaves = tree_leaves(t);
    const int k = static_cast<int>(leaves.size());
    const int p = static_cast<int>(internal_vertices(t).size());
    if (phi.mode != SatMode::AtLeast2)
        throw std::invalid_argument("tree ksat: formula must use the threshold-2 mode");
    for (const auto& clause : phi.clauses)
        if (static_cast<int>(clause.size()) != k)
            throw std::invalid_argument("tree ksat: clause width must match the leaf count");

    detail::TreeModules tm = detail::tree_modules(t);
    const int tq = tm.quotient.vertex_count();
    const Graph rgraph = detail::blow_into_rkr(complement(tm.quotient), tm.r);
    const Graph ct = complement(t);
    const int n = phi.num_vars;
    const int m = static_cast<int>(phi.clauses.size());

    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;

    std::vector<int> pos_lit(static_cast<std::size_t>(2 * n), 0);
    std::vector<std::pair<int, int>> var_range(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const int start = b.size();
        std::vector<SetRef> sets(static_cast<std::size_t>(tq) + 1);
        int x = b.add_vertex(Role::literal(i, true));
        int xbar = b.add_vertex(Role::literal(i, false));
        pos_lit[static_cast<std::size_t>(2 * (i - 1))] = x;
        pos_lit[static_cast<std::size_t>(2 * (i - 1) + 1)] = xbar;
        sets[1] = {x, 1};
        sets[2] = {xbar, 1};
        for (int j = 3; j <= tq; ++j)
            sets[static_cast<std::size_t>(j)] =
                b.add_copy(rgraph, [&](int kk) { return Role::var_set(i, j, kk); });
        // sets follow the module adjacency of the tree; the two literal
        // singletons sit on an adjacent internal pair and their edge is
        // dropped
        for (int a = 1; a <= tq; ++a)
            for (int c = a + 1; c <= tq; ++c) {
                if (a == 1 && c == 2) continue;
                if (tm.quotient.adjacent(a - 1, c - 1))
                    b.connect(sets[static_cast<std::size_t>(a)], sets[static_cast<std::size_t>(c)]);
            }
        var_range[static_cast<std::size_t>(i)] = {start, b.size()};
    }

    auto literal_vertex = [&](int lit) {
        int v = std::abs(lit);
        return pos_lit[static_cast<std::size_t>(2 * (v - 1) + (lit > 0 ? 0 : 1))];
    };

    // clause gadgets mirror the internal tree with complement copies; the
    // clause literals play the k leaves in ascending leaf order
    std::vector<std::pair<int, int>> clause_range(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        const auto& clause = phi.clauses[static_cast<std::size_t>(i - 1)];
        const int start = b.size();
        std::vector<SetRef> csets(static_cast<std::size_t>(p) + 1);
        for (int j = 1; j <= p; ++j)
            csets[static_cast<std::size_t>(j)] =
                b.add_copy(ct, [&](int kk) { return Role::clause_set(i, j, kk); });
        for (int a = 1; a <= p; ++a) {
            for (int c = a + 1; c <= p; ++c)
                if (t.adjacent(tm.internal_order[static_cast<std::size_t>(a - 1)],
                               tm.internal_order[static_cast<std::size_t>(c - 1)]))
                    b.connect(csets[static_cast<std::size_t>(a)], csets[static_cast<std::size_t>(c)]);
            for (int q = 0; q < k; ++q)
                if (t.adjacent(tm.internal_order[static_cast<std::size_t>(a - 1)],
                               leaves[static_cast<std::size_t>(q)]))
                    b.connect(literal_vertex(clause[static_cast<std::size_t>(q)]),
                              csets[static_cast<std::size_t>(a)]);
        }
        clause_range[static_cast<std::size_t>(i)] = {start, b.size()};
        // clause vertices see every literal that is not in the clause
        std::set<int> own;
        for (int lit : clause) own.insert(literal_vertex(lit));
        for (int w : pos_lit)
            if (!own.count(w))
                for (int v = start; v < b.size(); ++v) b.add_edge(v, w);
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int u = clause_range[static_cast<std::size_t>(i)].first;
                 u < clause_range[static_cast<std::size_t>(i)].second; ++u)
                for (int v = clause_range[static_cast<std::size_t>(j)].first;
                     v < clause_range[static_cast<std::size_t>(j)].second; ++v)
                    b.add_edge(u, v);

    // non-literal variable vertices are universal outside their gadget
    const int total = b.size();
    for (int i = 1; i <= n; ++i) {
        auto [lo, hi] = var_range[static_cast<std::size_t>(i)];
        for (int v = lo + 2; v < hi; ++v)
            for (int w = 0; w < total; ++w)
                if (w < lo || w >= hi) b.add_edge(v, w);
    }

    std::ostringstream src;
    src << "width-" << k << " threshold-2 formula, n=" << n << " m=" << m << ", tree on "
        << t.vertex_count() << " vertices, quotient " << tq << ", r=" << tm.r;
    GadgetInstance inst = b.take("treeksat", src.str());
    inst.formula = phi;
    return inst;
}

// ---------------------------------------------------------------------------
// bistars

// Gadget for T_{x,y}: every source vertex grows x+1 leaf cliques K_y and
// x+2 plus x+1 complement blocks wired so each leaf clique completes a
// bistar when complemented.
inline GadgetInstance star_to_bistar_instance(const Graph& gp, int x, int y) {
    if (x < 1 || x > y || y < 3)
        throw std::invalid_argument("bistar gadget: need 1 <= x <= y and y >= 3");
    const Graph t = build_tree(TreeSpec::bistar(x, y));
    const Graph ct = complement(t);
    const int n = gp.vertex_count();
    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;
    for (int u = 0; u < n; ++u) b.add_vertex(Role::attachment(u, "src", 0));
    for (auto [u, v] : gp.edges()) b.add_edge(u, v);
    const Graph ky = Graph::complete(y);
    for (int u = 0; u < n; ++u) {
        std::vector<SetRef> yy(static_cast<std::size_t>(x + 1) + 1);
        for (int i = 1; i <= x + 1; ++i)
            yy[static_cast<std::size_t>(i)] = b.add_copy(ky, [&](int k) {
                return Role::attachment(u, "Y" + std::to_string(i), k);
            });
        b.connect(u, yy[static_cast<std::size_t>(x + 1)]);
        for (int i = 1; i <= x; ++i)
            b.connect(yy[static_cast<std::size_t>(i)], yy[static_cast<std::size_t>(x + 1)]);

        // per leaf clique i <= x: block j=1 plays the centre over the
        // complemented clique, block j=2 the other centre, blocks j>=3 its
        // leaves
        std::vector<std::vector<SetRef>> uu(static_cast<std::size_t>(x + 1) + 1);
        for (int i = 1; i <= x; ++i) {
            auto& blocks = uu[static_cast<std::size_t>(i)];
            blocks.resize(static_cast<std::size_t>(x + 2) + 1);
            for (int j = 1; j <= x + 2; ++j)
                blocks[static_cast<std::size_t>(j)] = b.add_copy(ct, [&](int k) {
                    return Role::attachment(u, "U" + std::to_string(i) + "." + std::to_string(j), k);
                });
            b.connect(blocks[1], yy[static_cast<std::size_t>(i)]);
            b.connect(blocks[2], blocks[1]);
            for (int j = 3; j <= x + 2; ++j) b.connect(blocks[2], blocks[static_cast<std::size_t>(j)]);
        }
        // hub group: block j=1 is the centre seen from the last leaf clique
        // through one vertex of clique x, blocks j>=2 its leaves
        auto& hub = uu[static_cast<std::size_t>(x + 1)];
        hub.resize(static_cast<std::size_t>(x + 1) + 1);
        for (int j = 1; j <= x + 1; ++j)
            hub[static_cast<std::size_t>(j)] = b.add_copy(ct, [&](int k) {
                return Role::attachment(u, "U" + std::to_string(x + 1) + "." + std::to_string(j), k);
            });
        b.connect(hub[1], yy[static_cast<std::size_t>(x)]);
        for (int j = 2; j <= x + 1; ++j) b.connect(hub[1], hub[static_cast<std::size_t>(j)]);
        for (int j1 = 1; j1 <= x + 2; ++j1)
            for (int j2 = 1; j2 <= x + 1; ++j2)
                b.connect(uu[static_cast<std::size_t>(x)][static_cast<std::size_t>(j1)],
                          hub[static_cast<std::size_t>(j2)]);
    }
    std::ostringstream src;
    src << "bistar gadget x=" << x << " y=" << y << " over a " << n << "-vertex graph";
    return b.take("bistar", src.str());
}

// ---------------------------------------------------------------------------
// tristars

// Gadget for T_{1,y,z} from a bistar-style source: every vertex grows a
// K_z plus one complement block per non-pending position of the tristar.
inline GadgetInstance bistar_to_tristar_instance(const Graph& gp, int y, int z) {
    if (y < 1 || z < 3)
        throw std::invalid_argument("tristar gadget: need y >= 1 and z >= 3");
    const Graph t = build_tree(TreeSpec::tristar(1, y, z));
    const Graph ct = complement(t);
    const int tt = y + z + 4;
    const int n = gp.vertex_count();
    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;
    for (int u = 0; u < n; ++u) b.add_vertex(Role::attachment(u, "src", 0));
    for (auto [u, v] : gp.edges()) b.add_edge(u, v);
    const Graph kz = Graph::complete(z);
    for (int u = 0; u < n; ++u) {
        SetRef k = b.add_copy(kz, [&](int kk) { return Role::attachment(u, "K", kk); });
        b.connect(u, k);
        // block i sits on tristar position i-1; the canonical layout puts
        // the z far leaves last, so the first t-z positions are exactly
        // the non-far ones and position 2 is the centre over K_u
        std::vector<SetRef> xx(static_cast<std::size_t>(tt - z) + 1);
        for (int i = 1; i <= tt - z; ++i)
            xx[static_cast<std::size_t>(i)] = b.add_copy(ct, [&](int kk) {
                return Role::attachment(u, "X" + std::to_string(i), kk);
            });
        for (int i = 1; i <= tt - z; ++i)
            for (int j = i + 1; j <= tt - z; ++j)
                if (t.adjacent(i - 1, j - 1))
                    b.connect(xx[static_cast<std::size_t>(i)], xx[static_cast<std::size_t>(j)]);
        b.connect(xx[3], k);
    }
    std::ostringstream src;
    src << "tristar gadget y=" << y << " z=" << z << " over a " << n << "-vertex graph";
    return b.take("tristar-b", src.str());
}

// Gadget for T_{x,y,z} from a star-style source: every vertex grows two
// K_y cliques, free complement blocks on both sides, and one positioned
// complement block per non-middle-leaf position, doubled for both cliques.
inline GadgetInstance star_to_tristar_instance(const Graph& gp, int x, int y, int z) {
    if (x < 1 || x > z || y < 3)
        throw std::invalid_argument("tristar gadget: need 1 <= x <= z and y >= 3");
    const Graph t = build_tree(TreeSpec::tristar(x, y, z));
    const Graph ct = complement(t);
    const int tt = x + y + z + 3;
    const int n = gp.vertex_count();

    // non-middle-leaf positions in the canonical layout: the three spine
    // vertices, the x near leaves, then the z far leaves
    std::vector<int> pos;
    for (int v = 0; v < 3 + x; ++v) pos.push_back(v);
    for (int v = 3 + x + y; v < tt; ++v) pos.push_back(v);

    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;
    for (int u = 0; u < n; ++u) b.add_vertex(Role::attachment(u, "src", 0));
    for (auto [u, v] : gp.edges()) b.add_edge(u, v);
    const Graph ky = Graph::complete(y);
    for (int u = 0; u < n; ++u) {
        SetRef p1 = b.add_copy(ky, [&](int kk) { return Role::attachment(u, "P1", kk); });
        SetRef p2 = b.add_copy(ky, [&](int kk) { return Role::attachment(u, "P2", kk); });
        b.connect(u, p1);
        b.connect(u, p2);
        std::vector<SetRef> xfree(static_cast<std::size_t>(x));
        for (int i = 1; i <= x; ++i) {
            xfree[static_cast<std::size_t>(i - 1)] = b.add_copy(ct, [&](int kk) {
                return Role::attachment(u, "X" + std::to_string(i), kk);
            });
            b.connect(xfree[static_cast<std::size_t>(i - 1)], p1);
        }
        std::vector<SetRef> zfree(static_cast<std::size_t>(z));
        for (int i = 1; i <= z; ++i) {
            zfree[static_cast<std::size_t>(i - 1)] = b.add_copy(ct, [&](int kk) {
                return Role::attachment(u, "Z" + std::to_string(i), kk);
            });
            b.connect(zfree[static_cast<std::size_t>(i - 1)], p2);
        }
        auto add_positioned = [&](const std::string& prefix, SetRef clique) {
            std::vector<SetRef> blocks(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i)
                blocks[i] = b.add_copy(ct, [&](int kk) {
                    return Role::attachment(u, prefix + std::to_string(i + 1), kk);
                });
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = i + 1; j < pos.size(); ++j)
                    if (t.adjacent(pos[i], pos[j])) b.connect(blocks[i], blocks[j]);
                if (pos[i] == 1) b.connect(blocks[i], clique);
            }
            return blocks;
        };
        auto xpos = add_positioned("Xp", p1);
        auto zpos = add_positioned("Zp", p2);
        for (const auto& a : xfree)
            for (const auto& c : xpos) b.connect(a, c);
        for (const auto& a : zfree)
            for (const auto& c : zpos) b.connect(a, c);
    }
    std::ostringstream src;
    src << "tristar gadget x=" << x << " y=" << y << " z=" << z << " over a " << n
        << "-vertex graph";
    return b.take("tristar-s", src.str());
}

// ---------------------------------------------------------------------------
// six-vertex paths

inline GadgetInstance build_p6_instance(const CnfFormula& phi) {
    if (phi.mode != SatMode::AtLeast1)
        throw std::invalid_argument("p6: formula must use the threshold-1 mode");
    for (const auto& clause : phi.clauses)
        if (clause.size() != 3) throw std::invalid_argument("p6: clauses must have width 3");

    const Graph cp6 = complement(build_tree(TreeSpec::path(6)));
    const int n = phi.num_vars;
    const int m = static_cast<int>(phi.clauses.size());
    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;

    std::vector<int> pos_lit(static_cast<std::size_t>(2 * n), 0);
    std::vector<std::pair<int, int>> var_range(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const int start = b.size();
        int x = b.add_vertex(Role::literal(i, true));
        int xbar = b.add_vertex(Role::literal(i, false));
        pos_lit[static_cast<std::size_t>(2 * (i - 1))] = x;
        pos_lit[static_cast<std::size_t>(2 * (i - 1) + 1)] = xbar;
        std::vector<SetRef> sets(7);
        for (int j = 3; j <= 6; ++j)
            sets[static_cast<std::size_t>(j)] =
                b.add_copy(cp6, [&](int k) { return Role::var_set(i, j, k); });
        // two chains: x - X3 - X5 and xbar - X4 - X6
        b.connect(x, sets[3]);
        b.connect(sets[3], sets[5]);
        b.connect(xbar, sets[4]);
        b.connect(sets[4], sets[6]);
        var_range[static_cast<std::size_t>(i)] = {start, b.size()};
    }

    auto literal_vertex = [&](int lit) {
        int v = std::abs(lit);
        return pos_lit[static_cast<std::size_t>(2 * (v - 1) + (lit > 0 ? 0 : 1))];
    };

    std::vector<std::pair<int, int>> clause_range(static_cast<std::size_t>(m) + 1);
    std::vector<int> centre(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        const auto& clause = phi.clauses[static_cast<std::size_t>(i - 1)];
        const int start = b.size();
        SetRef c1 = b.add_copy(cp6, [&](int k) { return Role::clause_set(i, 1, k); });
        int c2 = b.add_vertex(Role::clause_set(i, 2, 0));
        SetRef c3 = b.add_copy(cp6, [&](int k) { return Role::clause_set(i, 3, k); });
        centre[static_cast<std::size_t>(i)] = c2;
        b.connect(c2, c1);
        int y1 = literal_vertex(clause[0]);
        int y2 = literal_vertex(clause[1]);
        int y3 = literal_vertex(clause[2]);
        b.connect(y1, c1);
        b.add_edge(c2, y2);
        b.connect(y3, c3);
        b.connect(y2, c3);
        // every clause vertex except the centre sees all other literals
        for (int w : pos_lit) {
            if (w == y1 || w == y2 || w == y3) continue;
            b.connect(w, c1);
            b.connect(w, c3);
        }
        clause_range[static_cast<std::size_t>(i)] = {start, b.size()};
    }
    // clause gadgets are fully joined apart from the centre pairs
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            for (int u = clause_range[static_cast<std::size_t>(i)].first;
                 u < clause_range[static_cast<std::size_t>(i)].second; ++u)
                for (int v = clause_range[static_cast<std::size_t>(j)].first;
                     v < clause_range[static_cast<std::size_t>(j)].second; ++v)
                    b.add_edge(u, v);
            b.remove_edge(centre[static_cast<std::size_t>(i)], centre[static_cast<std::size_t>(j)]);
        }

    const int total = b.size();
    for (int i = 1; i <= n; ++i) {
        auto [lo, hi] = var_range[static_cast<std::size_t>(i)];
        for (int v = lo + 2; v < hi; ++v)
            for (int w = 0; w < total; ++w)
                if (w < lo || w >= hi) b.add_edge(v, w);
    }

    std::ostringstream src;
    src << "width-3 threshold-1 formula, n=" << n << " m=" << m;
    GadgetInstance inst = b.take("p6", src.str());
    inst.formula = phi;
    return inst;
}

// ---------------------------------------------------------------------------
// the spider C_{1,2,4}

inline GadgetInstance build_c124_instance(const CnfFormula& phi) {
    if (phi.mode != SatMode::AtLeast2)
        throw std::invalid_argument("c124: formula must use the threshold-2 mode");
    for (const auto& clause : phi.clauses)
        if (clause.size() != 4) throw std::invalid_argument("c124: clauses must have width 4");

    const Graph spider = build_spider({1, 2, 4});
    const Graph cs = complement(spider);
    const int n = phi.num_vars;
    const int m = static_cast<int>(phi.clauses.size());
    detail::InstanceBuilder b;
    using SetRef = detail::InstanceBuilder::SetRef;

    std::vector<int> pos_lit(static_cast<std::size_t>(2 * n), 0);
    std::vector<std::pair<int, int>> var_range(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const int start = b.size();
        int x = b.add_vertex(Role::literal(i, true));
        int xbar = b.add_vertex(Role::literal(i, false));
        pos_lit[static_cast<std::size_t>(2 * (i - 1))] = x;
        pos_lit[static_cast<std::size_t>(2 * (i - 1) + 1)] = xbar;
        std::vector<SetRef> sets(9);
        sets[1] = {x, 1};
        sets[2] = {xbar, 1};
        for (int j = 3; j <= 8; ++j)
            sets[static_cast<std::size_t>(j)] =
                b.add_copy(cs, [&](int k) { return Role::var_set(i, j, k); });
        // the two stride-two chains, closed by the extra pair (2, 8)
        for (int j = 1; j <= 5; ++j)
            b.connect(sets[static_cast<std::size_t>(j)], sets[static_cast<std::size_t>(j + 2)]);
        b.connect(sets[2], sets[8]);
        var_range[static_cast<std::size_t>(i)] = {start, b.size()};
    }

    auto literal_vertex = [&](int lit) {
        int v = std::abs(lit);
        return pos_lit[static_cast<std::size_t>(2 * (v - 1) + (lit > 0 ? 0 : 1))];
    };

    std::vector<std::pair<int, int>> clause_range(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        const auto& clause = phi.clauses[static_cast<std::size_t>(i - 1)];
        const int start = b.size();
        std::vector<SetRef> csets(5);
        for (int j = 1; j <= 4; ++j)
            csets[static_cast<std::size_t>(j)] =
                b.add_copy(cs, [&](int k) { return Role::clause_set(i, j, k); });
        int y1 = literal_vertex(clause[0]);
        int y2 = literal_vertex(clause[1]);
        int y3 = literal_vertex(clause[2]);
        int y4 = literal_vertex(clause[3]);
        b.connect(y1, csets[1]);
        b.connect(y1, csets[2]);
        b.connect(y2, csets[2]);
        b.connect(y2, csets[3]);
        b.connect(y3, csets[3]);
        b.connect(y3, csets[4]);
        b.connect(y4, csets[3]);
        for (int w : pos_lit) {
            if (w == y1 || w == y2 || w == y3 || w == y4) continue;
            for (int j = 1; j <= 4; ++j) b.connect(w, csets[static_cast<std::size_t>(j)]);
        }
        clause_range[static_cast<std::size_t>(i)] = {start, b.size()};
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int u = clause_range[static_cast<std::size_t>(i)].first;
                 u < clause_range[static_cast<std::size_t>(i)].second; ++u)
                for (int v = clause_range[static_cast<std::size_t>(j)].first;
                     v < clause_range[static_cast<std::size_t>(j)].second; ++v)
                    b.add_edge(u, v);

    const int total = b.size();
    for (int i = 1; i <= n; ++i) {
        auto [lo, hi] = var_range[static_cast<std::size_t>(i)];
        for (int v = lo + 2; v < hi; ++v)
            for (int w = 0; w < total; ++w)
                if (w < lo || w >= hi) b.add_edge(v, w);
    }

    std::ostringstream src;
    src << "width-4 threshold-2 formula, n=" << n << " m=" << m;
    GadgetInstance inst = b.take("c124", src.str());
    inst.formula = phi;
    return inst;
}

// ---------------------------------------------------------------------------
// solution maps

// Turns a satisfying assignment into the published solution set: one true
// literal vertex per variable, plus the clause centres for the p6 shape.
inline SolutionSet forward_solution(const GadgetInstance& inst, const Assignment& a) {
    if (!inst.formula)
        throw std::invalid_argument("forward_solution: instance carries no formula");
    const CnfFormula& phi = *inst.formula;
    if (static_cast<int>(a.size()) != phi.num_vars)
        throw std::invalid_argument("forward_solution: assignment arity mismatch");
    if (!evaluate(phi, a))
        throw std::invalid_argument("forward_solution: assignment does not satisfy the formula");
    std::vector<int> out;
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == RoleKind::Literal &&
            r.positive == static_cast<bool>(a[static_cast<std::size_t>(r.var - 1)]))
            out.push_back(v);
        if (inst.construction == "p6" && r.kind == RoleKind::ClauseSet && r.set == 2)
            out.push_back(v);
    }
    return {VertexSet(std::move(out)), "assignment-derived"};
}

// Reads an assignment back off a solution set: a variable is true exactly
// when its positive literal vertex was chosen.
inline Assignment extract_assignment(const GadgetInstance& inst, const VertexSet& s) {
    int num_vars = 0;
    for (const Role& r : inst.roles)
        if (r.kind == RoleKind::Literal) num_vars = std::max(num_vars, r.var);
    if (num_vars == 0)
        throw std::invalid_argument("extract_assignment: instance has no literal vertices");
    Assignment a(static_cast<std::size_t>(num_vars), false);
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == RoleKind::Literal && r.positive && s.contains(v))
            a[static_cast<std::size_t>(r.var - 1)] = true;
    }
    return a;
}

// For vertex gadget constructions the source solution is the restriction
// of the gadget solution to the preserved source vertices.
inline VertexSet restrict_to_source(const GadgetInstance& inst, const VertexSet& s) {
    std::vector<int> out;
    bool any = false;
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == RoleKind::Attachment && r.name == "src") {
            any = true;
            if (s.contains(v)) out.push_back(r.owner);
        }
    }
    if (!any)
        throw std::invalid_argument("restrict_to_source: instance has no source vertices");
    return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// serialization

inline void write_roles(std::ostream& out, const GadgetInstance& inst) {
    out << "# construction: " << inst.construction << "\n";
    if (!inst.source.empty()) out << "# source: " << inst.source << "\n";
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        out << v << ' ' << role_to_string(inst.roles[static_cast<std::size_t>(v)]) << "\n";
}

struct ParsedRoles {
    std::vector<Role> roles;
    std::string construction;
    std::string source;
};

inline ParsedRoles read_roles(std::istream& in) {
    ParsedRoles parsed;
    std::string line;
    int expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            auto eat = [&](const std::string& key) -> std::optional<std::string> {
                std::size_t at = body.find(key);
                if (at == std::string::npos) return std::nullopt;
                std::string value = body.substr(at + key.size());
                std::size_t first = value.find_first_not_of(" \t");
                return first == std::string::npos ? std::string() : value.substr(first);
            };
            if (auto v = eat("construction:")) parsed.construction = *v;
            else if (auto v2 = eat("source:")) parsed.source = *v2;
            continue;
        }
        std::istringstream fields(line);
        int id = -1;
        std::string role_text;
        if (!(fields >> id >> role_text))
            throw std::invalid_argument("roles: malformed line '" + line + "'");
        if (id != expected)
            throw std::invalid_argument("roles: expected vertex " + std::to_string(expected) +
                                        ", got " + std::to_string(id));
        parsed.roles.push_back(parse_role(role_text));
        ++expected;
    }
    return parsed;
}

} // namespace sgc
