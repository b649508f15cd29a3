// Structural checks for the gadget compilers: role grammar round trips,
// frozen vertex counts against the published size formulas, per-set
// complement copies, the induced-pattern recipes each construction relies
// on, and the solution maps across the duplication blowup.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/modular.hpp"
#include "sgc/reductions.hpp"
#include "sgc/sat.hpp"
#include "sgc/trees.hpp"

using namespace sgc;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, e);
}

// the four-leaf example tree: a root with two internal children carrying
// two leaves each
Graph broom_tree() {
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
}

std::vector<int> block_ids(const GadgetInstance& inst, int owner, const std::string& name) {
    std::vector<int> out;
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == RoleKind::Attachment && r.owner == owner && r.name == name)
            out.push_back(v);
    }
    return out;
}

std::vector<int> set_ids(const GadgetInstance& inst, RoleKind kind, int owner, int set) {
    std::vector<int> out;
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == kind && r.owner == owner && r.set == set) out.push_back(v);
    }
    return out;
}

int literal_id(const GadgetInstance& inst, int var, bool positive) {
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const Role& r = inst.roles[static_cast<std::size_t>(v)];
        if (r.kind == RoleKind::Literal && r.var == var && r.positive == positive) return v;
    }
    FAIL("literal vertex not found");
    return -1;
}

std::vector<int> literal_ids(const GadgetInstance& inst) {
    std::vector<int> out;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (inst.roles[static_cast<std::size_t>(v)].kind == RoleKind::Literal) out.push_back(v);
    return out;
}

bool fully_adjacent(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (u != v && !g.adjacent(u, v)) return false;
    return true;
}

bool fully_nonadjacent(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (g.adjacent(u, v)) return false;
    return true;
}

// induce on picks, then complement inside the given id subset; this is how
// the vertex gadgets describe their hidden tree copies
Graph complement_within(const Graph& g, std::vector<int> picks, const std::vector<int>& flip) {
    std::sort(picks.begin(), picks.end());
    std::vector<int> flip_pos;
    for (int f : flip) {
        auto it = std::lower_bound(picks.begin(), picks.end(), f);
        REQUIRE(it != picks.end());
        REQUIRE(*it == f);
        flip_pos.push_back(static_cast<int>(it - picks.begin()));
    }
    Graph ind = induced_subgraph(g, VertexSet(picks));
    return subgraph_complement(ind, VertexSet(flip_pos));
}

} // namespace

TEST_CASE("role strings round trip through the grammar") {
    std::vector<Role> roles = {
        Role::literal(3, true),       Role::literal(12, false),
        Role::var_set(2, 5, 7),       Role::var_set(1, 3, 0),
        Role::clause_set(1, 2, 0),    Role::clause_set(9, 4, 19),
        Role::attachment(4, "W", 13), Role::attachment(0, "U2.3", 5),
        Role::attachment(7, "src", 0)};
    for (const Role& r : roles) REQUIRE(parse_role(role_to_string(r)) == r);

    REQUIRE(role_to_string(Role::literal(3, true)) == "lit:+3");
    REQUIRE(role_to_string(Role::literal(12, false)) == "lit:-12");
    REQUIRE(role_to_string(Role::var_set(2, 5, 7)) == "var:2/set:5/idx:7");
    REQUIRE(role_to_string(Role::clause_set(1, 2, 0)) == "cls:1/set:2/idx:0");
    REQUIRE(role_to_string(Role::attachment(4, "W", 13)) == "att:4/W/13");
}

TEST_CASE("malformed role strings are rejected") {
    const std::vector<std::string> bad = {
        "",          "lit:3",          "lit:+0",        "lit:+x",
        "lit:+",     "var:1/set:2",    "var:x/set:1/idx:2",
        "cls:0/set:1/idx:2",           "var:1/idx:2/set:3",
        "att:1//2",  "att:1/W",        "att:1/W/x",     "foo:1",
        "var:1/set:2/idx:-1"};
    for (const std::string& text : bad)
        REQUIRE_THROWS_AS(parse_role(text), std::invalid_argument);
}

TEST_CASE("independent-set blowup expands along quotient edges") {
    Graph p5 = build_tree(TreeSpec::path(5));

    SECTION("all-ones profile reproduces the base graph") {
        REQUIRE(blowup_independent(p5, {1, 1, 1, 1, 1}) == p5);
    }

    SECTION("blocks are independent and joined exactly along base edges") {
        Graph g = blowup_independent(p5, {1, 1, 2, 1, 2});
        REQUIRE(g.vertex_count() == 7);
        // blocks: {0}, {1}, {2,3}, {4}, {5,6}
        REQUIRE_FALSE(g.adjacent(2, 3));
        REQUIRE_FALSE(g.adjacent(5, 6));
        REQUIRE(g.adjacent(1, 2));
        REQUIRE(g.adjacent(1, 3));
        REQUIRE(g.adjacent(2, 4));
        REQUIRE(g.adjacent(3, 4));
        REQUIRE(g.adjacent(4, 5));
        REQUIRE(g.adjacent(4, 6));
        REQUIRE_FALSE(g.adjacent(0, 2));
        REQUIRE(is_isomorphic(quotient_graph(g), p5));
    }

    SECTION("bad profiles are rejected") {
        REQUIRE_THROWS_AS(blowup_independent(p5, {1, 1, 1, 1}), std::invalid_argument);
        REQUIRE_THROWS_AS(blowup_independent(p5, {1, 0, 1, 1, 1}), std::invalid_argument);
    }
}

TEST_CASE("rKr blowup instance matches the published block structure") {
    Graph p7 = build_tree(TreeSpec::path(7));
    GadgetInstance inst = instance_blowup_rkr(p7, 2);

    SECTION("size and edge count") {
        REQUIRE(inst.graph.vertex_count() == 28);
        // 7 blocks of two disjoint edges plus 6 joins of 16 pairs
        REQUIRE(inst.graph.edge_count() == 7 * 2 + 6 * 16);
        REQUIRE(inst.construction == "blowup");
    }

    SECTION("every block induces two disjoint K2s") {
        Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
        for (int u = 0; u < 7; ++u) {
            auto w = block_ids(inst, u, "W");
            REQUIRE(w.size() == 4);
            REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(w)), two_k2));
            REQUIRE(is_module(inst.graph, VertexSet(w)));
        }
    }

    SECTION("blocks join exactly along source edges") {
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) {
                auto wu = block_ids(inst, u, "W");
                auto wv = block_ids(inst, v, "W");
                if (p7.adjacent(u, v))
                    REQUIRE(fully_adjacent(inst.graph, wu, wv));
                else
                    REQUIRE(fully_nonadjacent(inst.graph, wu, wv));
            }
    }

    SECTION("r = 1 reproduces the source graph") {
        REQUIRE(instance_blowup_rkr(p7, 1).graph == p7);
    }

    SECTION("r must be positive") {
        REQUIRE_THROWS_AS(instance_blowup_rkr(p7, 0), std::invalid_argument);
    }
}

TEST_CASE("duplication solution maps") {
    Graph p4 = build_tree(TreeSpec::path(4));
    GadgetInstance inst = instance_blowup_rkr(p4, 2);

    SECTION("forward takes whole blocks") {
        SolutionSet s = map_solution_duplication_forward(VertexSet{1, 3}, inst);
        REQUIRE(s.members == VertexSet{4, 5, 6, 7, 12, 13, 14, 15});
        REQUIRE_FALSE(s.provenance.empty());
        REQUIRE(map_solution_duplication_forward(VertexSet{}, inst).members == VertexSet{});
    }

    SECTION("backward keeps a vertex exactly when a whole clique was taken") {
        // block 0 holds cliques {0,1} and {2,3}
        REQUIRE(map_solution_duplication_backward(VertexSet{0, 1}, inst) == VertexSet{0});
        REQUIRE(map_solution_duplication_backward(VertexSet{2, 3}, inst) == VertexSet{0});
        REQUIRE(map_solution_duplication_backward(VertexSet{0, 2}, inst) == VertexSet{});
        REQUIRE(map_solution_duplication_backward(VertexSet{0, 1, 2}, inst) == VertexSet{0});
    }

    SECTION("backward undoes forward for every source subset") {
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> ids;
            for (int v = 0; v < 4; ++v)
                if (mask & (1 << v)) ids.push_back(v);
            VertexSet src(ids);
            SolutionSet fwd = map_solution_duplication_forward(src, inst);
            REQUIRE(map_solution_duplication_backward(fwd.members, inst) == src);
        }
    }

    SECTION("source vertices outside the range are rejected") {
        REQUIRE_THROWS_AS(map_solution_duplication_forward(VertexSet{9}, inst),
                          std::invalid_argument);
    }

    SECTION("instances from other compilers are rejected") {
        GadgetInstance other = attach_leaf_complements(p4, build_spider({2, 2, 2}));
        REQUIRE_THROWS_AS(map_solution_duplication_forward(VertexSet{0}, other),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(map_solution_duplication_backward(VertexSet{0}, other),
                          std::invalid_argument);
    }
}

TEST_CASE("5-connected host compiler") {
    Graph h = complement(Graph::from_edges(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}}));
    REQUIRE(vertex_connectivity(h) == 5);
    REQUIRE(is_prime(h));
    REQUIRE_FALSE(is_self_complementary(h));

    FiveConnLayout layout = default_5conn_layout(h);
    CnfFormula phi(4, {{1, 2, 3, 4}}, SatMode::AtLeast2);
    GadgetInstance inst = build_5conn_instance(phi, h, layout);
    const int t = 8;

    SECTION("layout picks a special K4 and a matching literal pair") {
        REQUIRE(induces_clique(h, VertexSet(layout.vprime)));
        REQUIRE_FALSE(h.adjacent(layout.order[0], layout.order[1]));
    }

    SECTION("size follows the published formula") {
        REQUIRE(inst.graph.vertex_count() == 4 * (2 + (t - 2) * t) + 1 * (t - 4) * t);
        REQUIRE(inst.construction == "5conn");
    }

    SECTION("the ten-vertex example host gives 388 vertices") {
        Graph big = complement(petersen());
        REQUIRE(vertex_connectivity(big) >= 5);
        GadgetInstance wide = build_5conn_instance(phi, big, default_5conn_layout(big));
        REQUIRE(wide.graph.vertex_count() == 388);
    }

    SECTION("every gadget set induces the complement of the host") {
        Graph ch = complement(h);
        for (int j = 3; j <= t; ++j) {
            auto ids = set_ids(inst, RoleKind::VarSet, 1, j);
            REQUIRE(static_cast<int>(ids.size()) == t);
            REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(ids)), ch));
        }
        for (int j = 1; j <= t - 4; ++j) {
            auto ids = set_ids(inst, RoleKind::ClauseSet, 1, j);
            REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(ids)), ch));
        }
    }

    SECTION("literal vertices form a clique in the K4 case") {
        auto lits = literal_ids(inst);
        REQUIRE(lits.size() == 8);
        REQUIRE(induces_clique(inst.graph, VertexSet(lits)));
    }

    SECTION("one vertex per variable set induces the host after the pair flip") {
        for (int pick = 0; pick < 2; ++pick) {
            std::vector<int> picks = {literal_id(inst, 2, true), literal_id(inst, 2, false)};
            for (int j = 3; j <= t; ++j) {
                auto ids = set_ids(inst, RoleKind::VarSet, 2, j);
                picks.push_back(pick == 0 ? ids.front() : ids.back());
            }
            Graph fixed = complement_within(inst.graph, picks, {picks[0], picks[1]});
            REQUIRE(is_isomorphic(fixed, h));
        }
    }

    SECTION("one vertex per clause set plus the clause literals induces the host") {
        std::vector<int> picks;
        for (int lit : phi.clauses[0]) picks.push_back(literal_id(inst, lit, lit > 0));
        for (int j = 1; j <= t - 4; ++j)
            picks.push_back(set_ids(inst, RoleKind::ClauseSet, 1, j).front());
        REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(picks)), h));
    }

    SECTION("hosts failing the preconditions are rejected") {
        REQUIRE_THROWS_AS(default_5conn_layout(build_tree(TreeSpec::path(5))),
                          std::invalid_argument);
        Graph k5 = Graph::complete(5);
        FiveConnLayout fake{{0, 1, 2, 3, 4}, {0, 1, 2, 3}};
        REQUIRE_THROWS_AS(build_5conn_instance(phi, k5, fake), std::invalid_argument);
        CnfFormula loose(4, {{1, 2, 3, 4}}, SatMode::AtLeast2);
        FiveConnLayout swapped = layout;
        std::swap(swapped.order[1], swapped.order[2]);
        if (h.adjacent(swapped.order[0], swapped.order[1]))
            REQUIRE_THROWS_AS(build_5conn_instance(loose, h, swapped), std::invalid_argument);
    }

    SECTION("threshold-1 formulas are rejected") {
        CnfFormula wrong(4, {{1, 2, 3}}, SatMode::AtLeast1);
        REQUIRE_THROWS_AS(build_5conn_instance(wrong, h, layout), std::invalid_argument);
    }
}

TEST_CASE("leaf attachment compiler") {
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Graph tree = build_spider({2, 2, 4});
    REQUIRE(is_prime(tree));
    GadgetInstance inst = attach_leaf_complements(c5, tree);

    SECTION("size and layout") {
        REQUIRE(inst.graph.vertex_count() == 5 * (1 + 9));
        REQUIRE(inst.construction == "leafattach");
        for (int u = 0; u < 5; ++u) {
            REQUIRE(inst.roles[static_cast<std::size_t>(u)] == Role::attachment(u, "src", 0));
        }
    }

    SECTION("source edges survive") {
        REQUIRE(induced_subgraph(inst.graph, VertexSet{0, 1, 2, 3, 4}) == c5);
    }

    SECTION("attached blocks are modules inducing the tree complement") {
        Graph ct = complement(tree);
        for (int u = 0; u < 5; ++u) {
            auto w = block_ids(inst, u, "W");
            REQUIRE(w.size() == 9);
            REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(w)), ct));
            REQUIRE(is_module(inst.graph, VertexSet(w)));
            REQUIRE(fully_adjacent(inst.graph, {u}, w));
            for (int v = 0; v < 5; ++v)
                if (v != u) REQUIRE(fully_nonadjacent(inst.graph, {v}, w));
        }
    }

    SECTION("restriction back to the source") {
        auto w2 = block_ids(inst, 2, "W");
        std::vector<int> mixed = {2, w2[0], w2[3]};
        REQUIRE(restrict_to_source(inst, VertexSet(mixed)) == VertexSet{2});
    }

    SECTION("non-prime or non-tree attachments are rejected") {
        REQUIRE_THROWS_AS(attach_leaf_complements(c5, build_tree(TreeSpec::bistar(2, 2))),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(attach_leaf_complements(c5, c5), std::invalid_argument);
    }
}

TEST_CASE("tree k-sat compiler") {
    Graph t = broom_tree();
    CnfFormula phi(4, {{1, 2, 3, 4}}, SatMode::AtLeast2);
    GadgetInstance inst = build_tree_ksat_instance(phi, t);

    SECTION("size follows the published example") {
        // quotient on 5 modules, widest leaf class 2, so R has 20 vertices
        REQUIRE(inst.graph.vertex_count() == 4 * 62 + 1 * 21);
        CnfFormula two(4, {{1, 2, 3, 4}, {1, 2, 3, -4}}, SatMode::AtLeast2);
        REQUIRE(build_tree_ksat_instance(two, t).graph.vertex_count() == 4 * 62 + 2 * 21);
    }

    SECTION("variable sets induce the clique blowup of the quotient complement") {
        Graph quotient = quotient_graph(t);
        Graph r = detail::blow_into_rkr(complement(quotient), 2);
        REQUIRE(r.vertex_count() == 20);
        REQUIRE_FALSE(contains_induced(r, t).has_value());
        for (int j = 3; j <= 5; ++j) {
            auto ids = set_ids(inst, RoleKind::VarSet, 1, j);
            REQUIRE(ids.size() == 20);
            REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(ids)), r));
        }
    }

    SECTION("literal vertices stay independent") {
        auto lits = literal_ids(inst);
        REQUIRE(lits.size() == 8);
        REQUIRE(induces_independent_set(inst.graph, VertexSet(lits)));
    }

    SECTION("clause sets induce tree complements") {
        Graph ct = complement(t);
        for (int j = 1; j <= 3; ++j) {
            auto ids = set_ids(inst, RoleKind::ClauseSet, 1, j);
            REQUIRE(ids.size() == 7);
            REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(ids)), ct));
        }
    }

    SECTION("one vertex per clause set plus the clause literals induces the tree") {
        std::vector<int> picks;
        for (int lit : phi.clauses[0]) picks.push_back(literal_id(inst, lit, lit > 0));
        for (int j = 1; j <= 3; ++j)
            picks.push_back(set_ids(inst, RoleKind::ClauseSet, 1, j).front());
        REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(picks)), t));
    }

    SECTION("unsupported inputs are rejected") {
        REQUIRE_THROWS_AS(build_tree_ksat_instance(phi, build_tree(TreeSpec::path(6))),
                          std::invalid_argument);
        CnfFormula narrow(4, {{1, 2, 3, 4}}, SatMode::AtLeast2);
        REQUIRE_THROWS_AS(build_tree_ksat_instance(narrow, build_spider({2, 2, 2, 2, 2})),
                          std::invalid_argument);
    }
}

TEST_CASE("bistar gadget compiler") {
    Graph p3 = build_tree(TreeSpec::path(3));
    const int x = 2, y = 5, t = x + y + 2;
    GadgetInstance inst = star_to_bistar_instance(p3, x, y);
    Graph tree = build_tree(TreeSpec::bistar(x, y));

    SECTION("size follows the published formula") {
        const int per_vertex = (x + 1) * y + x * (x + 2) * t + (x + 1) * t;
        REQUIRE(per_vertex == 114);
        REQUIRE(inst.graph.vertex_count() == 3 + 3 * per_vertex);
        REQUIRE(inst.construction == "bistar");
    }

    SECTION("source edges survive and gadget blocks stay private") {
        REQUIRE(induced_subgraph(inst.graph, VertexSet{0, 1, 2}) == p3);
        // cross-owner edges may only join two source vertices or a source
        // vertex with its own attachments
        for (auto [a, b] : inst.graph.edges()) {
            const Role& ra = inst.roles[static_cast<std::size_t>(a)];
            const Role& rb = inst.roles[static_cast<std::size_t>(b)];
            if (ra.name == "src" && rb.name == "src") continue;
            REQUIRE(ra.owner == rb.owner);
            if (ra.name == "src") REQUIRE(rb.name == "Y" + std::to_string(x + 1));
            if (rb.name == "src") REQUIRE(ra.name == "Y" + std::to_string(x + 1));
        }
    }

    SECTION("leaf cliques and complement blocks have the right shapes") {
        Graph ct = complement(tree);
        for (int i = 1; i <= x + 1; ++i) {
            auto yy = block_ids(inst, 1, "Y" + std::to_string(i));
            REQUIRE(static_cast<int>(yy.size()) == y);
            REQUIRE(induces_clique(inst.graph, VertexSet(yy)));
        }
        for (int i = 1; i <= x; ++i)
            for (int j = 1; j <= x + 2; ++j) {
                auto u = block_ids(inst, 1, "U" + std::to_string(i) + "." + std::to_string(j));
                REQUIRE(static_cast<int>(u.size()) == t);
                REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(u)), ct));
            }
    }

    SECTION("each leaf clique completes a bistar when complemented") {
        for (int u = 0; u < 3; ++u) {
            for (int i = 1; i <= x; ++i) {
                std::vector<int> yy = block_ids(inst, u, "Y" + std::to_string(i));
                std::vector<int> picks = yy;
                for (int j = 1; j <= x + 2; ++j)
                    picks.push_back(
                        block_ids(inst, u, "U" + std::to_string(i) + "." + std::to_string(j))
                            .front());
                REQUIRE(is_isomorphic(complement_within(inst.graph, picks, yy), tree));
            }
            // hub recipe: the last clique complemented, one vertex of
            // clique x, one vertex per hub block
            std::vector<int> yx1 = block_ids(inst, u, "Y" + std::to_string(x + 1));
            std::vector<int> picks = yx1;
            picks.push_back(block_ids(inst, u, "Y" + std::to_string(x)).front());
            for (int j = 1; j <= x + 1; ++j)
                picks.push_back(
                    block_ids(inst, u, "U" + std::to_string(x + 1) + "." + std::to_string(j))
                        .front());
            REQUIRE(is_isomorphic(complement_within(inst.graph, picks, yx1), tree));
        }
    }

    SECTION("parameter bounds are enforced") {
        REQUIRE_THROWS_AS(star_to_bistar_instance(p3, 0, 5), std::invalid_argument);
        REQUIRE_THROWS_AS(star_to_bistar_instance(p3, 3, 2), std::invalid_argument);
        REQUIRE_THROWS_AS(star_to_bistar_instance(p3, 1, 2), std::invalid_argument);
    }
}

TEST_CASE("tristar gadget compiler from the bistar side") {
    Graph p3 = build_tree(TreeSpec::path(3));
    const int y = 1, z = 4, t = y + z + 4;
    GadgetInstance inst = bistar_to_tristar_instance(p3, y, z);
    Graph tree = build_tree(TreeSpec::tristar(1, y, z));

    SECTION("size follows the published formula") {
        REQUIRE(z + (t - z) * t == 49);
        REQUIRE(inst.graph.vertex_count() == 3 + 3 * 49);
        REQUIRE(inst.construction == "tristar-b");
    }

    SECTION("the clique completes a tristar when complemented") {
        for (int u = 0; u < 3; ++u) {
            std::vector<int> k = block_ids(inst, u, "K");
            REQUIRE(static_cast<int>(k.size()) == z);
            REQUIRE(induces_clique(inst.graph, VertexSet(k)));
            std::vector<int> picks = k;
            for (int i = 1; i <= t - z; ++i)
                picks.push_back(block_ids(inst, u, "X" + std::to_string(i)).front());
            REQUIRE(is_isomorphic(complement_within(inst.graph, picks, k), tree));
        }
    }

    SECTION("the source vertex sees only its clique") {
        std::vector<int> k = block_ids(inst, 0, "K");
        REQUIRE(fully_adjacent(inst.graph, {0}, k));
        for (int i = 1; i <= t - z; ++i)
            REQUIRE(fully_nonadjacent(inst.graph, {0},
                                      block_ids(inst, 0, "X" + std::to_string(i))));
    }

    SECTION("parameter bounds are enforced") {
        REQUIRE_THROWS_AS(bistar_to_tristar_instance(p3, 0, 4), std::invalid_argument);
        REQUIRE_THROWS_AS(bistar_to_tristar_instance(p3, 1, 2), std::invalid_argument);
    }
}

TEST_CASE("tristar gadget compiler from the star side") {
    Graph k2 = Graph::complete(2);
    const int x = 2, y = 5, z = 2, t = x + y + z + 3;
    GadgetInstance inst = star_to_tristar_instance(k2, x, y, z);
    Graph tree = build_tree(TreeSpec::tristar(x, y, z));

    SECTION("size follows the published formula") {
        REQUIRE(2 * y + (x + z) * t + 2 * (t - y) * t == 226);
        REQUIRE(inst.graph.vertex_count() == 2 + 2 * 226);
        REQUIRE(inst.construction == "tristar-s");
    }

    SECTION("both cliques complete tristars when complemented") {
        for (int u = 0; u < 2; ++u) {
            std::vector<int> p1 = block_ids(inst, u, "P1");
            std::vector<int> picks = p1;
            for (int i = 1; i <= t - y; ++i)
                picks.push_back(block_ids(inst, u, "Xp" + std::to_string(i)).front());
            REQUIRE(is_isomorphic(complement_within(inst.graph, picks, p1), tree));

            std::vector<int> p2 = block_ids(inst, u, "P2");
            picks = p2;
            for (int i = 1; i <= t - y; ++i)
                picks.push_back(block_ids(inst, u, "Zp" + std::to_string(i)).front());
            REQUIRE(is_isomorphic(complement_within(inst.graph, picks, p2), tree));
        }
    }

    SECTION("free blocks sit on their clique and their positioned group") {
        std::vector<int> p1 = block_ids(inst, 0, "P1");
        std::vector<int> p2 = block_ids(inst, 0, "P2");
        for (int i = 1; i <= x; ++i) {
            auto xi = block_ids(inst, 0, "X" + std::to_string(i));
            REQUIRE(fully_adjacent(inst.graph, xi, p1));
            REQUIRE(fully_nonadjacent(inst.graph, xi, p2));
            for (int j = 1; j <= t - y; ++j) {
                REQUIRE(fully_adjacent(inst.graph, xi,
                                       block_ids(inst, 0, "Xp" + std::to_string(j))));
                REQUIRE(fully_nonadjacent(inst.graph, xi,
                                          block_ids(inst, 0, "Zp" + std::to_string(j))));
            }
        }
        for (int i = 1; i <= z; ++i) {
            auto zi = block_ids(inst, 0, "Z" + std::to_string(i));
            REQUIRE(fully_adjacent(inst.graph, zi, p2));
            REQUIRE(fully_nonadjacent(inst.graph, zi, p1));
        }
        // the two free families never see each other
        for (int i = 1; i <= x; ++i)
            for (int j = 1; j <= z; ++j)
                REQUIRE(fully_nonadjacent(inst.graph, block_ids(inst, 0, "X" + std::to_string(i)),
                                          block_ids(inst, 0, "Z" + std::to_string(j))));
    }

    SECTION("parameter bounds are enforced") {
        REQUIRE_THROWS_AS(star_to_tristar_instance(k2, 0, 5, 2), std::invalid_argument);
        REQUIRE_THROWS_AS(star_to_tristar_instance(k2, 3, 5, 2), std::invalid_argument);
        REQUIRE_THROWS_AS(star_to_tristar_instance(k2, 2, 2, 2), std::invalid_argument);
    }
}

TEST_CASE("six-vertex path compiler") {
    CnfFormula phi(3, {{1, -2, 3}}, SatMode::AtLeast1);
    GadgetInstance inst = build_p6_instance(phi);

    SECTION("size follows the published formula") {
        REQUIRE(inst.graph.vertex_count() == 26 * 3 + 13 * 1);
        REQUIRE(inst.construction == "p6");
    }

    SECTION("variable chains are wired and private") {
        int x1 = literal_id(inst, 1, true);
        int xbar1 = literal_id(inst, 1, false);
        auto x13 = set_ids(inst, RoleKind::VarSet, 1, 3);
        auto x14 = set_ids(inst, RoleKind::VarSet, 1, 4);
        auto x15 = set_ids(inst, RoleKind::VarSet, 1, 5);
        auto x16 = set_ids(inst, RoleKind::VarSet, 1, 6);
        REQUIRE(fully_adjacent(inst.graph, {x1}, x13));
        REQUIRE(fully_adjacent(inst.graph, x13, x15));
        REQUIRE(fully_adjacent(inst.graph, {xbar1}, x14));
        REQUIRE(fully_adjacent(inst.graph, x14, x16));
        REQUIRE(fully_nonadjacent(inst.graph, {x1}, x14));
        REQUIRE(fully_nonadjacent(inst.graph, {x1}, x16));
        REQUIRE(fully_nonadjacent(inst.graph, {xbar1}, x13));
        // foreign gadget sets are universal towards this literal
        REQUIRE(fully_adjacent(inst.graph, {x1}, set_ids(inst, RoleKind::VarSet, 2, 3)));
        Graph cp6 = complement(build_tree(TreeSpec::path(6)));
        REQUIRE(is_isomorphic(induced_subgraph(inst.graph, VertexSet(x13)), cp6));
    }

    SECTION("the clause centre sees only its middle literal and first block") {
        auto centre = set_ids(inst, RoleKind::ClauseSet, 1, 2);
        REQUIRE(centre.size() == 1);
        int c = centre.front();
        int y1 = literal_id(inst, 1, true);
        int y2 = literal_id(inst, 2, false);
        int y3 = literal_id(inst, 3, true);
        REQUIRE(inst.graph.adjacent(c, y2));
        REQUIRE_FALSE(inst.graph.adjacent(c, y1));
        REQUIRE_FALSE(inst.graph.adjacent(c, y3));
        REQUIRE_FALSE(inst.graph.adjacent(c, literal_id(inst, 2, true)));
        REQUIRE(fully_adjacent(inst.graph, {c}, set_ids(inst, RoleKind::ClauseSet, 1, 1)));
        REQUIRE(fully_nonadjacent(inst.graph, {c}, set_ids(inst, RoleKind::ClauseSet, 1, 3)));
    }

    SECTION("outer clause blocks see the right literals") {
        auto c1 = set_ids(inst, RoleKind::ClauseSet, 1, 1);
        auto c3 = set_ids(inst, RoleKind::ClauseSet, 1, 3);
        int y1 = literal_id(inst, 1, true);
        int y2 = literal_id(inst, 2, false);
        int y3 = literal_id(inst, 3, true);
        REQUIRE(fully_adjacent(inst.graph, {y1}, c1));
        REQUIRE(fully_adjacent(inst.graph, {y3}, c3));
        REQUIRE(fully_adjacent(inst.graph, {y2}, c3));
        // literals outside the clause reach both outer blocks
        REQUIRE(fully_adjacent(inst.graph, {literal_id(inst, 2, true)}, c1));
        REQUIRE(fully_adjacent(inst.graph, {literal_id(inst, 2, true)}, c3));
    }

    SECTION("centres of different clauses stay apart") {
        CnfFormula two(3, {{1, -2, 3}, {-1, 2, 3}}, SatMode::AtLeast1);
        GadgetInstance big = build_p6_instance(two);
        REQUIRE(big.graph.vertex_count() == 26 * 3 + 13 * 2);
        int ca = set_ids(big, RoleKind::ClauseSet, 1, 2).front();
        int cb = set_ids(big, RoleKind::ClauseSet, 2, 2).front();
        REQUIRE_FALSE(big.graph.adjacent(ca, cb));
        REQUIRE(fully_adjacent(big.graph, set_ids(big, RoleKind::ClauseSet, 1, 1),
                               set_ids(big, RoleKind::ClauseSet, 2, 3)));
    }

    SECTION("literal vertices stay independent") {
        REQUIRE(induces_independent_set(inst.graph, VertexSet(literal_ids(inst))));
    }

    SECTION("forward solution takes the true literals and the clause centres") {
        Assignment a = {true, false, false};
        SolutionSet s = forward_solution(inst, a);
        VertexSet expected{literal_id(inst, 1, true), literal_id(inst, 2, false),
                           literal_id(inst, 3, false),
                           set_ids(inst, RoleKind::ClauseSet, 1, 2).front()};
        REQUIRE(s.members == expected);
        REQUIRE(extract_assignment(inst, s.members) == a);
    }

    SECTION("unsatisfying assignments are rejected") {
        REQUIRE_THROWS_AS(forward_solution(inst, Assignment{false, true, false}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(forward_solution(inst, Assignment{true, false}),
                          std::invalid_argument);
    }

    SECTION("wrong modes and widths are rejected") {
        REQUIRE_THROWS_AS(build_p6_instance(CnfFormula(4, {{1, 2, 3, 4}}, SatMode::AtLeast2)),
                          std::invalid_argument);
    }
}

TEST_CASE("spider compiler for C_{1,2,4}") {
    CnfFormula phi(4, {{1, 2, 3, 4}}, SatMode::AtLeast2);
    GadgetInstance inst = build_c124_instance(phi);
    Graph cs = complement(build_spider({1, 2, 4}));

    SECTION("size follows the published formula") {
        REQUIRE(inst.graph.vertex_count() == 50 * 4 + 32 * 1);
        REQUIRE(inst.construction == "c124");
    }

    SECTION("gadget sets induce spider complements") {
        for (int j = 3; j <= 8; ++j)
            REQUIRE(is_isomorphic(
                induced_subgraph(inst.graph, VertexSet(set_ids(inst, RoleKind::VarSet, 2, j))),
                cs));
        for (int j = 1; j <= 4; ++j)
            REQUIRE(is_isomorphic(
                induced_subgraph(inst.graph, VertexSet(set_ids(inst, RoleKind::ClauseSet, 1, j))),
                cs));
    }

    SECTION("variable chains follow the stride-two pattern") {
        int x = literal_id(inst, 1, true);
        int xbar = literal_id(inst, 1, false);
        auto s3 = set_ids(inst, RoleKind::VarSet, 1, 3);
        auto s4 = set_ids(inst, RoleKind::VarSet, 1, 4);
        auto s5 = set_ids(inst, RoleKind::VarSet, 1, 5);
        auto s6 = set_ids(inst, RoleKind::VarSet, 1, 6);
        auto s7 = set_ids(inst, RoleKind::VarSet, 1, 7);
        auto s8 = set_ids(inst, RoleKind::VarSet, 1, 8);
        REQUIRE(fully_adjacent(inst.graph, {x}, s3));
        REQUIRE(fully_adjacent(inst.graph, {xbar}, s4));
        REQUIRE(fully_adjacent(inst.graph, s3, s5));
        REQUIRE(fully_adjacent(inst.graph, s4, s6));
        REQUIRE(fully_adjacent(inst.graph, s5, s7));
        REQUIRE(fully_adjacent(inst.graph, {xbar}, s8));
        REQUIRE(fully_nonadjacent(inst.graph, s6, s8));
        REQUIRE(fully_nonadjacent(inst.graph, {x}, s4));
        REQUIRE(fully_nonadjacent(inst.graph, s3, s4));
    }

    SECTION("clause blocks see the published literal pattern") {
        auto c1 = set_ids(inst, RoleKind::ClauseSet, 1, 1);
        auto c2 = set_ids(inst, RoleKind::ClauseSet, 1, 2);
        auto c3 = set_ids(inst, RoleKind::ClauseSet, 1, 3);
        auto c4 = set_ids(inst, RoleKind::ClauseSet, 1, 4);
        int y1 = literal_id(inst, 1, true);
        int y2 = literal_id(inst, 2, true);
        int y3 = literal_id(inst, 3, true);
        int y4 = literal_id(inst, 4, true);
        REQUIRE(fully_adjacent(inst.graph, {y1}, c1));
        REQUIRE(fully_adjacent(inst.graph, {y1}, c2));
        REQUIRE(fully_adjacent(inst.graph, {y2}, c2));
        REQUIRE(fully_adjacent(inst.graph, {y2}, c3));
        REQUIRE(fully_adjacent(inst.graph, {y3}, c3));
        REQUIRE(fully_adjacent(inst.graph, {y3}, c4));
        REQUIRE(fully_adjacent(inst.graph, {y4}, c3));
        REQUIRE(fully_nonadjacent(inst.graph, {y4}, c4));
        REQUIRE(fully_nonadjacent(inst.graph, {y2}, c1));
        // blocks of the same clause stay apart
        REQUIRE(fully_nonadjacent(inst.graph, c1, c2));
        REQUIRE(fully_nonadjacent(inst.graph, c3, c4));
        // negated clause literals count as foreign and reach every block
        REQUIRE(fully_adjacent(inst.graph, {literal_id(inst, 1, false)}, c1));
        REQUIRE(fully_adjacent(inst.graph, {literal_id(inst, 4, false)}, c4));
    }

    SECTION("forward solution picks one true literal per variable") {
        Assignment a = {true, true, false, false};
        SolutionSet s = forward_solution(inst, a);
        VertexSet expected{literal_id(inst, 1, true), literal_id(inst, 2, true),
                           literal_id(inst, 3, false), literal_id(inst, 4, false)};
        REQUIRE(s.members == expected);
        REQUIRE_THROWS_AS(forward_solution(inst, Assignment{true, false, false, false}),
                          std::invalid_argument);
    }

    SECTION("threshold-1 formulas are rejected") {
        REQUIRE_THROWS_AS(build_c124_instance(CnfFormula(4, {{1, 2, 3}}, SatMode::AtLeast1)),
                          std::invalid_argument);
    }
}

TEST_CASE("gadget serialization round trips") {
    Graph p4 = build_tree(TreeSpec::path(4));
    GadgetInstance inst = instance_blowup_rkr(p4, 2);

    std::ostringstream out;
    write_roles(out, inst);
    std::string text = out.str();
    REQUIRE(text.rfind("# construction: blowup", 0) == 0);

    std::istringstream in(text);
    ParsedRoles parsed = read_roles(in);
    REQUIRE(parsed.construction == "blowup");
    REQUIRE(parsed.source == inst.source);
    REQUIRE(parsed.roles == inst.roles);

    SECTION("gaps in the vertex numbering are rejected") {
        std::istringstream bad("# construction: blowup\n0 att:0/W/0\n2 att:0/W/2\n");
        REQUIRE_THROWS_AS(read_roles(bad), std::invalid_argument);
    }

    SECTION("broken role text is rejected") {
        std::istringstream bad("0 att:0/W\n");
        REQUIRE_THROWS_AS(read_roles(bad), std::invalid_argument);
    }
}
