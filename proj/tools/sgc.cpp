// Command line driver for the subgraph complementation toolkit.
//
// Verbs:
//   gen       compile one of the hardness constructions to a graph+roles pair
//   solve     decide SC(G, H-free) by exhaustive search or the paw procedure
//   classify  print the hardness verdict and reduction chain for a tree
//   check     search a graph for an induced copy of a pattern
//   verify    run one of the differential verification suites
//   modules   print the maximal strong modules and the quotient graph
//
// Exit codes: 0 = yes/solved/verified, 1 = no/counterexample/suite failure,
// 2 = usage or budget error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sgc/graph.hpp"
#include "sgc/graph_io.hpp"
#include "sgc/hardness.hpp"
#include "sgc/modular.hpp"
#include "sgc/reductions.hpp"
#include "sgc/sat.hpp"
#include "sgc/solvers.hpp"
#include "sgc/trees.hpp"
#include "sgc/verify.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

sgc::Graph load_graph(const std::string& path) {
    return sgc::read_graph_file(path);
}

sgc::CnfFormula load_cnf(const std::string& path) {
    return sgc::read_dimacs_file(path);
}

// Re-tags a DIMACS formula with the at-least-two threshold; the constructor
// re-validates the uniform-width requirement.
sgc::CnfFormula as_ge2(const sgc::CnfFormula& phi) {
    return sgc::CnfFormula(phi.num_vars, phi.clauses, sgc::SatMode::AtLeast2);
}

// Pattern grammar shared by --forbidden and --pattern: the keyword "paw",
// an @file graph (not required to be a tree), or a tree spec.
sgc::Graph resolve_pattern(const std::string& text) {
    if (text == "paw") return sgc::paw_graph();
    if (!text.empty() && text[0] == '@') return sgc::read_graph_file(text.substr(1));
    return sgc::build_tree(sgc::parse_tree_spec(text));
}

struct TargetTree {
    sgc::Graph tree;
    sgc::TreeSpec spec;
};

// Resolves the --tree/--target pair into a concrete tree plus its canonical
// shape. A file target may be given with or without a leading '@'.
TargetTree resolve_target(const std::string& tree_spec, const std::string& target_file) {
    if (tree_spec.empty() && target_file.empty())
        throw std::invalid_argument("this construction needs --tree <spec> or --target <file>");
    TargetTree out;
    if (!tree_spec.empty()) {
        out.spec = sgc::parse_tree_spec(tree_spec);
        out.tree = sgc::build_tree(out.spec);
    } else {
        std::string path = target_file[0] == '@' ? target_file.substr(1) : target_file;
        out.spec = sgc::TreeSpec::explicit_tree(sgc::read_graph_file(path));
        out.tree = out.spec.graph;
    }
    if (out.spec.shape == sgc::TreeShape::Explicit) out.spec = sgc::classify_shape(out.tree);
    return out;
}

std::string witness_text(const sgc::VertexSet& s) {
    if (s.size() == 0) return "∅";
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

struct GenOptions {
    std::string construction;
    std::string cnf_path;
    std::string graph_path;
    std::string tree_spec;
    std::string target_file;
    int r = 2;
    std::string out_graph = "instance.graph";
    std::string out_roles = "instance.roles";
};

int run_gen(const GenOptions& opt) {
    auto need_cnf = [&]() {
        if (opt.cnf_path.empty())
            throw std::invalid_argument("construction '" + opt.construction + "' needs --cnf");
        return load_cnf(opt.cnf_path);
    };
    auto need_graph = [&]() {
        if (opt.graph_path.empty())
            throw std::invalid_argument("construction '" + opt.construction + "' needs --graph");
        return load_graph(opt.graph_path);
    };
    auto need_target = [&]() { return resolve_target(opt.tree_spec, opt.target_file); };

    sgc::GadgetInstance inst;
    if (opt.construction == "blowup") {
        inst = sgc::instance_blowup_rkr(need_graph(), opt.r);
    } else if (opt.construction == "5conn") {
        sgc::CnfFormula phi = as_ge2(need_cnf());
        // The target names the tree whose complement hosts the clause
        // gadgets; a non-tree @file is taken as the host itself.
        sgc::Graph h;
        if (!opt.target_file.empty()) {
            std::string path = opt.target_file[0] == '@' ? opt.target_file.substr(1)
                                                         : opt.target_file;
            sgc::Graph raw = sgc::read_graph_file(path);
            h = sgc::is_tree(raw) ? sgc::complement(raw) : raw;
        } else {
            h = sgc::complement(need_target().tree);
        }
        inst = sgc::build_5conn_instance(phi, h, sgc::default_5conn_layout(h));
    } else if (opt.construction == "leafattach") {
        sgc::Graph g = need_graph();
        inst = sgc::attach_leaf_complements(g, need_target().tree);
    } else if (opt.construction == "treeksat") {
        sgc::CnfFormula phi = as_ge2(need_cnf());
        inst = sgc::build_tree_ksat_instance(phi, need_target().tree);
    } else if (opt.construction == "bistar") {
        sgc::Graph g = need_graph();
        TargetTree t = need_target();
        if (t.spec.shape != sgc::TreeShape::Bistar)
            throw std::invalid_argument("bistar construction needs a T<x>,<y> target");
        inst = sgc::star_to_bistar_instance(g, t.spec.a, t.spec.b);
    } else if (opt.construction == "tristar-b") {
        sgc::Graph g = need_graph();
        TargetTree t = need_target();
        if (t.spec.shape != sgc::TreeShape::Tristar || t.spec.a != 1)
            throw std::invalid_argument("tristar-b construction needs a T1,<y>,<z> target");
        inst = sgc::bistar_to_tristar_instance(g, t.spec.b, t.spec.c);
    } else if (opt.construction == "tristar-s") {
        sgc::Graph g = need_graph();
        TargetTree t = need_target();
        if (t.spec.shape != sgc::TreeShape::Tristar)
            throw std::invalid_argument("tristar-s construction needs a T<x>,<y>,<z> target");
        inst = sgc::star_to_tristar_instance(g, t.spec.a, t.spec.b, t.spec.c);
    } else if (opt.construction == "p6") {
        inst = sgc::build_p6_instance(need_cnf());
    } else if (opt.construction == "c124") {
        inst = sgc::build_c124_instance(as_ge2(need_cnf()));
    } else {
        throw std::invalid_argument("unknown construction '" + opt.construction + "'");
    }

    sgc::write_graph_file(opt.out_graph, inst.graph);
    std::ofstream roles(opt.out_roles);
    if (!roles) throw std::invalid_argument("cannot open " + opt.out_roles);
    sgc::write_roles(roles, inst);
    std::cout << inst.construction << ": " << inst.graph.vertex_count() << " vertices, "
              << inst.graph.edges().size() << " edges -> " << opt.out_graph << ", "
              << opt.out_roles << "\n";
    return kExitYes;
}

struct SolveOptions {
    std::string method;
    std::string graph_path;
    std::string forbidden;
    std::uint64_t budget = sgc::kDefaultSolveBudget;
    bool restricted = false;
    std::string out_path;
};

int run_solve(const SolveOptions& opt) {
    sgc::Graph g = load_graph(opt.graph_path);
    sgc::Graph pattern = resolve_pattern(opt.forbidden);

    sgc::SolveOutcome outcome{sgc::SolveVerdict::No, std::nullopt};
    try {
        if (opt.method == "brute") {
            if (auto s = sgc::brute_force_solve(g, pattern, opt.budget))
                outcome = {sgc::SolveVerdict::Yes, std::move(s)};
        } else {
            if (!sgc::is_isomorphic(pattern, sgc::paw_graph()))
                throw std::invalid_argument("--method paw needs --forbidden paw");
            auto mode = opt.restricted ? sgc::PartitionMode::RestrictedPolynomial
                                       : sgc::PartitionMode::Exhaustive;
            if (auto s = sgc::paw_solve(g, {}, mode))
                outcome = {sgc::SolveVerdict::Yes, std::move(s)};
        }
    } catch (const sgc::BudgetError&) {
        outcome.verdict = sgc::SolveVerdict::Budget;
    }

    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) throw std::invalid_argument("cannot open " + opt.out_path);
        sgc::write_solve_outcome(out, outcome);
    }
    switch (outcome.verdict) {
        case sgc::SolveVerdict::Yes:
            std::cout << "yes, S = " << witness_text(outcome.solution->members) << "\n";
            return kExitYes;
        case sgc::SolveVerdict::No:
            std::cout << "no\n";
            return kExitNo;
        case sgc::SolveVerdict::Budget:
            std::cout << "budget\n";
            return kExitError;
    }
    return kExitError;
}

int run_classify(const std::string& tree_spec, bool full) {
    sgc::Graph t = sgc::build_tree(sgc::parse_tree_spec(tree_spec));
    sgc::HardnessCertificate cert = sgc::hardness_verdict(t);
    std::cout << sgc::certificate_summary(cert) << "\n";
    if (full) sgc::write_certificate(std::cout, cert);
    return kExitYes;
}

int run_check(const std::string& graph_path, const std::string& pattern_text) {
    sgc::Graph g = load_graph(graph_path);
    sgc::Graph pattern = resolve_pattern(pattern_text);
    if (auto copy = sgc::contains_induced(g, pattern)) {
        std::cout << "copy:";
        for (int v : *copy) std::cout << ' ' << v;
        std::cout << "\n";
        return kExitNo;
    }
    std::cout << "free\n";
    return kExitYes;
}

int run_verify(const std::string& suite, std::uint64_t seed, int jobs) {
    sgc::SuiteReport rep = sgc::run_verify_suite(suite, seed, jobs);
    if (rep.pass)
        std::cout << rep.name << ": " << rep.detail << "\n";
    else
        std::cout << rep.name << ": FAIL - " << rep.detail << "\n";
    return rep.pass ? kExitYes : kExitNo;
}

// The library routine covers the prime root case; the degenerate roots are
// the components of g (parallel) or of its complement (series).
sgc::ModulePartition root_modules(const sgc::Graph& g) {
    auto from_components = [&](const sgc::Graph& split) {
        std::vector<sgc::VertexSet> parts;
        for (auto& comp : sgc::connected_components(split)) parts.emplace_back(std::move(comp));
        return sgc::ModulePartition{g, std::move(parts)};
    };
    if (!sgc::is_connected(g)) return from_components(g);
    sgc::Graph co = sgc::complement(g);
    if (!sgc::is_connected(co)) return from_components(co);
    return sgc::maximal_strong_modules(g);
}

int run_modules(const std::string& graph_path) {
    sgc::Graph g = load_graph(graph_path);
    sgc::ModulePartition p = root_modules(g);
    sgc::write_module_partition(std::cout, p);
    std::cout << "quotient:\n";
    sgc::write_graph(std::cout, sgc::quotient_graph_of(p));
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgraph complementation toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int jobs = 1;
    bool deterministic = false;
    app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for the exhaustive sweeps")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_flag("--deterministic", deterministic,
                 "pin the default seed (rejects an explicit --seed)");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "compile a hardness construction");
    gen->fallthrough();
    gen->add_option("--construction", gen_opt.construction, "which construction to compile")
        ->required()
        ->check(CLI::IsMember({"blowup", "5conn", "leafattach", "treeksat", "bistar",
                               "tristar-b", "tristar-s", "p6", "c124"}));
    gen->add_option("--cnf", gen_opt.cnf_path, "DIMACS CNF input");
    gen->add_option("--graph", gen_opt.graph_path, "source graph input");
    gen->add_option("--tree", gen_opt.tree_spec, "target tree spec (P6, K1,5, T2,5, C1,2,4, @file)");
    gen->add_option("--target", gen_opt.target_file, "target tree as a graph file");
    gen->add_option("--r", gen_opt.r, "blowup multiplicity")->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--out-graph", gen_opt.out_graph, "output graph file")->capture_default_str();
    gen->add_option("--out-roles", gen_opt.out_roles, "output roles file")->capture_default_str();

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "decide subgraph complementation to H-free");
    solve->fallthrough();
    solve->add_option("--method", solve_opt.method, "search procedure")
        ->required()
        ->check(CLI::IsMember({"brute", "paw"}));
    solve->add_option("--graph", solve_opt.graph_path, "input graph file")->required();
    solve->add_option("--forbidden", solve_opt.forbidden,
                      "forbidden pattern: paw, a tree spec, or @file")
        ->required();
    solve->add_option("--budget", solve_opt.budget, "subset budget for exhaustive search")
        ->capture_default_str();
    solve->add_flag("--restricted", solve_opt.restricted,
                    "use only the restricted split partitions in the paw procedure");
    solve->add_option("--out", solve_opt.out_path, "also write the verdict/witness file");

    std::string classify_tree;
    bool classify_full = false;
    CLI::App* classify = app.add_subcommand("classify", "hardness verdict for a tree");
    classify->fallthrough();
    classify->add_option("--tree", classify_tree, "tree spec")->required();
    classify->add_flag("--full", classify_full, "also print the certificate chain");

    std::string check_graph, check_pattern;
    CLI::App* check = app.add_subcommand("check", "search for an induced pattern copy");
    check->fallthrough();
    check->add_option("--graph", check_graph, "input graph file")->required();
    check->add_option("--pattern", check_pattern, "pattern: paw, a tree spec, or @file")
        ->required();

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a differential verification suite");
    verify->fallthrough();
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"catalog", "paw-diff", "dup-equiv", "forward"}));

    std::string modules_graph;
    CLI::App* modules = app.add_subcommand("modules", "maximal strong modules and quotient");
    modules->fallthrough();
    modules->add_option("--graph", modules_graph, "input graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (deterministic) {
            if (app.count("--seed") > 0 && seed != 1)
                throw std::invalid_argument("--deterministic conflicts with a custom --seed");
            seed = 1;
        }
        if (gen->parsed()) return run_gen(gen_opt);
        if (solve->parsed()) return run_solve(solve_opt);
        if (classify->parsed()) return run_classify(classify_tree, classify_full);
        if (check->parsed()) return run_check(check_graph, check_pattern);
        if (verify->parsed()) return run_verify(suite, seed, jobs);
        if (modules->parsed()) return run_modules(modules_graph);
    } catch (const sgc::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
