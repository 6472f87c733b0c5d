#include "cyclocover/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cyclocover/bounds.hpp"
#include "cyclocover/geodesy.hpp"
#include "cyclocover/good_edges.hpp"
#include "cyclocover/instances.hpp"
#include "cyclocover/metric_dim.hpp"
#include "cyclocover/oracle.hpp"
#include "cyclocover/path_cover.hpp"
#include "cyclocover/structure.hpp"

namespace cyclocover {

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::LimitExceeded: return 3;
    case ErrorCode::InternalInvariantViolation: return 1;
    default: return 2;
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedLine, "cannot open graph file: " + path);
    return parse_graph(in);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedLine, "cannot open solution file: " + path);
    return json::parse(in);
}

SolutionSet construct_for(Problem p, const Graph& g, std::optional<int> root) {
    switch (p) {
    case Problem::dim: return resolving_construct(g, root);
    case Problem::edim: return edge_resolving_construct(g, root);
    case Problem::mdim: return mixed_resolving_construct(g, root);
    case Problem::doubly: return doubly_resolving_construct(g, root);
    case Problem::geodetic: return geodetic_construct(g, root);
    case Problem::meg: return meg_construct(g, root);
    case Problem::dem: return dem_construct(g, root);
    }
    throw Error(ErrorCode::UnknownProblemTag, "bad problem enum");
}

void print_json(std::ostream& out, const json& j, bool compact) {
    if (compact)
        out << j.dump() << '\n';
    else
        out << j.dump(2) << '\n';
}

int cmd_solve(const std::string& problem, const std::string& method,
              const std::string& graph_file, std::optional<int> root, bool compact,
              std::ostream& out) {
    Graph g = load_graph(graph_file);
    if (problem == "ipec" || problem == "ipp") {
        PathMode mode = problem == "ipec" ? PathMode::edge_cover : PathMode::vertex_partition;
        Method m = method_from_string(method);
        if (m == Method::xp)
            throw Error(ErrorCode::UnknownProblemTag,
                        "no xp solver for path problems");
        if (root)
            throw Error(ErrorCode::InvalidSpec, "--root does not apply to path problems");
        PathSystem ps = m == Method::construct ? (mode == PathMode::edge_cover
                                                      ? ipec_construct(g)
                                                      : ipp_construct(g))
                                               : brute_force_min_path_system(mode, g);
        print_json(out, ps.to_json(), compact);
        return 0;
    }
    Problem p = problem_from_string(problem);
    Method m = method_from_string(method);
    SolutionSet sol;
    switch (m) {
    case Method::construct: sol = construct_for(p, g, root); break;
    case Method::xp: sol = xp_solve(p, g); break;
    case Method::brute: sol = brute_force_min_set(p, g); break;
    }
    print_json(out, sol.to_json(), compact);
    return 0;
}

int cmd_verify(const std::string& problem, const std::string& graph_file,
               const std::string& solution_file, bool compact, std::ostream& out) {
    Graph g = load_graph(graph_file);
    json j = load_json(solution_file);
    VerificationReport report;
    if (problem == "ipec" || problem == "ipp") {
        PathSystem ps = PathSystem::from_json(j);
        PathMode want = problem == "ipec" ? PathMode::edge_cover : PathMode::vertex_partition;
        if (ps.mode != want)
            throw Error(ErrorCode::InvalidSpec, "solution mode does not match problem");
        report = verify_path_system(g, ps);
    } else {
        Problem p = problem_from_string(problem);
        SolutionSet sol = SolutionSet::from_json(j);
        report = verify_set(p, g, sol.vertices);
    }
    print_json(out, report.to_json(), compact);
    return report.valid ? 0 : 1;
}

int cmd_good_edges(const std::string& graph_file, std::optional<int> root, bool compact,
                   std::ostream& out) {
    Graph g = load_graph(graph_file);
    int r = root.value_or(0);
    if (r < 0 || r >= g.n_vertices())
        throw Error(ErrorCode::VertexOutOfRange, "root " + std::to_string(r));
    GoodEdgeSet ges = good_edge_set(g, r);
    json j;
    j["root"] = r;
    j["count"] = ges.edges.size();
    json arr = json::array();
    for (const auto& [u, v] : ges.edges) arr.push_back(json::array({u, v}));
    j["edges"] = arr;
    print_json(out, j, compact);
    return 0;
}

struct GenOptions {
    std::string family;
    int k = 0, n = 0, t = 0, c = 0;
    std::vector<int> cycles, paths, strands;
    std::uint64_t seed = 1;
    std::string out_file;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    FamilySpec spec;
    spec.family = family_from_string(opt.family);
    spec.seed = opt.seed;
    switch (spec.family) {
    case Family::bouquet:
        spec.parameters.push_back(static_cast<long long>(opt.cycles.size()));
        for (int x : opt.cycles) spec.parameters.push_back(x);
        spec.parameters.push_back(static_cast<long long>(opt.paths.size()));
        for (int x : opt.paths) spec.parameters.push_back(x);
        break;
    case Family::k2k_plus_edge: spec.parameters = {opt.k}; break;
    case Family::theta:
        if (opt.strands.size() != 3)
            throw Error(ErrorCode::InvalidSpec, "theta needs --strands a,b,c");
        spec.parameters = {opt.strands[0], opt.strands[1], opt.strands[2]};
        break;
    case Family::cycle:
    case Family::path: spec.parameters = {opt.n}; break;
    case Family::spider: spec.parameters = {opt.t}; break;
    case Family::random_cyclomatic: spec.parameters = {opt.n, opt.c}; break;
    }
    Graph g = gen_family(spec);

    std::ostringstream text;
    text << "# cyclocover gen family=" << opt.family;
    if (spec.family == Family::random_cyclomatic) text << " seed=" << opt.seed;
    text << '\n' << format_edge_list(g);
    if (opt.out_file.empty()) {
        out << text.str();
    } else {
        std::ofstream f(opt.out_file);
        if (!f) throw Error(ErrorCode::InvalidSpec, "cannot write " + opt.out_file);
        f << text.str();
    }
    return 0;
}

// Compact relabeling of an induced connected subgraph; only the bench uses
// it, to turn 2-cores into standalone min-degree-2 instances.
Graph compact_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> new_id(g.n_vertices(), -1);
    for (size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            edges.emplace_back(new_id[u], new_id[v]);
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

struct InstanceOutcome {
    json record;
    int violations = 0;
    int findings = 0;
};

InstanceOutcome run_instance(const std::string& kind, json seed_field, const Graph& g,
                             int exact_upto, std::map<std::string, double>& max_ratio) {
    InstanceOutcome outcome;
    StructureProfile prof = structure_profile(g);
    const bool verify_feasible = g.n_vertices() <= 500;
    const bool paths_feasible = g.n_vertices() <= 5000;
    const bool exact_here = g.n_vertices() <= exact_upto;

    json rec;
    rec["kind"] = kind;
    rec["seed"] = std::move(seed_field);
    rec["n"] = g.n_vertices();
    rec["m"] = g.n_edges();
    rec["c"] = prof.cyclomatic;
    rec["l"] = prof.leaf_count;
    rec["delta"] = prof.min_degree;

    std::vector<Problem> problems{Problem::dim,      Problem::edim, Problem::mdim,
                                  Problem::geodetic, Problem::meg,  Problem::dem};
    if (prof.min_degree >= 2) problems.push_back(Problem::doubly);

    json probs;
    for (Problem p : problems) {
        SolutionSet sol = construct_for(p, g, {});
        int formula = theorem_bound(p, g);
        bool bound_holds = sol.size() <= sol.claimed_bound && sol.claimed_bound == formula;
        json pj;
        pj["size"] = sol.size();
        pj["bound"] = formula;
        pj["bound_holds"] = bound_holds;
        if (!bound_holds) ++outcome.violations;
        if (formula > 0) {
            auto& best = max_ratio[to_string(p)];
            best = std::max(best, double(sol.size()) / formula);
        }
        if (verify_feasible) {
            bool ok = verify_set(p, g, sol.vertices).valid;
            pj["oracle_valid"] = ok;
            if (!ok) ++outcome.violations;
        } else {
            pj["oracle_valid"] = nullptr;
        }
        pj["exact"] = nullptr;
        pj["xp"] = nullptr;
        if (exact_here && p != Problem::doubly) {
            try {
                SolutionSet brute = brute_force_min_set(p, g);
                SolutionSet xp = xp_solve(p, g);
                pj["exact"] = brute.size();
                pj["xp"] = xp.size();
                if (p == Problem::dim || p == Problem::edim) {
                    if (!(brute.size() <= xp.size() && xp.size() <= sol.size()))
                        ++outcome.violations;
                    if (brute.size() < xp.size()) ++outcome.findings;
                } else if (xp.size() != brute.size()) {
                    ++outcome.violations;
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::LimitExceeded) throw;
            }
        }
        probs[to_string(p)] = pj;
    }
    rec["problems"] = probs;

    json paths = json::object();
    if (paths_feasible) {
        for (PathMode mode : {PathMode::edge_cover, PathMode::vertex_partition}) {
            PathSystem ps = mode == PathMode::edge_cover ? ipec_construct(g)
                                                         : ipp_construct(g);
            int formula = path_theorem_bound(mode, g);
            bool bound_holds = ps.count() <= formula && ps.claimed_bound == formula;
            json pj;
            pj["count"] = ps.count();
            pj["bound"] = formula;
            pj["bound_holds"] = bound_holds;
            if (!bound_holds) ++outcome.violations;
            if (verify_feasible) {
                bool ok = verify_path_system(g, ps).valid;
                pj["oracle_valid"] = ok;
                if (!ok) ++outcome.violations;
            } else {
                pj["oracle_valid"] = nullptr;
            }
            pj["exact"] = nullptr;
            if (exact_here) {
                try {
                    pj["exact"] = brute_force_min_path_system(mode, g).count();
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::LimitExceeded) throw;
                }
            }
            paths[mode == PathMode::edge_cover ? "ipec" : "ipp"] = pj;
        }
    }
    rec["paths"] = paths;
    outcome.record = std::move(rec);
    return outcome;
}

} // namespace

json run_bench(const BenchConfig& config) {
    json report;
    report["config"] = {{"trials", config.trials}, {"n", config.n_max},
                        {"cmax", config.c_max},   {"seed", config.seed},
                        {"families", config.families}, {"exact_upto", config.exact_upto}};
    json instances = json::array();
    int violations = 0, findings = 0;
    std::map<std::string, double> max_ratio;

    for (int t = 0; t < config.trials; ++t) {
        std::uint64_t ts = split_seed(config.seed, static_cast<std::uint64_t>(t));
        int span = std::max(1, config.n_max - 4);
        int n = 5 + static_cast<int>(split_seed(ts, 0) % static_cast<std::uint64_t>(span));
        n = std::min(n, config.n_max);
        long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
        int c = static_cast<int>(split_seed(ts, 1) %
                                 static_cast<std::uint64_t>(config.c_max + 1));
        c = static_cast<int>(std::min<long long>(c, max_extra));
        Graph g = gen_random_cyclomatic(n, c, split_seed(ts, 2));

        // every third trial runs on the 2-core for the min-degree-2 regime
        if (t % 3 == 2 && g.cyclomatic() > 0) {
            BaseDecomposition base = base_decomposition(g);
            if (static_cast<int>(base.base_vertices.size()) >= 3)
                g = compact_subgraph(g, base.base_vertices);
        }

        auto outcome = run_instance("random", json(ts), g, config.exact_upto, max_ratio);
        outcome.record["id"] = t;
        violations += outcome.violations;
        findings += outcome.findings;
        instances.push_back(std::move(outcome.record));
    }

    if (config.families) {
        std::vector<std::pair<std::string, Graph>> fixed;
        fixed.emplace_back("bouquet(1;5|1;2)", gen_bouquet({5}, {2}));
        fixed.emplace_back("bouquet(2;5,5|2;1,2)", gen_bouquet({5, 5}, {1, 2}));
        fixed.emplace_back("bouquet(2;5,5|3;1,1,1)", gen_bouquet({5, 5}, {1, 1, 1}));
        fixed.emplace_back("k2k(3)", gen_k2k_plus_edge(3));
        fixed.emplace_back("theta(2,2,2)", gen_family({Family::theta, {2, 2, 2}, {}}));
        fixed.emplace_back("cycle(6)", gen_family({Family::cycle, {6}, {}}));
        fixed.emplace_back("cycle(7)", gen_family({Family::cycle, {7}, {}}));
        fixed.emplace_back("path(8)", gen_family({Family::path, {8}, {}}));
        fixed.emplace_back("spider(4)", gen_family({Family::spider, {4}, {}}));
        int id = config.trials;
        for (auto& [name, fg] : fixed) {
            auto outcome = run_instance(name, json(nullptr), fg, config.exact_upto, max_ratio);
            outcome.record["id"] = id++;
            violations += outcome.violations;
            findings += outcome.findings;
            instances.push_back(std::move(outcome.record));
        }
    }

    report["instances"] = instances;
    json ratios;
    for (const auto& [name, ratio] : max_ratio) ratios[name] = ratio;
    report["summary"] = {{"count", instances.size()},
                         {"violations", violations},
                         {"findings", findings},
                         {"max_ratio", ratios}};
    return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"distance-based covering constructions, exact solvers and verifiers"};
    app.require_subcommand(1);
    bool compact = false;

    auto* solve = app.add_subcommand("solve", "construct or exactly solve one problem");
    std::string problem, method = "construct", graph_file;
    int root_flag = -1;
    solve->add_option("--problem", problem,
                      "dim|edim|mdim|doubly|geodetic|meg|dem|ipec|ipp")
        ->required();
    solve->add_option("--method", method, "construct|xp|brute");
    solve->add_option("--graph", graph_file, "edge-list file")->required();
    solve->add_option("--root", root_flag, "override the construction root");
    solve->add_flag("--json", compact, "compact single-line JSON");

    auto* verify = app.add_subcommand("verify", "check a solution file against a graph");
    std::string v_problem, v_graph, v_solution;
    verify->add_option("--problem", v_problem, "problem tag")->required();
    verify->add_option("--graph", v_graph, "edge-list file")->required();
    verify->add_option("--solution", v_solution, "solution JSON file")->required();
    verify->add_flag("--json", compact, "compact single-line JSON");

    auto* good = app.add_subcommand("good-edges", "emit a good edge set as JSON");
    std::string ge_graph;
    int ge_root = 0;
    good->add_option("--graph", ge_graph, "edge-list file")->required();
    good->add_option("--root", ge_root, "root vertex (default 0)");
    good->add_flag("--json", compact, "compact single-line JSON");

    auto* gen = app.add_subcommand("gen", "generate an instance as edge-list text");
    GenOptions gopt;
    gen->add_option("--family", gopt.family, "bouquet|k2k|theta|cycle|path|spider|random")
        ->required();
    gen->add_option("--k", gopt.k, "k for k2k");
    gen->add_option("--n", gopt.n, "n for cycle/path/random");
    gen->add_option("--t", gopt.t, "t for spider");
    gen->add_option("--c", gopt.c, "cyclomatic number for random");
    gen->add_option("--cycles", gopt.cycles, "bouquet cycle lengths")->delimiter(',');
    gen->add_option("--paths", gopt.paths, "bouquet path lengths")->delimiter(',');
    gen->add_option("--strands", gopt.strands, "theta strand lengths")->delimiter(',');
    gen->add_option("--seed", gopt.seed, "random seed");
    gen->add_option("--out", gopt.out_file, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "bound and validity sweep");
    BenchConfig bcfg;
    bench->add_option("--trials", bcfg.trials, "number of random instances");
    bench->add_option("--n", bcfg.n_max, "maximum vertex count");
    bench->add_option("--cmax", bcfg.c_max, "maximum cyclomatic number");
    bench->add_option("--seed", bcfg.seed, "master seed");
    bench->add_flag("--families", bcfg.families, "include the fixed tight families");
    bench->add_option("--exact-upto", bcfg.exact_upto,
                      "brute/xp cross-checks for n at most this");
    bench->add_flag("--json", compact, "full JSON report");

    std::vector<const char*> argv{"cyclocover"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed()) {
            std::optional<int> root;
            if (solve->count("--root")) root = root_flag;
            return cmd_solve(problem, method, graph_file, root, compact, out);
        }
        if (verify->parsed()) return cmd_verify(v_problem, v_graph, v_solution, compact, out);
        if (good->parsed()) return cmd_good_edges(ge_graph, ge_root, compact, out);
        if (gen->parsed()) return cmd_gen(gopt, out);
        if (bench->parsed()) {
            json report = run_bench(bcfg);
            int violations = report["summary"]["violations"].get<int>();
            if (compact) {
                out << report.dump() << '\n';
            } else {
                out << "instances=" << report["summary"]["count"]
                    << " violations=" << violations
                    << " findings=" << report["summary"]["findings"] << '\n';
            }
            return violations > 0 ? 1 : 0;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const json::exception& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace cyclocover
