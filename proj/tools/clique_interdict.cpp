// clique-interdict: exact solver CLI for edge interdiction of the clique
// number. Subcommands: solve, ebcp, maxclique, reduce, bounds, verify, gen,
// bench.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "eicp/bounds.hpp"
#include "eicp/clique.hpp"
#include "eicp/gen.hpp"
#include "eicp/graph.hpp"
#include "eicp/oracle.hpp"
#include "eicp/reduce.hpp"
#include "eicp/report_json.hpp"
#include "eicp/rlcm.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;

double default_time_limit() {
    const char* env = std::getenv("CLIQUE_INTERDICT_TIME_LIMIT");
    if (!env) return 0.0;
    return std::atof(env);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

eicp::Graph load_graph(const std::string& path, const std::string& format, bool zero_indexed,
                       eicp::ParseStats* stats = nullptr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::string fmt = format;
    if (fmt == "auto") {
        fmt = (has_suffix(path, ".clq") || has_suffix(path, ".dimacs") || has_suffix(path, ".col"))
                  ? "dimacs"
                  : "edgelist";
    }
    if (fmt == "dimacs") return eicp::parse_dimacs(in, stats);
    return eicp::parse_edgelist(in, !zero_indexed, stats);
}

void print_solve_text(const eicp::SolveReport& r, const eicp::Graph& g, std::ostream& out) {
    out << "status   " << (r.status == eicp::SolveStatus::Solved ? "solved" : "timeout") << '\n';
    out << "eta      " << r.eta << "   (k=" << r.k << ", lb=" << r.lb << ", ub=" << r.ub << ")\n";
    out << "witness  " << r.witness.size() << " edges:";
    for (const eicp::Edge& e : r.witness) out << " (" << g.label(e.u) << ',' << g.label(e.v) << ')';
    out << '\n';
    out << "reduced  -" << r.reduction.vertices_removed << " vertices, -"
        << r.reduction.edges_removed << " edges, pool " << r.reduction.pool_size << '\n';
    out << "effort   " << r.total_nodes << " nodes, " << r.cuts << " cuts, " << r.wall_time_ms
        << " ms\n";
    for (const auto& it : r.iterations)
        out << "  p=" << it.p << " covers=" << it.model_covers << " orderings="
            << it.model_orderings << " cuts=" << it.cuts_added << " nodes=" << it.solver_nodes
            << " -> " << it.status << '\n';
}

struct CommonOpts {
    std::string graph_path;
    std::string format = "auto";
    bool zero_indexed = false;
    uint64_t seed = 1;
    std::string output = "json";
};

void add_graph_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--graph", o.graph_path, "input graph file")->required();
    cmd->add_option("--format", o.format, "graph format (default: by extension)")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
    cmd->add_flag("--zero-indexed", o.zero_indexed, "edge-list labels start at 0");
}

int run_solve(const CommonOpts& o, bool k_set, int64_t k_raw, bool frac_set, double k_frac,
              double time_limit, bool no_reduce, bool no_ub, bool no_perm_cuts) {
    if (k_set == frac_set) {
        std::cerr << "solve: exactly one of --k / --k-frac is required\n";
        return kExitError;
    }
    eicp::Graph g = load_graph(o.graph_path, o.format, o.zero_indexed);
    int64_t k = k_set ? k_raw : eicp::budget_from_fraction(k_frac, g.num_edges());
    if (k < 0) {
        std::cerr << "solve: k must be >= 0\n";
        return kExitError;
    }
    eicp::SolveOptions opts;
    opts.seed = o.seed;
    opts.time_limit_secs = time_limit;
    opts.disable_reduce = no_reduce;
    opts.disable_ub = no_ub;
    opts.disable_ordering_cuts = no_perm_cuts;
    eicp::SolveReport report = eicp::solve_eicp(g, k, opts);
    if (o.output == "json")
        std::cout << eicp::solve_report_json(report, g).dump() << '\n';
    else
        print_solve_text(report, g, std::cout);
    return report.status == eicp::SolveStatus::Solved ? kExitOk : kExitTimeout;
}

int run_ebcp(const CommonOpts& o, int p, bool cutoff_set, int64_t cutoff, double time_limit,
             bool no_perm_cuts) {
    eicp::Graph g = load_graph(o.graph_path, o.format, o.zero_indexed);
    eicp::EbcpOptions opts;
    opts.seed = o.seed;
    opts.time_limit_secs = time_limit;
    opts.disable_ordering_cuts = no_perm_cuts;
    if (cutoff_set) opts.cutoff = cutoff;
    eicp::EbcpResult res = eicp::solve_ebcp(g, p, opts);
    ordered_json j;
    j["p"] = p;
    j["gamma"] = res.exceeds || res.timed_out ? -1 : res.gamma;
    ordered_json blocked = ordered_json::array();
    for (const eicp::Edge& e : res.blocked) blocked.push_back({g.label(e.u), g.label(e.v)});
    j["blocked"] = blocked;
    j["status"] = res.timed_out ? "timeout" : (res.exceeds ? "exceeds" : "optimal");
    j["nodes"] = res.nodes;
    j["cuts"] = res.cuts;
    std::cout << j.dump() << '\n';
    return res.timed_out ? kExitTimeout : kExitOk;
}

int run_maxclique(const CommonOpts& o, uint64_t node_budget) {
    eicp::Graph g = load_graph(o.graph_path, o.format, o.zero_indexed);
    eicp::MaxCliqueOptions opts;
    if (node_budget > 0) opts.node_budget = node_budget;
    eicp::CliqueResult res = eicp::max_clique(g, opts);
    ordered_json j;
    j["omega"] = res.size;
    ordered_json clique = ordered_json::array();
    for (int v : res.clique) clique.push_back(g.label(v));
    j["clique"] = clique;
    j["nodes"] = res.search_nodes;
    j["timed_out"] = res.timed_out;
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int run_reduce(const CommonOpts& o, int64_t k) {
    eicp::Graph g = load_graph(o.graph_path, o.format, o.zero_indexed);
    eicp::ReductionReport rep = eicp::preprocess(g, k);
    ordered_json j;
    j["n_before"] = g.num_vertices();
    j["m_before"] = g.num_edges();
    j["n_after"] = rep.reduced_graph.num_vertices();
    j["m_after"] = rep.reduced_graph.num_edges();
    j["lb"] = rep.lb_used;
    j["pool_size"] = rep.pool.size();
    j["stage_counters"] = {{"peel_vertices", rep.stage_counters.peel_vertices},
                           {"peel_edges", rep.stage_counters.peel_edges},
                           {"color_vertices", rep.stage_counters.color_vertices},
                           {"color_edges", rep.stage_counters.color_edges},
                           {"exact_edges", rep.stage_counters.exact_edges}};
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int run_bounds(const CommonOpts& o, int64_t k) {
    eicp::Graph g = load_graph(o.graph_path, o.format, o.zero_indexed);
    int lb = eicp::estimate_lb(g, k);
    auto [ub, trace] = eicp::estimate_ub(g, k, o.seed);
    ordered_json j;
    j["lb"] = lb;
    j["ub"] = ub;
    j["witness_size"] = trace.removed.size();
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int run_verify(const CommonOpts& o, int64_t k, int claimed_eta, const std::string& witness_path) {
    eicp::Graph g = load_graph(o.graph_path, o.format, o.zero_indexed);
    std::ifstream in(witness_path);
    if (!in) throw std::runtime_error("cannot open witness file: " + witness_path);
    std::unordered_map<int64_t, int> id_of;
    for (int v = 0; v < g.num_vertices(); ++v) id_of[g.label(v)] = v;
    eicp::EdgeSet witness;
    std::string reason;
    std::string line;
    int64_t line_no = 0;
    bool wellformed = true;
    while (std::getline(in, line) && wellformed) {
        ++line_no;
        std::istringstream ls(line);
        int64_t a, b;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> b)) {
            reason = "line " + std::to_string(line_no) + ": expected two labels";
            wellformed = false;
            break;
        }
        auto ia = id_of.find(a), ib = id_of.find(b);
        if (ia == id_of.end() || ib == id_of.end() || !g.has_edge(ia->second, ib->second)) {
            reason = "line " + std::to_string(line_no) + ": not an edge of the graph";
            wellformed = false;
            break;
        }
        witness.insert(eicp::Edge(ia->second, ib->second));
    }
    bool valid = wellformed;
    int residual_omega = -1;
    if (valid && int64_t(witness.size()) > k) {
        valid = false;
        reason = "witness has " + std::to_string(witness.size()) + " edges, budget is " +
                 std::to_string(k);
    }
    if (valid) {
        residual_omega = eicp::max_clique(eicp::remove_edges(g, witness)).size;
        if (residual_omega != claimed_eta) {
            valid = false;
            reason = "residual clique number is " + std::to_string(residual_omega);
        }
    }
    ordered_json j;
    j["valid"] = valid;
    j["witness_size"] = witness.size();
    j["k"] = k;
    j["claimed_eta"] = claimed_eta;
    j["residual_omega"] = residual_omega;
    if (!valid) j["reason"] = reason;
    std::cout << j.dump() << '\n';
    return valid ? kExitOk : kExitError;
}

int run_gen(int n, double density, uint64_t seed, const std::string& out_path) {
    eicp::Graph g = eicp::erdos_renyi(n, density, seed);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    eicp::write_dimacs(g, out);
    ordered_json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["path"] = out_path;
    std::cout << j.dump() << '\n';
    return kExitOk;
}

struct BenchTask {
    std::string graph;
    bool has_k = false;
    int64_t k = 0;
    double c = 0.0;
};

int run_bench(const std::string& manifest_path, const std::string& out_path, int workers_cli) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    nlohmann::json manifest = nlohmann::json::parse(in);
    const double time_limit = manifest.value("time_limit_secs", default_time_limit());
    const uint64_t seed = manifest.value("seed", uint64_t{1});
    int workers = workers_cli > 0 ? workers_cli : manifest.value("workers", 1);
    std::vector<BenchTask> tasks;
    for (const auto& run : manifest.value("runs", nlohmann::json::array())) {
        BenchTask t;
        t.graph = run.at("graph").get<std::string>();
        if (run.contains("k")) {
            t.has_k = true;
            t.k = run["k"].get<int64_t>();
        } else {
            t.c = run.at("c").get<double>();
        }
        tasks.push_back(std::move(t));
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << "instance,n,m,k,eta,status,time_ms,lb,ub,vertices_removed_pct,edges_removed_pct,"
           "nodes,cuts\n";
    out.flush();
    std::mutex csv_mutex;
    std::atomic<size_t> next{0};
    auto emit = [&](const std::string& row) {
        std::lock_guard<std::mutex> lock(csv_mutex);
        out << row << '\n';
        out.flush();
    };
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const BenchTask& t = tasks[i];
            std::ostringstream row;
            try {
                eicp::Graph g = load_graph(t.graph, "auto", false);
                int64_t k = t.has_k ? t.k : eicp::budget_from_fraction(t.c, g.num_edges());
                eicp::SolveOptions opts;
                opts.seed = seed;
                opts.time_limit_secs = time_limit;
                eicp::SolveReport r = eicp::solve_eicp(g, k, opts);
                const bool solved = r.status == eicp::SolveStatus::Solved;
                double vpct = g.num_vertices()
                                  ? 100.0 * double(r.reduction.vertices_removed) / g.num_vertices()
                                  : 0.0;
                double epct = g.num_edges()
                                  ? 100.0 * double(r.reduction.edges_removed) / double(g.num_edges())
                                  : 0.0;
                int64_t time_ms = solved ? r.wall_time_ms : int64_t(time_limit * 1000);
                char pct[64];
                std::snprintf(pct, sizeof pct, "%.2f,%.2f", vpct, epct);
                row << t.graph << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << k
                    << ',' << (solved ? std::to_string(r.eta) : std::string("-")) << ','
                    << (solved ? "solved" : "timeout") << ',' << time_ms << ',' << r.lb << ','
                    << r.ub << ',' << pct << ',' << r.total_nodes << ',' << r.cuts;
            } catch (const std::exception& e) {
                row.str("");
                row << t.graph << ",0,0,0,-,error,0,0,0,0.00,0.00,0,0";
                std::lock_guard<std::mutex> lock(csv_mutex);
                std::cerr << "bench: " << t.graph << ": " << e.what() << '\n';
            }
            emit(row.str());
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < std::max(1, workers); ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge interdiction of the maximum clique number"};
    app.require_subcommand(1);

    CommonOpts solve_o, ebcp_o, mc_o, red_o, bnd_o, ver_o;

    auto* solve_cmd = app.add_subcommand("solve", "compute eta(G,k) with a witness");
    add_graph_options(solve_cmd, solve_o);
    int64_t k_raw = 0;
    double k_frac = 0.0;
    auto* k_opt = solve_cmd->add_option("--k", k_raw, "interdiction budget");
    auto* frac_opt =
        solve_cmd->add_option("--k-frac", k_frac, "budget as fraction of |E| (k = ceil(c*m))");
    k_opt->excludes(frac_opt);
    double solve_tl = default_time_limit();
    solve_cmd->add_option("--time-limit", solve_tl, "time limit in seconds (0 = none)");
    solve_cmd->add_option("--seed", solve_o.seed, "random seed");
    solve_cmd->add_option("--output", solve_o.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    bool no_reduce = false, no_ub = false, no_perm_cuts = false;
    solve_cmd->add_flag("--no-reduce", no_reduce, "disable graph reduction");
    solve_cmd->add_flag("--no-ub", no_ub, "disable the upper-bound heuristic");
    solve_cmd->add_flag("--no-perm-cuts", no_perm_cuts, "disable ordering (permutation) cuts");

    auto* ebcp_cmd = app.add_subcommand("ebcp", "compute gamma(G,p), the minimum blocking set");
    add_graph_options(ebcp_cmd, ebcp_o);
    int ebcp_p = 1;
    ebcp_cmd->add_option("--p", ebcp_p, "clique-number threshold")->required();
    int64_t ebcp_cutoff = 0;
    auto* cutoff_opt = ebcp_cmd->add_option("--cutoff", ebcp_cutoff,
                                            "stop once the optimum provably exceeds this");
    double ebcp_tl = default_time_limit();
    ebcp_cmd->add_option("--time-limit", ebcp_tl, "time limit in seconds (0 = none)");
    ebcp_cmd->add_option("--seed", ebcp_o.seed, "random seed");
    bool ebcp_no_perm = false;
    ebcp_cmd->add_flag("--no-perm-cuts", ebcp_no_perm, "disable ordering (permutation) cuts");

    auto* mc_cmd = app.add_subcommand("maxclique", "exact maximum clique");
    add_graph_options(mc_cmd, mc_o);
    uint64_t node_budget = 0;
    mc_cmd->add_option("--node-budget", node_budget, "search-node budget (0 = unlimited)");

    auto* red_cmd = app.add_subcommand("reduce", "preprocessing report");
    add_graph_options(red_cmd, red_o);
    int64_t red_k = 0;
    red_cmd->add_option("--k", red_k, "interdiction budget")->required();

    auto* bnd_cmd = app.add_subcommand("bounds", "lower/upper bound estimates");
    add_graph_options(bnd_cmd, bnd_o);
    int64_t bnd_k = 0;
    bnd_cmd->add_option("--k", bnd_k, "interdiction budget")->required();
    bnd_cmd->add_option("--seed", bnd_o.seed, "random seed");

    auto* ver_cmd = app.add_subcommand("verify", "check a claimed solution");
    add_graph_options(ver_cmd, ver_o);
    int64_t ver_k = 0;
    int ver_eta = 0;
    std::string ver_witness;
    ver_cmd->add_option("--k", ver_k, "interdiction budget")->required();
    ver_cmd->add_option("--claimed-eta", ver_eta, "claimed residual clique number")->required();
    ver_cmd->add_option("--witness", ver_witness, "file of blocked edges (two labels per line)")
        ->required();

    auto* gen_cmd = app.add_subcommand("gen", "write a random G(n,rho) graph as DIMACS");
    int gen_n = 0;
    double gen_density = 0.0;
    uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--density", gen_density, "independent edge probability")->required();
    gen_cmd->add_option("--seed", gen_seed, "random seed");
    gen_cmd->add_option("--out", gen_out, "output path")->required();

    auto* bench_cmd = app.add_subcommand("bench", "run a manifest of instances, stream CSV rows");
    std::string bench_manifest, bench_out;
    int bench_workers = 0;
    bench_cmd->add_option("--manifest", bench_manifest, "JSON manifest")->required();
    bench_cmd->add_option("--out", bench_out, "output CSV path")->required();
    bench_cmd->add_option("--workers", bench_workers, "parallel instances (default: manifest)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the error message
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(solve_o, k_opt->count() > 0, k_raw, frac_opt->count() > 0, k_frac,
                             solve_tl, no_reduce, no_ub, no_perm_cuts);
        if (ebcp_cmd->parsed())
            return run_ebcp(ebcp_o, ebcp_p, cutoff_opt->count() > 0, ebcp_cutoff, ebcp_tl,
                            ebcp_no_perm);
        if (mc_cmd->parsed()) return run_maxclique(mc_o, node_budget);
        if (red_cmd->parsed()) return run_reduce(red_o, red_k);
        if (bnd_cmd->parsed()) return run_bounds(bnd_o, bnd_k);
        if (ver_cmd->parsed()) return run_verify(ver_o, ver_k, ver_eta, ver_witness);
        if (gen_cmd->parsed()) return run_gen(gen_n, gen_density, gen_seed, gen_out);
        if (bench_cmd->parsed()) return run_bench(bench_manifest, bench_out, bench_workers);
    } catch (const eicp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
