#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eicp/block_solver.hpp"
#include "eicp/bounds.hpp"
#include "eicp/clique.hpp"
#include "eicp/graph.hpp"
#include "eicp/prng.hpp"
#include "eicp/reduce.hpp"

namespace eicp {

enum class SolveStatus { Solved, TimedOut };

struct SolveOptions {
    uint64_t seed = 1;
    double time_limit_secs = 0; // 0 means no limit
    bool disable_reduce = false;
    bool disable_ub = false;
    bool disable_ordering_cuts = false;
    PreprocessOptions preprocess;
};

struct ReductionSummary {
    int64_t vertices_removed = 0;
    int64_t edges_removed = 0;
    size_t pool_size = 0;
    StageCounters stage_counters;
};

struct IterationLog {
    int p = 0;
    int64_t model_vars = 0;
    int64_t model_covers = 0;
    int64_t model_orderings = 0;
    int64_t cuts_added = 0;
    uint64_t solver_nodes = 0;
    std::string status; // "feasible" / "exceeds" / "timeout"
};

struct SolveReport {
    SolveStatus status = SolveStatus::Solved;
    int eta = -1;       // -1 until solved
    EdgeSet witness;    // edges of the input graph; residual clique number = eta
    int lb = 0;
    int ub = 0;
    ReductionSummary reduction;
    std::vector<IterationLog> iterations;
    uint64_t total_nodes = 0;
    int64_t cuts = 0;
    int64_t wall_time_ms = 0;
    uint64_t seed = 0;
    int64_t k = 0;
};

namespace detail {

struct RoundResult {
    bool exceeds = false;
    bool timed_out = false;
    EdgeSet blocked;
    std::vector<int> residual_clique;
    uint64_t nodes = 0;
    int64_t cuts = 0;
    int64_t model_vars = 0;
    int64_t model_covers = 0;
    int64_t model_orderings = 0;
};

inline void add_ordering_pair(BlockModel& model, std::vector<int> clique, int p,
                              SplitMix64& rng) {
    std::sort(clique.begin(), clique.end());
    rng.shuffle(clique);
    model.add_ordering(clique, p);
    std::reverse(clique.begin(), clique.end());
    model.add_ordering(clique, p);
}

/// One fixed-p separation loop: solve the pool-relaxed model, cut with the
/// residual maximum clique, repeat. Ends with a proof that the optimum
/// exceeds the cutoff, or with a blocked set whose residual clique number
/// is at most p. In satisficing mode any budget-feasible blocked set is
/// accepted per iteration (the sweep only needs |F| <= k, not model
/// optimality); exact mode computes the true blocking optimum.
inline RoundResult run_separation_round(
    const Graph& g, int p, CliquePool& pool, std::optional<int64_t> cutoff, bool ordering_cuts,
    bool satisfice, SplitMix64& rng,
    std::optional<std::chrono::steady_clock::time_point> deadline, const EdgeSet* warm_start) {
    RoundResult out;
    BlockModel model(g);
    model.set_cutoff(cutoff);
    for (const auto& clique : pool.cliques()) {
        if (int(clique.size()) <= p) continue;
        model.add_cover(clique, p);
        if (ordering_cuts) add_ordering_pair(model, clique, p, rng);
    }
    EdgeSet warm_local;
    if (warm_start) warm_local = *warm_start;
    while (true) {
        if (deadline && std::chrono::steady_clock::now() >= *deadline) {
            out.timed_out = true;
            break;
        }
        BlockSolveParams params;
        params.deadline = deadline;
        params.warm_start = warm_local.empty() ? nullptr : &warm_local;
        params.stop_within_cutoff = satisfice;
        BlockSolution sol = solve(model, params);
        out.nodes += sol.nodes;
        if (sol.aborted) {
            out.timed_out = true;
            break;
        }
        if (sol.status == BlockStatus::Exceeds || sol.status == BlockStatus::Infeasible) {
            out.exceeds = true;
            break;
        }
        MaxCliqueOptions mco;
        mco.deadline = deadline;
        CliqueResult res = max_clique(remove_edges(g, sol.blocked), mco);
        if (res.timed_out) {
            out.timed_out = true;
            break;
        }
        pool.insert(res.clique);
        if (res.size <= p) {
            out.blocked = sol.blocked;
            out.residual_clique = res.clique;
            break;
        }
        model.add_cover(res.clique, p);
        if (ordering_cuts) add_ordering_pair(model, res.clique, p, rng);
        ++out.cuts;
        warm_local = sol.blocked;
    }
    out.model_vars = model.num_vars();
    out.model_covers = int64_t(model.num_covers());
    out.model_orderings = int64_t(model.num_orderings());
    return out;
}

inline EdgeSet map_edges_to_original(const EdgeSet& es, const std::vector<int>& to_original) {
    EdgeSet out;
    for (const Edge& e : es)
        out.insert(Edge(to_original[size_t(e.u)], to_original[size_t(e.v)]));
    return out;
}

} // namespace detail

/// Exact eta(G,k) with a witness interdiction set: preprocess, bound, then
/// sweep p downward from ub-1, at each p deciding whether gamma(G,p) <= k
/// by lazy clique separation; the first p where the blocking optimum
/// provably exceeds k yields eta = p + 1, and reaching lb - 1 yields lb.
inline SolveReport solve_eicp(const Graph& g, int64_t k, const SolveOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    if (k < 0) throw ContractViolation("solve_eicp: k must be >= 0");
    const auto start = clock::now();
    std::optional<clock::time_point> deadline;
    if (opts.time_limit_secs > 0)
        deadline = start + std::chrono::microseconds(int64_t(opts.time_limit_secs * 1e6));
    auto finish = [&](SolveReport& r) -> SolveReport& {
        r.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        return r;
    };

    SolveReport report;
    report.seed = opts.seed;
    report.k = k;
    if (g.num_vertices() == 0) {
        report.eta = 0;
        return finish(report);
    }

    ReductionReport red;
    if (opts.disable_reduce) {
        red.reduced_graph = g;
        red.to_original.resize(size_t(g.num_vertices()));
        for (int v = 0; v < g.num_vertices(); ++v) red.to_original[size_t(v)] = v;
        red.lb_used = estimate_lb(g, k);
    } else {
        red = preprocess(g, k, opts.preprocess);
    }
    const Graph& work = red.reduced_graph;
    const int lb = std::max(1, red.lb_used);
    report.lb = lb;
    report.reduction = {red.removed_vertices, red.removed_edges, red.pool.size(),
                        red.stage_counters};

    SplitMix64 rng(opts.seed);
    // Best certified solution so far: a blocked set of the working graph
    // whose residual clique number is known exactly.
    std::optional<std::pair<EdgeSet, int>> incumbent;
    int ub;
    if (opts.disable_ub) {
        MaxCliqueOptions mco;
        mco.deadline = deadline;
        CliqueResult c0 = max_clique(work, mco);
        if (c0.timed_out) {
            report.status = SolveStatus::TimedOut;
            report.ub = c0.size + 1;
            return finish(report);
        }
        ub = c0.size + 1; // sweep then starts at the plain clique number
    } else {
        auto [u, trace] = estimate_ub(work, k, rng.next());
        ub = u;
        incumbent = {trace.removed, trace.final_clique_size};
    }
    report.ub = ub;

    CliquePool pool = std::move(red.pool);
    int p = ub - 1;
    EdgeSet warm = incumbent ? incumbent->first : EdgeSet{};
    while (p >= lb) {
        detail::RoundResult round = detail::run_separation_round(
            work, p, pool, k, !opts.disable_ordering_cuts, /*satisfice=*/true, rng, deadline,
            warm.empty() ? nullptr : &warm);
        report.total_nodes += round.nodes;
        report.cuts += round.cuts;
        IterationLog log;
        log.p = p;
        log.model_vars = round.model_vars;
        log.model_covers = round.model_covers;
        log.model_orderings = round.model_orderings;
        log.cuts_added = round.cuts;
        log.solver_nodes = round.nodes;
        if (round.timed_out) {
            log.status = "timeout";
            report.iterations.push_back(log);
            report.status = SolveStatus::TimedOut;
            if (incumbent) {
                report.ub = std::min(report.ub, incumbent->second);
                report.witness = detail::map_edges_to_original(incumbent->first, red.to_original);
            }
            return finish(report);
        }
        if (round.exceeds) {
            log.status = "exceeds";
            report.iterations.push_back(log);
            report.eta = p + 1;
            break;
        }
        log.status = "feasible";
        report.iterations.push_back(log);
        incumbent = {round.blocked, int(round.residual_clique.size())};
        warm = round.blocked;
        p = int(round.residual_clique.size()) - 1;
    }
    if (report.eta < 0) report.eta = lb; // swept past lb - 1
    if (incumbent) {
        report.witness = detail::map_edges_to_original(incumbent->first, red.to_original);
    }
    report.status = SolveStatus::Solved;
    return finish(report);
}

struct EbcpOptions {
    uint64_t seed = 1;
    std::optional<int64_t> cutoff; // unset: compute the exact optimum
    bool disable_ordering_cuts = false;
    double time_limit_secs = 0;
};

struct EbcpResult {
    bool exceeds = false;   // optimum proven above the cutoff
    bool timed_out = false;
    int64_t gamma = 0;
    EdgeSet blocked;
    uint64_t nodes = 0;
    int64_t cuts = 0;
};

/// Exact gamma(G,p) via the same separation loop at a single fixed p.
inline EbcpResult solve_ebcp(const Graph& g, int p, const EbcpOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    if (p < 1) throw ContractViolation("solve_ebcp: p must be >= 1");
    std::optional<clock::time_point> deadline;
    if (opts.time_limit_secs > 0)
        deadline = clock::now() + std::chrono::microseconds(int64_t(opts.time_limit_secs * 1e6));
    SplitMix64 rng(opts.seed);
    CliquePool pool;
    detail::RoundResult round = detail::run_separation_round(
        g, p, pool, opts.cutoff, !opts.disable_ordering_cuts, /*satisfice=*/false, rng, deadline,
        nullptr);
    EbcpResult res;
    res.nodes = round.nodes;
    res.cuts = round.cuts;
    res.timed_out = round.timed_out;
    res.exceeds = round.exceeds;
    if (!round.timed_out && !round.exceeds) {
        res.gamma = int64_t(round.blocked.size());
        res.blocked = round.blocked;
    }
    return res;
}

} // namespace eicp
