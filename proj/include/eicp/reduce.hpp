#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "eicp/bounds.hpp"
#include "eicp/clique.hpp"
#include "eicp/graph.hpp"

namespace eicp {

/// Deduplicated collection of cliques (size >= 2), in insertion order.
class CliquePool {
public:
    /// Sorts, drops sets smaller than 2 or already present. Returns whether
    /// the clique was added.
    bool insert(std::vector<int> c) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.size() < 2) return false;
        if (!index_.insert(c).second) return false;
        cliques_.push_back(std::move(c));
        return true;
    }

    const std::vector<std::vector<int>>& cliques() const { return cliques_; }
    size_t size() const { return cliques_.size(); }
    bool empty() const { return cliques_.empty(); }

private:
    std::vector<std::vector<int>> cliques_;
    std::set<std::vector<int>> index_;
};

struct StageCounters {
    int64_t peel_vertices = 0;
    int64_t peel_edges = 0;
    int64_t color_vertices = 0;
    int64_t color_edges = 0;
    int64_t exact_edges = 0;
};

struct ReductionReport {
    Graph reduced_graph;
    CliquePool pool;              // vertex ids of reduced_graph
    std::vector<int> to_original; // reduced id -> input id
    int64_t removed_vertices = 0;
    int64_t removed_edges = 0;
    int lb_used = 0;
    StageCounters stage_counters;
};

struct PreprocessOptions {
    /// Branch-expansion budget for each per-edge exact clique computation.
    uint64_t edge_node_budget = 100000;
};

namespace detail {

/// Mutable adjacency scratch used only inside the reduction passes.
struct WorkGraph {
    explicit WorkGraph(const Graph& g)
        : n(g.num_vertices()), m(g.num_edges()), adj(size_t(n)), alive(size_t(n), 1) {
        for (int v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            adj[size_t(v)] = std::set<int>(nb.begin(), nb.end());
        }
    }

    int degree(int v) const { return int(adj[size_t(v)].size()); }

    void remove_vertex(int u) {
        for (int w : adj[size_t(u)]) adj[size_t(w)].erase(u);
        m -= int64_t(adj[size_t(u)].size());
        adj[size_t(u)].clear();
        alive[size_t(u)] = 0;
    }

    void remove_edge(int u, int v) {
        adj[size_t(u)].erase(v);
        adj[size_t(v)].erase(u);
        --m;
    }

    bool has_edge(int u, int v) const { return adj[size_t(u)].count(v) > 0; }

    /// |N(u) ∩ N(v)|, stopping once the count exceeds `enough`.
    int common_count_capped(int u, int v, int enough) const {
        const auto& a = adj[size_t(u)];
        const auto& b = adj[size_t(v)];
        const auto& small = a.size() <= b.size() ? a : b;
        const auto& big = a.size() <= b.size() ? b : a;
        int c = 0;
        for (int w : small) {
            if (big.count(w) && ++c > enough) return c;
        }
        return c;
    }

    std::vector<int> common(int u, int v) const {
        const auto& a = adj[size_t(u)];
        const auto& b = adj[size_t(v)];
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    std::vector<std::pair<int, int>> edge_snapshot() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(size_t(m));
        for (int u = 0; u < n; ++u)
            for (int w : adj[size_t(u)])
                if (u < w) es.emplace_back(u, w);
        return es;
    }

    /// Induced subgraph on members (work ids); back_map gives local -> work.
    Graph induced(const std::vector<int>& members, std::vector<int>* back_map) const {
        std::vector<int> keep = members;
        std::sort(keep.begin(), keep.end());
        std::vector<int> pos(size_t(n), -1);
        for (size_t i = 0; i < keep.size(); ++i) pos[size_t(keep[i])] = int(i);
        std::vector<Edge> edges;
        for (size_t i = 0; i < keep.size(); ++i)
            for (int w : adj[size_t(keep[i])])
                if (pos[size_t(w)] > int(i)) edges.push_back(Edge(int(i), pos[size_t(w)]));
        if (back_map) *back_map = keep;
        return Graph::from_edges(int(keep.size()), edges);
    }

    Graph materialize(const Graph& original, std::vector<int>* new_to_old) const {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (alive[size_t(v)]) keep.push_back(v);
        std::vector<int> pos(size_t(n), -1);
        for (size_t i = 0; i < keep.size(); ++i) pos[size_t(keep[i])] = int(i);
        std::vector<Edge> edges;
        std::vector<int64_t> labels(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) {
            labels[i] = original.label(keep[i]);
            for (int w : adj[size_t(keep[i])])
                if (pos[size_t(w)] > int(i)) edges.push_back(Edge(int(i), pos[size_t(w)]));
        }
        if (new_to_old) *new_to_old = keep;
        return Graph::from_edges(int(keep.size()), edges, std::move(labels));
    }

    int n;
    int64_t m;
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
};

/// Degree/common-neighbor peeling to a fixpoint. Thresholds below zero (and
/// the degree-0 case at lb = 2) are treated as vacuous, so graphs are only
/// touched for lb >= 3.
inline void peel_pass(WorkGraph& w, int lb, StageCounters& counters) {
    if (lb < 3) return;
    const int deg_thresh = lb - 2;
    const int common_thresh = lb - 3;
    std::deque<int> queue;
    std::vector<char> queued(size_t(w.n), 0);
    auto enqueue = [&](int v) {
        if (w.alive[size_t(v)] && !queued[size_t(v)]) {
            queued[size_t(v)] = 1;
            queue.push_back(v);
        }
    };
    for (int v = 0; v < w.n; ++v) enqueue(v);
    bool changed = true;
    while (changed) {
        changed = false;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            queued[size_t(v)] = 0;
            if (!w.alive[size_t(v)] || w.degree(v) > deg_thresh) continue;
            std::vector<int> nbs(w.adj[size_t(v)].begin(), w.adj[size_t(v)].end());
            w.remove_vertex(v);
            ++counters.peel_vertices;
            changed = true;
            for (int u : nbs) enqueue(u);
        }
        for (auto [u, v] : w.edge_snapshot()) {
            if (!w.has_edge(u, v)) continue;
            if (w.common_count_capped(u, v, common_thresh) <= common_thresh) {
                w.remove_edge(u, v);
                ++counters.peel_edges;
                changed = true;
                enqueue(u);
                enqueue(v);
            }
        }
    }
}

inline void color_pass(WorkGraph& w, int lb, StageCounters& counters) {
    if (lb >= 3) {
        for (int u = 0; u < w.n; ++u) {
            if (!w.alive[size_t(u)]) continue;
            std::vector<int> nbs(w.adj[size_t(u)].begin(), w.adj[size_t(u)].end());
            Graph sub = w.induced(nbs, nullptr);
            if (greedy_color_bound(sub) <= lb - 2) {
                w.remove_vertex(u);
                ++counters.color_vertices;
            }
        }
    }
    if (lb >= 4) {
        for (auto [u, v] : w.edge_snapshot()) {
            if (!w.has_edge(u, v)) continue;
            Graph sub = w.induced(w.common(u, v), nullptr);
            if (greedy_color_bound(sub) <= lb - 3) {
                w.remove_edge(u, v);
                ++counters.color_edges;
            }
        }
    }
}

/// Budgeted exact clique check on every edge's common neighborhood. Proven
/// small neighborhoods delete the edge; everything else contributes a pool
/// clique (the incumbent when the budget ran out).
inline void exact_pass(WorkGraph& w, int lb, uint64_t node_budget,
                       std::vector<std::vector<int>>& pool_raw, StageCounters& counters) {
    for (auto [u, v] : w.edge_snapshot()) {
        if (!w.has_edge(u, v)) continue;
        std::vector<int> back;
        Graph sub = w.induced(w.common(u, v), &back);
        MaxCliqueOptions opt;
        opt.node_budget = node_budget;
        opt.lower_bound_hint = std::max(0, lb - 3);
        CliqueResult res = max_clique(sub, opt);
        if (!res.timed_out && res.size <= lb - 3) {
            w.remove_edge(u, v);
            ++counters.exact_edges;
        } else {
            std::vector<int> clique;
            clique.reserve(res.clique.size() + 2);
            for (int i : res.clique) clique.push_back(back[size_t(i)]);
            clique.push_back(u);
            clique.push_back(v);
            pool_raw.push_back(std::move(clique));
        }
    }
}

} // namespace detail

/// Degree peeling: recursively drop vertices of degree <= lb-2 and edges
/// whose endpoints share <= lb-3 neighbors.
inline Graph peel_degree(const Graph& g, int lb, std::vector<int>* new_to_old = nullptr) {
    if (lb < 1) throw ContractViolation("peel_degree: lb must be >= 1");
    detail::WorkGraph w(g);
    StageCounters c;
    detail::peel_pass(w, lb, c);
    return w.materialize(g, new_to_old);
}

/// Coloring-based reduction: a vertex goes when its neighborhood colors
/// with <= lb-2 colors, an edge when the common neighborhood colors with
/// <= lb-3. Greedy coloring upper-bounds the chromatic number, so both
/// tests certify the clique conditions of the underlying reduction rules.
inline Graph reduce_color(const Graph& g, int lb, std::vector<int>* new_to_old = nullptr) {
    if (lb < 1) throw ContractViolation("reduce_color: lb must be >= 1");
    detail::WorkGraph w(g);
    StageCounters c;
    detail::color_pass(w, lb, c);
    return w.materialize(g, new_to_old);
}

inline std::pair<Graph, CliquePool> reduce_exact_edges(const Graph& g, int lb,
                                                       uint64_t node_budget = 100000,
                                                       std::vector<int>* new_to_old = nullptr) {
    if (lb < 1) throw ContractViolation("reduce_exact_edges: lb must be >= 1");
    detail::WorkGraph w(g);
    StageCounters c;
    std::vector<std::vector<int>> raw;
    detail::exact_pass(w, lb, node_budget, raw, c);
    std::vector<int> keep;
    Graph reduced = w.materialize(g, &keep);
    std::vector<int> old_to_new(size_t(g.num_vertices()), -1);
    for (size_t i = 0; i < keep.size(); ++i) old_to_new[size_t(keep[i])] = int(i);
    CliquePool pool;
    for (auto& cl : raw) {
        std::vector<int> mapped;
        bool ok = true;
        for (int v : cl) {
            int nv = old_to_new[size_t(v)];
            if (nv < 0) {
                ok = false;
                break;
            }
            mapped.push_back(nv);
        }
        if (ok && is_clique(reduced, mapped)) pool.insert(std::move(mapped));
    }
    if (new_to_old) *new_to_old = keep;
    return {std::move(reduced), std::move(pool)};
}

/// Full preprocessing: lower-bound estimation, then peel -> coloring rules
/// -> exact edge rule, re-running the cheap peel after each stage. The
/// surviving pool members are re-validated against the final graph.
inline ReductionReport preprocess(const Graph& g, int64_t k, const PreprocessOptions& opts = {}) {
    if (k < 0) throw ContractViolation("preprocess: k must be >= 0");
    ReductionReport report;
    report.lb_used = estimate_lb(g, k);
    detail::WorkGraph w(g);
    const int64_t m0 = g.num_edges();
    detail::peel_pass(w, report.lb_used, report.stage_counters);
    detail::color_pass(w, report.lb_used, report.stage_counters);
    detail::peel_pass(w, report.lb_used, report.stage_counters);
    std::vector<std::vector<int>> raw;
    detail::exact_pass(w, report.lb_used, opts.edge_node_budget, raw, report.stage_counters);
    detail::peel_pass(w, report.lb_used, report.stage_counters);

    report.reduced_graph = w.materialize(g, &report.to_original);
    std::vector<int> old_to_new(size_t(g.num_vertices()), -1);
    for (size_t i = 0; i < report.to_original.size(); ++i)
        old_to_new[size_t(report.to_original[i])] = int(i);
    for (auto& cl : raw) {
        std::vector<int> mapped;
        bool ok = true;
        for (int v : cl) {
            int nv = old_to_new[size_t(v)];
            if (nv < 0) {
                ok = false;
                break;
            }
            mapped.push_back(nv);
        }
        if (ok && is_clique(report.reduced_graph, mapped)) report.pool.insert(std::move(mapped));
    }
    report.removed_vertices = g.num_vertices() - report.reduced_graph.num_vertices();
    report.removed_edges = m0 - report.reduced_graph.num_edges();
    return report;
}

} // namespace eicp
