#pragma once

#include <cstdint>
#include <vector>

#include "eicp/clique.hpp"
#include "eicp/graph.hpp"
#include "eicp/prng.hpp"
#include "eicp/turan.hpp"

namespace eicp {

/// Vertex-disjoint clique cover: every vertex lies in exactly one member.
struct DisjointCliqueCover {
    std::vector<std::vector<int>> cliques;
    int delta = 0;                // size of the largest member
    uint64_t adjacency_tests = 0; // (vertex, clique-member) adjacency probes
};

/// Greedy first-fit cover: vertices scanned 0..n-1, each joining the first
/// existing clique (creation order) it is fully adjacent to, else founding
/// its own. Only cliques containing a neighbor of v can accept it, so the
/// scan is restricted to those; the probe count stays below |V|^2.
inline DisjointCliqueCover build_disjoint_cover(const Graph& g) {
    DisjointCliqueCover cover;
    const int n = g.num_vertices();
    std::vector<int> clique_of(size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        std::vector<int> candidates;
        for (int w : g.neighbors(v)) {
            if (w < v) candidates.push_back(clique_of[size_t(w)]);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        int placed = -1;
        for (int ci : candidates) {
            bool all_adjacent = true;
            for (int member : cover.cliques[size_t(ci)]) {
                ++cover.adjacency_tests;
                if (!g.has_edge(v, member)) {
                    all_adjacent = false;
                    break;
                }
            }
            if (all_adjacent) {
                placed = ci;
                break;
            }
        }
        if (placed < 0) {
            placed = int(cover.cliques.size());
            cover.cliques.push_back({});
        }
        cover.cliques[size_t(placed)].push_back(v);
        clique_of[size_t(v)] = placed;
    }
    for (const auto& c : cover.cliques) cover.delta = std::max(cover.delta, int(c.size()));
    return cover;
}

/// Lower bound on eta(G,k): the disjoint-clique subgraph is no harder to
/// interdict than G, and its exact interdiction value has the closed form
/// sum of gamma_clq terms, minimized over p by binary search.
inline int estimate_lb(const Graph& g, int64_t k, DisjointCliqueCover* cover_out = nullptr) {
    if (k < 0) throw ContractViolation("estimate_lb: k must be >= 0");
    if (g.num_vertices() == 0) return 0;
    DisjointCliqueCover cover = build_disjoint_cover(g);
    std::vector<int> sizes;
    sizes.reserve(cover.cliques.size());
    for (const auto& c : cover.cliques) sizes.push_back(int(c.size()));
    int lb = gamma_clq_inverse_le(sizes, k, cover.delta);
    if (cover_out) *cover_out = std::move(cover);
    return lb;
}

struct UbTrace {
    EdgeSet removed;
    int final_clique_size = 0;
    std::vector<std::pair<int64_t, int>> iterations; // (edges removed, clique size after)
};

/// Upper bound on eta(G,k) by adaptive edge removal: repeatedly delete r
/// random edges from a current maximum clique, doubling r while the clique
/// number stalls and resetting it to 1 on progress. r never exceeds the
/// remaining budget or the current clique's edge count. Returns the clique
/// number of the final residual graph, witnessed by the removed set.
inline std::pair<int, UbTrace> estimate_ub(const Graph& g, int64_t k, uint64_t rng_seed) {
    if (k < 0) throw ContractViolation("estimate_ub: k must be >= 0");
    UbTrace trace;
    SplitMix64 rng(rng_seed);
    Graph cur = g;
    CliqueResult c = max_clique(cur);
    int64_t remaining = k;
    int64_t r = 1;
    while (remaining > 0 && c.size >= 2) {
        std::vector<Edge> clique_edges;
        for (size_t i = 0; i < c.clique.size(); ++i)
            for (size_t j = i + 1; j < c.clique.size(); ++j)
                clique_edges.push_back(Edge(c.clique[i], c.clique[j]));
        int64_t r_use = std::min<int64_t>({r, int64_t(clique_edges.size()), remaining});
        EdgeSet del;
        for (const Edge& e : rng.sample(clique_edges, size_t(r_use))) del.insert(e);
        cur = remove_edges(cur, del);
        trace.removed.insert(del.begin(), del.end());
        remaining -= r_use;
        CliqueResult next = max_clique(cur);
        trace.iterations.emplace_back(r_use, next.size);
        if (next.size == c.size)
            r = std::min<int64_t>(2 * r_use, next.size);
        else
            r = 1;
        c = std::move(next);
    }
    trace.final_clique_size = c.size;
    return {c.size, trace};
}

} // namespace eicp
