#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "eicp/graph.hpp"

namespace eicp::oracle {

/// Ground-truth solvers by exhaustive enumeration. Test-suite and `verify`
/// use only; deliberately independent of the branch-and-bound engines
/// (plain subset/combination enumeration over bitmask adjacency, no
/// coloring bounds, no constraint propagation).

class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    int64_t max_edges = 18;             // full edge power sets allowed up to here
    int max_vertices = 14;              // vertex-subset enumeration cap
    int64_t max_enumeration = 10000000; // cap on sum_j C(m, j)
};

namespace detail {

inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(size_t(g.num_vertices()), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int w : g.neighbors(v)) adj[size_t(v)] |= uint32_t(1) << w;
    return adj;
}

inline bool has_clique_ge(const std::vector<uint32_t>& adj, uint32_t cand, int need) {
    if (need <= 0) return true;
    if (std::popcount(cand) < need) return false;
    int v = std::countr_zero(cand);
    uint32_t rest = cand & (cand - 1);
    if (has_clique_ge(adj, rest & adj[size_t(v)], need - 1)) return true;
    return has_clique_ge(adj, rest, need);
}

inline int omega_of_masks(const std::vector<uint32_t>& adj, int upper) {
    int n = int(adj.size());
    if (n == 0) return 0;
    int t = std::min(upper, n);
    uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    while (t > 1 && !has_clique_ge(adj, full, t)) --t;
    return t;
}

/// Visits every j-subset of {0..m-1}; stop early when f returns true.
template <typename F>
inline bool for_each_combination(int64_t m, int j, F f) {
    std::vector<int> idx(static_cast<size_t>(j));
    for (int i = 0; i < j; ++i) idx[size_t(i)] = i;
    if (j > m) return false;
    while (true) {
        if (f(idx)) return true;
        int i = j - 1;
        while (i >= 0 && idx[size_t(i)] == m - j + i) --i;
        if (i < 0) return false;
        ++idx[size_t(i)];
        for (int t = i + 1; t < j; ++t) idx[size_t(t)] = idx[size_t(t - 1)] + 1;
    }
}

inline int64_t choose_capped(int64_t m, int j, int64_t cap) {
    int64_t c = 1;
    for (int i = 1; i <= j; ++i) {
        c = c * (m - i + 1) / i;
        if (c > cap) return cap + 1;
    }
    return c;
}

inline void check_vertices(const Graph& g, const OracleLimits& lim) {
    if (g.num_vertices() > lim.max_vertices)
        throw OracleLimitError("oracle: graph has " + std::to_string(g.num_vertices()) +
                               " vertices, limit " + std::to_string(lim.max_vertices));
}

} // namespace detail

/// Exact clique number by subset enumeration: S is a clique iff every
/// member's neighborhood covers the rest of S.
inline int brute_omega(const Graph& g, const OracleLimits& lim = {}) {
    detail::check_vertices(g, lim);
    const int n = g.num_vertices();
    if (n == 0) return 0;
    auto adj = detail::adjacency_masks(g);
    int best = 0;
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int sz = std::popcount(s);
        if (sz <= best) continue;
        bool clique = true;
        for (uint32_t t = s; t && clique;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            if ((s & ~(uint32_t(1) << v)) & ~adj[size_t(v)]) clique = false;
        }
        if (clique) best = sz;
    }
    return best;
}

/// Exact eta(G,k) and an optimal interdiction set, enumerating removal sets
/// of size 0..k (smallest first, early exit once eta hits 1).
inline std::pair<int, EdgeSet> brute_eicp(const Graph& g, int64_t k, const OracleLimits& lim = {}) {
    detail::check_vertices(g, lim);
    if (k < 0) throw ContractViolation("brute_eicp: k must be >= 0");
    const auto edges = g.edges();
    const int64_t m = int64_t(edges.size());
    const int kmax = int(std::min<int64_t>(k, m));
    int64_t total = 0;
    for (int j = 0; j <= kmax; ++j) {
        total += detail::choose_capped(m, j, lim.max_enumeration);
        if (total > lim.max_enumeration && m > lim.max_edges)
            throw OracleLimitError("brute_eicp: enumeration budget exceeded");
    }
    const auto base = detail::adjacency_masks(g);
    const int n = g.num_vertices();
    if (n == 0) return {0, {}};
    const uint32_t full = (uint32_t(1) << n) - 1;
    int best = detail::omega_of_masks(base, n);
    EdgeSet best_f;
    std::vector<uint32_t> adj(base.size());
    for (int j = 1; j <= kmax && best > 1; ++j) {
        detail::for_each_combination(m, j, [&](const std::vector<int>& idx) {
            std::copy(base.begin(), base.end(), adj.begin());
            for (int i : idx) {
                const Edge& e = edges[size_t(i)];
                adj[size_t(e.u)] &= ~(uint32_t(1) << e.v);
                adj[size_t(e.v)] &= ~(uint32_t(1) << e.u);
            }
            if (!detail::has_clique_ge(adj, full, best)) {
                best = detail::omega_of_masks(adj, best - 1);
                best_f.clear();
                for (int i : idx) best_f.insert(edges[size_t(i)]);
            }
            return best == 1;
        });
    }
    return {best, best_f};
}

/// Exact gamma(G,p): smallest number of edge removals bringing the clique
/// number down to at most p.
inline int64_t brute_ebcp(const Graph& g, int p, const OracleLimits& lim = {}) {
    detail::check_vertices(g, lim);
    if (p < 1) throw ContractViolation("brute_ebcp: p must be >= 1");
    const auto edges = g.edges();
    const int64_t m = int64_t(edges.size());
    const auto base = detail::adjacency_masks(g);
    const int n = g.num_vertices();
    if (n == 0) return 0;
    const uint32_t full = (uint32_t(1) << n) - 1;
    if (!detail::has_clique_ge(base, full, p + 1)) return 0;
    int64_t budget = 0;
    std::vector<uint32_t> adj(base.size());
    for (int j = 1; j <= m; ++j) {
        budget += detail::choose_capped(m, j, lim.max_enumeration);
        if (budget > lim.max_enumeration && m > lim.max_edges)
            throw OracleLimitError("brute_ebcp: enumeration budget exceeded");
        bool found = detail::for_each_combination(m, j, [&](const std::vector<int>& idx) {
            std::copy(base.begin(), base.end(), adj.begin());
            for (int i : idx) {
                const Edge& e = edges[size_t(i)];
                adj[size_t(e.u)] &= ~(uint32_t(1) << e.v);
                adj[size_t(e.v)] &= ~(uint32_t(1) << e.u);
            }
            return !detail::has_clique_ge(adj, full, p + 1);
        });
        if (found) return j;
    }
    return m; // removing everything always reaches omega <= 1 <= p
}

} // namespace eicp::oracle
