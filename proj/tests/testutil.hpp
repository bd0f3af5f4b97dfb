#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "eicp/gen.hpp"
#include "eicp/graph.hpp"

namespace testutil {

inline eicp::Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<eicp::Edge> es;
    for (auto [u, v] : pairs) es.push_back(eicp::Edge(u, v));
    return eicp::Graph::from_edges(n, es);
}

inline eicp::Graph complete_graph(int n) {
    std::vector<eicp::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back(eicp::Edge(u, v));
    return eicp::Graph::from_edges(n, es);
}

inline eicp::Graph cycle_graph(int n) {
    std::vector<eicp::Edge> es;
    for (int v = 0; v < n; ++v) es.push_back(eicp::Edge(v, (v + 1) % n));
    return eicp::Graph::from_edges(n, es);
}

inline eicp::Graph path_graph(int n) {
    std::vector<eicp::Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back(eicp::Edge(v, v + 1));
    return eicp::Graph::from_edges(n, es);
}

inline eicp::Graph edgeless_graph(int n) { return eicp::Graph::from_edges(n, {}); }

inline eicp::Graph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < 5; ++v) {
        pairs.push_back({v, (v + 1) % 5});         // outer cycle
        pairs.push_back({v, v + 5});               // spokes
        pairs.push_back({v + 5, (v + 2) % 5 + 5}); // inner pentagram
    }
    return from_pairs(10, pairs);
}

inline eicp::Graph disjoint_union(const eicp::Graph& a, const eicp::Graph& b) {
    std::vector<eicp::Edge> es = a.edges();
    for (const eicp::Edge& e : b.edges())
        es.push_back(eicp::Edge(e.u + a.num_vertices(), e.v + a.num_vertices()));
    return eicp::Graph::from_edges(a.num_vertices() + b.num_vertices(), es);
}

/// The classic "fat ring" family used in clique benchmarking: n vertices
/// split into floor(n / (c ln n)) consecutive groups (remainder groups one
/// vertex bigger, placed first), each group a clique and consecutive groups
/// on the ring fully joined. Reproduces the published cfat instances up to
/// isomorphism; the n=200 members match their published edge counts and
/// clique numbers exactly.
inline eicp::Graph cfat_graph(int n, int c) {
    int groups = int(std::floor(double(n) / (double(c) * std::log(double(n)))));
    int base = n / groups;
    int extra = n % groups; // this many groups of size base+1, placed first
    std::vector<int> group_of(static_cast<size_t>(n));
    int v = 0;
    for (int gi = 0; gi < groups; ++gi) {
        int size = base + (gi < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) group_of[size_t(v++)] = gi;
    }
    std::vector<eicp::Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int ga = group_of[size_t(a)], gb = group_of[size_t(b)];
            int d = std::abs(ga - gb);
            if (d == 0 || d == 1 || d == groups - 1) es.push_back(eicp::Edge(a, b));
        }
    return eicp::Graph::from_edges(n, es);
}

struct ErCase {
    int n;
    double rho;
    int64_t k;
    uint64_t seed;
};

/// Deterministic grid of random instances: n in 6..12, rho in {.3,.5,.8},
/// k in 1..4, distinct seeds.
inline std::vector<ErCase> er_suite(int count) {
    const double rhos[] = {0.3, 0.5, 0.8};
    std::vector<ErCase> cases;
    for (int i = 0; i < count; ++i) {
        ErCase c;
        c.n = 6 + (i % 7);
        c.rho = rhos[(i / 7) % 3];
        c.k = 1 + (i / 21) % 4;
        c.seed = 9000 + uint64_t(i);
        cases.push_back(c);
    }
    return cases;
}

/// Instances for reduction checks: k in 0..4 and a wider density range.
inline std::vector<ErCase> reduction_suite(int count) {
    const double rhos[] = {0.3, 0.45, 0.6, 0.75, 0.9};
    std::vector<ErCase> cases;
    for (int i = 0; i < count; ++i) {
        ErCase c;
        c.n = 6 + (i % 7);
        c.rho = rhos[(i / 7) % 5];
        c.k = (i / 35) % 5;
        c.seed = 40000 + uint64_t(i);
        cases.push_back(c);
    }
    return cases;
}

} // namespace testutil
