#pragma once

#include <cmath>
#include <cstdint>

#include "eicp/graph.hpp"
#include "eicp/prng.hpp"

namespace eicp {

/// G(n, rho): every pair becomes an edge independently with probability
/// rho. Deterministic for a given (n, rho, seed) on every platform.
inline Graph erdos_renyi(int n, double density, uint64_t seed) {
    if (n < 0) throw ContractViolation("erdos_renyi: n must be >= 0");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    const bool none = density <= 0.0;
    const bool all = density >= 1.0;
    const double scale = 18446744073709551616.0; // 2^64
    const uint64_t threshold = (none || all) ? 0 : uint64_t(density * scale);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            uint64_t draw = rng.next();
            if (all || (!none && draw < threshold)) edges.push_back(Edge(u, v));
        }
    return Graph::from_edges(n, edges);
}

/// Budget from an edge fraction: k = ceil(c * m).
inline int64_t budget_from_fraction(double c, int64_t m) {
    if (c < 0) throw ContractViolation("budget fraction must be >= 0");
    return int64_t(std::ceil(static_cast<long double>(c) * static_cast<long double>(m)));
}

} // namespace eicp
