#pragma once

#include <cstdint>
#include <vector>

#include "eicp/graph.hpp"

namespace eicp {

/// Minimum number of edges to delete from K_n so that the clique number of
/// the remainder is at most i. Closed form: splitting K_n into i balanced
/// independent parts (alpha = ceil(n/i)) and keeping only intra-part edges
/// is optimal, so the deleted edges are those inside the parts.
inline int64_t gamma_clq(int64_t n, int64_t i) {
    if (i <= 0) throw ContractViolation("gamma_clq: i must be >= 1");
    if (n < 0) throw ContractViolation("gamma_clq: n must be >= 0");
    if (i >= n) return 0;
    const int64_t alpha = (n + i - 1) / i;      // ceil(n/i)
    const int64_t n_small = i * alpha - n;      // parts of size alpha-1
    const int64_t n_large = (n - n_small * (alpha - 1)) / alpha;
    auto pairs = [](int64_t t) { return t * (t - 1) / 2; };
    return n_small * pairs(alpha - 1) + n_large * pairs(alpha);
}

/// Smallest p in {1..p_max} with sum_{s in sizes} gamma_clq(s, p) <= k.
/// The sum is non-increasing in p, so binary search applies. Returns p_max
/// when even it fails (unreachable when p_max >= max size, where the sum
/// is zero).
inline int gamma_clq_inverse_le(const std::vector<int>& sizes, int64_t k, int p_max) {
    if (sizes.empty()) throw ContractViolation("gamma_clq_inverse_le: empty size list");
    if (k < 0) throw ContractViolation("gamma_clq_inverse_le: k must be >= 0");
    if (p_max < 1) throw ContractViolation("gamma_clq_inverse_le: p_max must be >= 1");
    auto total = [&](int p) {
        int64_t s = 0;
        for (int sz : sizes) s += gamma_clq(sz, p);
        return s;
    };
    int lo = 1, hi = p_max;
    if (total(p_max) > k) return p_max;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (total(mid) <= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace eicp
