#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace eicp {

/// SplitMix64 generator. Small, fast, splittable, and identical on every
/// platform, which keeps seeded runs byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) via multiply-shift; n must be positive.
    uint64_t below(uint64_t n) {
        assert(n > 0);
        return uint64_t((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Derive an independent stream.
    SplitMix64 split() { return SplitMix64(next()); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Pick k distinct elements of v (k <= |v|), in selection order.
    template <typename T>
    std::vector<T> sample(std::vector<T> v, size_t k) {
        assert(k <= v.size());
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + size_t(below(v.size() - i));
            std::swap(v[i], v[j]);
        }
        v.resize(k);
        return v;
    }

private:
    uint64_t state_;
};

} // namespace eicp
