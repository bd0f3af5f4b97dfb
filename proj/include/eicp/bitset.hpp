#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace eicp {

/// Fixed-capacity bitset over 64-bit words. Used for adjacency rows and
/// candidate sets in the branch-and-bound kernels.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_(word_count(nbits), 0) {}

    int capacity() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    /// First set bit, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersect_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    /// True when every set bit of this is also set in o.
    bool subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    void and_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void or_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void andnot_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    /// dst = a & b. All three must share capacity.
    static void and_into(const Bitset& a, const Bitset& b, Bitset& dst) {
        assert(a.nbits_ == b.nbits_ && a.nbits_ == dst.nbits_);
        for (size_t i = 0; i < a.w_.size(); ++i) dst.w_[i] = a.w_[i] & b.w_[i];
    }

    void assign_from(const Bitset& o) {
        nbits_ = o.nbits_;
        w_ = o.w_;
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(int(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

private:
    static size_t word_count(int nbits) { return size_t(nbits + 63) / 64; }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace eicp
