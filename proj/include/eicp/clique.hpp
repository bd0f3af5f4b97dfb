#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "eicp/bitset.hpp"
#include "eicp/graph.hpp"

namespace eicp {

struct CliqueResult {
    std::vector<int> clique; // sorted vertex ids of the queried graph
    int size = 0;
    uint64_t search_nodes = 0;
    bool timed_out = false;
};

struct MaxCliqueOptions {
    /// One node = one branch expansion. Unset means unlimited.
    std::optional<uint64_t> node_budget;
    /// Search only for cliques strictly larger than this; when the run
    /// completes with size <= hint, the true clique number is <= hint and
    /// the witness may be empty. Leave at 0 for plain maximum clique.
    int lower_bound_hint = 0;
    /// Restrict the search to this induced subgraph (ids of g).
    const std::vector<int>* subset = nullptr;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

/// Branch-and-bound maximum clique with greedy-coloring pruning in the
/// style of Tomita's MCQ: candidates are color-sorted at every node and a
/// branch is cut when |current| + color(v) cannot beat the incumbent.
class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, const MaxCliqueOptions& opt) : opt_(opt) {
        std::vector<int> verts;
        if (opt.subset) {
            verts = *opt.subset;
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            for (int v : verts) g.check_vertex(v);
        } else {
            verts.resize(size_t(g.num_vertices()));
            for (int v = 0; v < g.num_vertices(); ++v) verts[size_t(v)] = v;
        }
        n_ = int(verts.size());
        // Subgraph degrees drive the initial order: non-increasing degree,
        // ties by id, for reproducible node counts.
        std::vector<int> pos(size_t(g.num_vertices()), -1);
        for (int i = 0; i < n_; ++i) pos[size_t(verts[size_t(i)])] = i;
        std::vector<int> deg(size_t(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int w : g.neighbors(verts[size_t(i)]))
                if (pos[size_t(w)] >= 0) ++deg[size_t(i)];
        std::vector<int> order(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) order[size_t(i)] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (deg[size_t(a)] != deg[size_t(b)]) return deg[size_t(a)] > deg[size_t(b)];
            return verts[size_t(a)] < verts[size_t(b)];
        });
        to_global_.resize(size_t(n_));
        std::vector<int> local_of(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            to_global_[size_t(i)] = verts[size_t(order[size_t(i)])];
            local_of[size_t(order[size_t(i)])] = i;
        }
        adj_.assign(size_t(n_), Bitset(n_));
        for (int i = 0; i < n_; ++i) {
            int gv = to_global_[size_t(i)];
            for (int w : g.neighbors(gv)) {
                int pw = pos[size_t(w)];
                if (pw >= 0) adj_[size_t(i)].set(local_of[size_t(pw)]);
            }
        }
    }

    CliqueResult run() {
        CliqueResult res;
        if (n_ == 0) return res;
        best_ = std::max(0, opt_.lower_bound_hint);
        // Greedy seed clique along the static order.
        {
            Bitset cand(n_);
            for (int i = 0; i < n_; ++i) cand.set(i);
            std::vector<int> seed;
            for (int i = 0; i < n_; ++i) {
                if (!cand.test(i)) continue;
                seed.push_back(i);
                cand.and_with(adj_[size_t(i)]);
            }
            if (int(seed.size()) > best_) {
                best_ = int(seed.size());
                best_stack_ = seed;
            }
        }
        Bitset root(n_);
        for (int i = 0; i < n_; ++i) root.set(i);
        cur_.clear();
        expand(root, 0);
        res.timed_out = aborted_;
        res.search_nodes = nodes_;
        res.clique.reserve(best_stack_.size());
        for (int i : best_stack_) res.clique.push_back(to_global_[size_t(i)]);
        std::sort(res.clique.begin(), res.clique.end());
        res.size = int(res.clique.size());
        return res;
    }

private:
    struct Frame {
        Bitset child, uncolored, cls;
        std::vector<int> order, color;
    };

    Frame& frame(int depth) {
        while (int(frames_.size()) <= depth) {
            Frame f;
            f.child = Bitset(n_);
            f.uncolored = Bitset(n_);
            f.cls = Bitset(n_);
            frames_.push_back(std::move(f));
        }
        return frames_[size_t(depth)];
    }

    bool out_of_budget() {
        if (opt_.node_budget && nodes_ > *opt_.node_budget) return true;
        if (opt_.deadline && (nodes_ & 0xFF) == 0 &&
            std::chrono::steady_clock::now() >= *opt_.deadline)
            return true;
        return false;
    }

    void expand(Bitset& cand, int depth) {
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        Frame& f = frame(depth);
        // Tomita color-sort: vertices listed by non-decreasing color class.
        f.order.clear();
        f.color.clear();
        f.uncolored.assign_from(cand);
        int c = 0;
        while (true) {
            int v0 = f.uncolored.first();
            if (v0 < 0) break;
            ++c;
            f.cls.assign_from(f.uncolored);
            while (true) {
                int v = f.cls.first();
                if (v < 0) break;
                f.order.push_back(v);
                f.color.push_back(c);
                f.cls.reset(v);
                f.cls.andnot_with(adj_[size_t(v)]);
                f.uncolored.reset(v);
            }
        }
        for (int i = int(f.order.size()) - 1; i >= 0; --i) {
            if (aborted_) return;
            int v = f.order[size_t(i)];
            if (int(cur_.size()) + f.color[size_t(i)] <= best_) return;
            cur_.push_back(v);
            Bitset::and_into(cand, adj_[size_t(v)], f.child);
            if (f.child.empty()) {
                if (int(cur_.size()) > best_) {
                    best_ = int(cur_.size());
                    best_stack_ = cur_;
                }
            } else {
                // f.child is recomputed on the next iteration, so the callee
                // may consume it in place.
                expand(f.child, depth + 1);
            }
            cur_.pop_back();
            cand.reset(v);
        }
    }

    const MaxCliqueOptions opt_;
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> to_global_;
    std::deque<Frame> frames_; // deque keeps frame references stable
    std::vector<int> cur_, best_stack_;
    int best_ = 0;
    uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace detail

/// Exact maximum clique (subject to the node budget; on exhaustion the
/// incumbent is returned with timed_out set — still a valid clique and a
/// valid lower bound on the clique number).
inline CliqueResult max_clique(const Graph& g, const MaxCliqueOptions& opt = {}) {
    return detail::MaxCliqueSearch(g, opt).run();
}

/// Number of colors used by sequential greedy coloring; an upper bound on
/// the chromatic number and hence on the clique number.
inline int greedy_color_bound(const Graph& g, const std::vector<int>* order = nullptr) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    std::vector<int> natural;
    if (!order) {
        natural.resize(size_t(n));
        for (int v = 0; v < n; ++v) natural[size_t(v)] = v;
        order = &natural;
    }
    if (int(order->size()) != n)
        throw ContractViolation("greedy_color_bound: order must list every vertex once");
    std::vector<int> color(size_t(n), 0);
    std::vector<char> used(size_t(n) + 2, 0);
    int max_color = 0;
    for (int v : *order) {
        g.check_vertex(v);
        for (int w : g.neighbors(v)) used[size_t(color[size_t(w)])] = 1;
        int c = 1;
        while (used[size_t(c)]) ++c;
        color[size_t(v)] = c;
        max_color = std::max(max_color, c);
        for (int w : g.neighbors(v)) used[size_t(color[size_t(w)])] = 0;
    }
    return max_color;
}

/// True iff s is pairwise adjacent in g (|s| <= 1 counts as a clique).
inline bool is_clique(const Graph& g, const std::vector<int>& s) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (int v : t) g.check_vertex(v);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (!g.has_edge(t[i], t[j])) return false;
    return true;
}

} // namespace eicp
