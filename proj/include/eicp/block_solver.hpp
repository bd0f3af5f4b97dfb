#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "eicp/clique.hpp"
#include "eicp/graph.hpp"
#include "eicp/turan.hpp"

namespace eicp {

/// "Block at least rhs edges inside this clique": sum_{e in support} x_e >= rhs.
struct CoverConstraint {
    std::vector<int> support; // edge variable ids, ascending
    int64_t rhs = 0;
    std::vector<int> source_clique;
};

/// Tournament-orientation constraint for one permutation of a clique: with
/// z_u = 1 iff no edge from u toward a later vertex of the order is
/// blocked, feasibility requires sum_u z_u <= p. The z variables are fully
/// determined by the edge variables, so the solver treats the family as a
/// propagator instead of materializing them.
struct OrderingConstraint {
    std::vector<int> order; // clique vertices, permutation order
    int p = 0;
    std::vector<std::vector<int>> outgoing; // per position: edge ids to later vertices
};

enum class BlockStatus {
    Optimal,    // objective is the proven minimum
    Feasible,   // satisficing mode: within the cutoff, optimality not proven
    Exceeds,    // proven: no solution within the cutoff exists
    Infeasible,
};

struct BlockSolution {
    BlockStatus status = BlockStatus::Optimal;
    EdgeSet blocked;
    int64_t objective = 0;
    uint64_t nodes = 0;
    bool aborted = false; // deadline hit; contents are not meaningful
    bool cap_hit = false; // node cap reached before a conclusion
};

/// Exact-minimization instance over the edge variables of one graph.
class BlockModel {
public:
    explicit BlockModel(Graph g) : g_(std::move(g)), edges_(g_.edges()) {}

    const Graph& graph() const { return g_; }
    int64_t num_vars() const { return int64_t(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    size_t num_covers() const { return covers_.size(); }
    size_t num_orderings() const { return orders_.size(); }
    const std::vector<CoverConstraint>& covers() const { return covers_; }
    const std::vector<OrderingConstraint>& orderings() const { return orders_; }

    void set_cutoff(std::optional<int64_t> cutoff) { cutoff_ = cutoff; }
    std::optional<int64_t> cutoff() const { return cutoff_; }

    int edge_id(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || !(*it == e))
            throw ContractViolation("BlockModel: edge not in working graph");
        return int(it - edges_.begin());
    }

    /// Inserts the cover inequality for `clique` at threshold p; a zero rhs
    /// is vacuous and filtered.
    void add_cover(std::vector<int> clique, int p) {
        std::sort(clique.begin(), clique.end());
        clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
        if (!is_clique(g_, clique))
            throw ContractViolation("add_cover: vertex set is not a clique");
        int64_t rhs = gamma_clq(int64_t(clique.size()), p);
        if (rhs == 0) return;
        CoverConstraint c;
        c.rhs = rhs;
        c.source_clique = clique;
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                c.support.push_back(edge_id(Edge(clique[i], clique[j])));
        std::sort(c.support.begin(), c.support.end());
        covers_.push_back(std::move(c));
    }

    /// Inserts the ordering family for one permutation; vacuous (and
    /// filtered) when the order has at most p vertices.
    void add_ordering(const std::vector<int>& order, int p) {
        if (p < 1) throw ContractViolation("add_ordering: p must be >= 1");
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ContractViolation("add_ordering: order repeats a vertex");
        if (!is_clique(g_, sorted))
            throw ContractViolation("add_ordering: order is not a clique permutation");
        if (int(order.size()) <= p) return;
        OrderingConstraint oc;
        oc.order = order;
        oc.p = p;
        oc.outgoing.resize(order.size());
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
                oc.outgoing[i].push_back(edge_id(Edge(order[i], order[j])));
        orders_.push_back(std::move(oc));
    }

private:
    Graph g_;
    std::vector<Edge> edges_;
    std::vector<CoverConstraint> covers_;
    std::vector<OrderingConstraint> orders_;
    std::optional<int64_t> cutoff_;
};

struct BlockSolveParams {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    const EdgeSet* warm_start = nullptr; // feasible-ish seed for the incumbent
    /// With a cutoff set: return the first solution within the cutoff
    /// instead of proving its optimality. Exceeds still carries a full
    /// proof. Used by the interdiction sweep, where any budget-feasible
    /// blocking set advances the search.
    bool stop_within_cutoff = false;
    /// Solve the covers-only restriction (ordering constraints dropped).
    /// That restriction is still a relaxation of the blocking problem, so
    /// its Exceeds verdicts remain valid.
    bool ignore_orderings = false;
    /// Abort after this many branch expansions (0 = unlimited); the
    /// solution then reports cap_hit instead of a status.
    uint64_t node_cap = 0;
};

namespace detail {

/// Depth-first branch and bound over the edge variables. Lower bound at a
/// node: edges already blocked plus a greedy packing of unsatisfied covers
/// with pairwise-disjoint undecided supports. Ordering constraints prune a
/// node once more than p vertices have every outgoing edge fixed unblocked.
class BlockSearch {
public:
    BlockSearch(const BlockModel& model, const BlockSolveParams& params)
        : model_(model), params_(params) {}

    BlockSolution run() {
        init();
        greedy_incumbent();
        if (!(satisficing() && best_ <= *model_.cutoff())) search();
        BlockSolution sol;
        sol.nodes = nodes_;
        if (aborted_) {
            sol.aborted = true;
            return sol;
        }
        if (best_ == kInf) {
            sol.status = BlockStatus::Infeasible;
            return sol;
        }
        sol.objective = best_;
        for (int e : best_edges_) sol.blocked.insert(model_.edges()[size_t(e)]);
        if (model_.cutoff() && best_ > *model_.cutoff())
            sol.status = BlockStatus::Exceeds;
        else if (satisficing())
            sol.status = BlockStatus::Feasible;
        else
            sol.status = BlockStatus::Optimal;
        return sol;
    }

private:
    static constexpr int64_t kInf = std::numeric_limits<int64_t>::max();

    void init() {
        const auto& covers = model_.covers();
        const auto& orders = model_.orderings();
        const int64_t m = model_.num_vars();
        assign_.assign(size_t(m), -1);
        cover_of_edge_.assign(size_t(m), {});
        order_of_edge_.assign(size_t(m), {});
        sat_.assign(covers.size(), 0);
        undec_.assign(covers.size(), 0);
        sum_deficit_ = 0;
        for (size_t c = 0; c < covers.size(); ++c) {
            undec_[c] = int64_t(covers[c].support.size());
            sum_deficit_ += covers[c].rhs;
            for (int e : covers[c].support) cover_of_edge_[size_t(e)].push_back(int(c));
        }
        max_multiplicity_ = 1;
        for (int64_t e = 0; e < m; ++e)
            max_multiplicity_ =
                std::max(max_multiplicity_, int64_t(cover_of_edge_[size_t(e)].size()));
        num_unsat_ = int64_t(covers.size());
        num_dead_ = 0;
        out_ones_.resize(orders.size());
        out_undec_.resize(orders.size());
        forced_.assign(orders.size(), 0);
        zero_ones_.assign(orders.size(), 0);
        violated_forced_ = 0;
        violated_zero_ = 0;
        for (size_t o = 0; o < orders.size(); ++o) {
            size_t t = orders[o].order.size();
            out_ones_[o].assign(t, 0);
            out_undec_[o].assign(t, 0);
            for (size_t j = 0; j < t; ++j) {
                out_undec_[o][j] = int(orders[o].outgoing[j].size());
                for (int e : orders[o].outgoing[j])
                    order_of_edge_[size_t(e)].push_back({int(o), int(j)});
                if (out_undec_[o][j] == 0) ++forced_[o]; // the last vertex
            }
            zero_ones_[o] = int(t);
            if (forced_[o] > orders[o].p) ++violated_forced_;
            if (zero_ones_[o] > orders[o].p) ++violated_zero_;
        }
        ones_total_ = 0;
        stamp_.assign(size_t(m), 0);
        cap_.assign(size_t(m), 0);
        stamp_gen_ = 0;
        best_ = kInf;
        best_edges_.clear();
        ones_stack_.clear();
        nodes_ = 0;
        aborted_ = false;
        done_ = false;
    }

    bool satisficing() const { return params_.stop_within_cutoff && model_.cutoff().has_value(); }

    int64_t prune_threshold() const {
        if (model_.cutoff()) return std::min<int64_t>(best_, *model_.cutoff() + 1);
        return best_;
    }

    void apply(int e, int8_t val) {
        assign_[size_t(e)] = val;
        if (val == 1) {
            ++ones_total_;
            ones_stack_.push_back(e);
        }
        for (int c : cover_of_edge_[size_t(e)]) {
            const int64_t rhs = model_.covers()[size_t(c)].rhs;
            bool was_unsat = sat_[size_t(c)] < rhs;
            bool was_dead = sat_[size_t(c)] + undec_[size_t(c)] < rhs;
            --undec_[size_t(c)];
            if (val == 1) {
                if (was_unsat) --sum_deficit_;
                ++sat_[size_t(c)];
            }
            bool now_unsat = sat_[size_t(c)] < rhs;
            bool now_dead = sat_[size_t(c)] + undec_[size_t(c)] < rhs;
            num_unsat_ += int(now_unsat) - int(was_unsat);
            num_dead_ += int(now_dead) - int(was_dead);
        }
        for (auto [o, j] : order_of_edge_[size_t(e)]) {
            const int p = model_.orderings()[size_t(o)].p;
            --out_undec_[size_t(o)][size_t(j)];
            if (val == 1) {
                if (out_ones_[size_t(o)][size_t(j)]++ == 0) {
                    if (zero_ones_[size_t(o)]-- == p + 1) --violated_zero_;
                }
            } else if (out_undec_[size_t(o)][size_t(j)] == 0 &&
                       out_ones_[size_t(o)][size_t(j)] == 0) {
                if (++forced_[size_t(o)] == p + 1) ++violated_forced_;
            }
        }
    }

    void undo(int e) {
        const int8_t val = assign_[size_t(e)];
        for (int c : cover_of_edge_[size_t(e)]) {
            const int64_t rhs = model_.covers()[size_t(c)].rhs;
            bool was_unsat = sat_[size_t(c)] < rhs;
            bool was_dead = sat_[size_t(c)] + undec_[size_t(c)] < rhs;
            ++undec_[size_t(c)];
            if (val == 1) --sat_[size_t(c)];
            bool now_unsat = sat_[size_t(c)] < rhs;
            bool now_dead = sat_[size_t(c)] + undec_[size_t(c)] < rhs;
            if (val == 1 && now_unsat) ++sum_deficit_;
            num_unsat_ += int(now_unsat) - int(was_unsat);
            num_dead_ += int(now_dead) - int(was_dead);
        }
        for (auto [o, j] : order_of_edge_[size_t(e)]) {
            const int p = model_.orderings()[size_t(o)].p;
            if (val == 1) {
                if (--out_ones_[size_t(o)][size_t(j)] == 0) {
                    if (++zero_ones_[size_t(o)] == p + 1) ++violated_zero_;
                }
            } else if (out_undec_[size_t(o)][size_t(j)] == 0 &&
                       out_ones_[size_t(o)][size_t(j)] == 0) {
                if (forced_[size_t(o)]-- == p + 1) --violated_forced_;
            }
            ++out_undec_[size_t(o)][size_t(j)];
        }
        if (val == 1) {
            --ones_total_;
            ones_stack_.pop_back();
        }
        assign_[size_t(e)] = -1;
    }

    /// Greedy fractional packing over unsatisfied covers in insertion
    /// order: cover c receives weight y_c = min remaining capacity over its
    /// undecided support (capacities start at 1 and shrink by y_c), giving
    /// the valid bound ceil(sum y_c * deficit_c). Weights are kept in
    /// integer units of 1/kScale, so the computation is exact and
    /// deterministic. Also reports the most-deficient cover for branching.
    static constexpr int64_t kScale = 1 << 20;

    int64_t packing_and_branch_cover(int& branch_cover) {
        ++stamp_gen_;
        int64_t total = 0; // units of 1/kScale
        int64_t best_deficit = 0;
        branch_cover = -1;
        const auto& covers = model_.covers();
        for (size_t c = 0; c < covers.size(); ++c) {
            int64_t deficit = covers[c].rhs - sat_[c];
            if (deficit <= 0) continue;
            if (deficit > best_deficit) {
                best_deficit = deficit;
                branch_cover = int(c);
            }
            int64_t y = kScale;
            for (int e : covers[c].support) {
                if (assign_[size_t(e)] >= 0) continue;
                if (stamp_[size_t(e)] != stamp_gen_) continue; // untouched: full capacity
                y = std::min(y, cap_[size_t(e)]);
                if (y == 0) break;
            }
            if (y == 0) continue;
            total += y * deficit;
            for (int e : covers[c].support) {
                if (assign_[size_t(e)] >= 0) continue;
                if (stamp_[size_t(e)] != stamp_gen_) {
                    stamp_[size_t(e)] = stamp_gen_;
                    cap_[size_t(e)] = kScale;
                }
                cap_[size_t(e)] -= y;
            }
        }
        return (total + kScale - 1) / kScale;
    }

    int pick_branch_edge(int branch_cover) {
        if (branch_cover >= 0) {
            const auto& support = model_.covers()[size_t(branch_cover)].support;
            int best_edge = -1;
            int64_t best_score = -1;
            for (int e : support) {
                if (assign_[size_t(e)] >= 0) continue;
                int64_t score = 0;
                for (int c : cover_of_edge_[size_t(e)])
                    if (sat_[size_t(c)] < model_.covers()[size_t(c)].rhs) ++score;
                if (score > best_score) {
                    best_score = score;
                    best_edge = e;
                }
            }
            return best_edge;
        }
        // Covers all satisfied: some ordering would be violated by the
        // all-unblocked completion; hit an outgoing edge of a would-be z
        // vertex.
        const auto& orders = model_.orderings();
        for (size_t o = 0; o < orders.size(); ++o) {
            if (zero_ones_[o] <= orders[o].p) continue;
            for (size_t j = 0; j < orders[o].order.size(); ++j) {
                if (out_ones_[o][j] != 0 || out_undec_[o][j] == 0) continue;
                int best_edge = -1;
                for (int e : orders[o].outgoing[j])
                    if (assign_[size_t(e)] < 0 && (best_edge < 0 || e < best_edge)) best_edge = e;
                if (best_edge >= 0) return best_edge;
            }
        }
        return -1;
    }

    bool deadline_hit() {
        if (!params_.deadline) return false;
        if ((nodes_ & 0xFF) != 0) return false;
        return std::chrono::steady_clock::now() >= *params_.deadline;
    }

    void search() {
        ++nodes_;
#ifdef EICP_SOLVER_TRACE
        if ((nodes_ & ((1u << 24) - 1)) == 0)
            std::fprintf(stderr, "[trace] nodes=%llu best=%lld ones=%lld depth=%zu unsat=%lld\n",
                         (unsigned long long)nodes_, (long long)best_, (long long)ones_total_,
                         ones_stack_.size(), (long long)num_unsat_);
#endif
        if (done_) return;
        if (aborted_ || deadline_hit()) {
            aborted_ = true;
            return;
        }
        if (num_dead_ > 0 || violated_forced_ > 0) return;
        int branch_cover = -1;
        int64_t packing = packing_and_branch_cover(branch_cover);
        // Complementary deficit bound: every new blocked edge can serve at
        // most max_multiplicity_ covers, so the outstanding deficits need
        // at least ceil(sum/mult) more edges. Strong where supports chain.
        int64_t ratio = (sum_deficit_ + max_multiplicity_ - 1) / max_multiplicity_;
        int64_t bound = ones_total_ + std::max(packing, ratio);
        if (bound >= prune_threshold()) return;
        if (num_unsat_ == 0 && violated_zero_ == 0) {
            if (ones_total_ < best_) {
                best_ = ones_total_;
                best_edges_ = ones_stack_;
                if (satisficing() && best_ <= *model_.cutoff()) done_ = true;
            }
            return;
        }
        int e = pick_branch_edge(branch_cover);
        if (e < 0) return; // violated orderings have no undecided edge left
        apply(e, 1);
        search();
        undo(e);
        if (aborted_ || done_) return;
        apply(e, 0);
        search();
        undo(e);
    }

    /// Start from the warm-start edges (if any), then repeatedly block the
    /// edge hitting the most unsatisfied covers, then break leftover
    /// ordering violations. Produces the initial incumbent.
    void greedy_incumbent() {
        const auto& covers = model_.covers();
        const auto& orders = model_.orderings();
        const int64_t m = model_.num_vars();
        std::vector<char> chosen(size_t(m), 0);
        std::vector<int64_t> sat(covers.size(), 0);
        std::vector<std::vector<int>> ones(orders.size());
        for (size_t o = 0; o < orders.size(); ++o)
            ones[o].assign(orders[o].order.size(), 0);
        std::vector<int> picked;
        auto block = [&](int e) {
            chosen[size_t(e)] = 1;
            picked.push_back(e);
            for (int c : cover_of_edge_[size_t(e)]) ++sat[size_t(c)];
            for (auto [o, j] : order_of_edge_[size_t(e)]) ++ones[size_t(o)][size_t(j)];
        };
        if (params_.warm_start)
            for (const Edge& we : *params_.warm_start) block(model_.edge_id(we));
        while (true) {
            int64_t worst_deficit = 0;
            int worst = -1;
            for (size_t c = 0; c < covers.size(); ++c) {
                int64_t def = covers[c].rhs - sat[c];
                if (def > worst_deficit) {
                    worst_deficit = def;
                    worst = int(c);
                }
            }
            if (worst < 0) break;
            int best_edge = -1;
            int64_t best_score = -1;
            for (int e : covers[size_t(worst)].support) {
                if (chosen[size_t(e)]) continue;
                int64_t score = 0;
                for (int c : cover_of_edge_[size_t(e)])
                    if (sat[size_t(c)] < covers[size_t(c)].rhs) ++score;
                if (score > best_score) {
                    best_score = score;
                    best_edge = e;
                }
            }
            block(best_edge);
        }
        bool fixed = true;
        while (fixed) {
            fixed = false;
            for (size_t o = 0; o < orders.size(); ++o) {
                int z = 0;
                for (size_t j = 0; j < orders[o].order.size(); ++j)
                    if (ones[o][j] == 0) ++z;
                if (z <= orders[o].p) continue;
                for (size_t j = 0; j < orders[o].order.size() && z > orders[o].p; ++j) {
                    if (ones[o][j] != 0 || orders[o].outgoing[j].empty()) continue;
                    block(orders[o].outgoing[j].front());
                    --z;
                }
                fixed = true;
            }
        }
        best_ = int64_t(picked.size());
        std::sort(picked.begin(), picked.end());
        picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
        best_ = int64_t(picked.size());
        best_edges_ = picked;
    }

    const BlockModel& model_;
    const BlockSolveParams& params_;

    std::vector<int8_t> assign_;
    std::vector<std::vector<int>> cover_of_edge_;
    std::vector<std::vector<std::pair<int, int>>> order_of_edge_;
    std::vector<int64_t> sat_, undec_;
    int64_t num_unsat_ = 0, num_dead_ = 0;
    int64_t sum_deficit_ = 0;
    int64_t max_multiplicity_ = 1;
    std::vector<std::vector<int>> out_ones_, out_undec_;
    std::vector<int> forced_, zero_ones_;
    int64_t violated_forced_ = 0, violated_zero_ = 0;
    int64_t ones_total_ = 0;
    std::vector<int> ones_stack_;
    std::vector<uint32_t> stamp_;
    std::vector<int64_t> cap_;
    uint32_t stamp_gen_ = 0;
    int64_t best_ = kInf;
    std::vector<int> best_edges_;
    uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool done_ = false; // satisficing: a within-cutoff solution is in hand
};

} // namespace detail

/// Exact solve: Optimal carries a true minimum-cardinality blocked set;
/// Exceeds proves the optimum is above the cutoff.
inline BlockSolution solve(const BlockModel& model, const BlockSolveParams& params = {}) {
    return detail::BlockSearch(model, params).run();
}

} // namespace eicp
