#include <catch2/catch_amalgamated.hpp>

#include "eicp/oracle.hpp"
#include "eicp/report_json.hpp"
#include "eicp/rlcm.hpp"
#include "testutil.hpp"

using namespace eicp;

namespace {
void check_witness(const Graph& g, const SolveReport& r, int64_t k) {
    REQUIRE(int64_t(r.witness.size()) <= k);
    REQUIRE(max_clique(remove_edges(g, r.witness)).size == r.eta);
}
} // namespace

TEST_CASE("solve_eicp on fixed instances") {
    SECTION("K5 with k=4") {
        Graph g = testutil::complete_graph(5);
        SolveReport r = solve_eicp(g, 4);
        REQUIRE(r.status == SolveStatus::Solved);
        REQUIRE(r.eta == 2);
        REQUIRE(r.witness.size() == 4);
        check_witness(g, r, 4);
    }
    SECTION("k=0 is the clique number with an empty witness") {
        Graph g = erdos_renyi(12, 0.6, 4);
        SolveReport r = solve_eicp(g, 0);
        REQUIRE(r.eta == oracle::brute_omega(g));
        REQUIRE(r.witness.empty());
    }
    SECTION("a budget covering every edge empties the graph") {
        Graph g = erdos_renyi(10, 0.5, 6);
        SolveReport r = solve_eicp(g, g.num_edges());
        REQUIRE(r.eta == 1);
        check_witness(g, r, g.num_edges());
    }
    SECTION("empty graph") {
        SolveReport r = solve_eicp(Graph(), 3);
        REQUIRE(r.eta == 0);
        REQUIRE(r.witness.empty());
    }
    SECTION("bounds bracket the optimum") {
        Graph g = erdos_renyi(11, 0.7, 8);
        SolveReport r = solve_eicp(g, 3);
        REQUIRE(r.lb <= r.eta);
        REQUIRE(r.eta <= r.ub);
    }
}

TEST_CASE("solve_eicp equals brute force with verified witnesses") {
    for (auto c : testutil::er_suite(48)) {
        Graph g = erdos_renyi(c.n, c.rho, c.seed);
        SolveOptions opts;
        opts.seed = c.seed;
        SolveReport r = solve_eicp(g, c.k, opts);
        INFO("n=" << c.n << " rho=" << c.rho << " k=" << c.k << " seed=" << c.seed);
        REQUIRE(r.status == SolveStatus::Solved);
        REQUIRE(r.eta == oracle::brute_eicp(g, c.k).first);
        check_witness(g, r, c.k);
    }
}

TEST_CASE("solve_ebcp") {
    SECTION("already satisfied threshold") {
        EbcpResult r = solve_ebcp(testutil::cycle_graph(5), 2);
        REQUIRE(r.gamma == 0);
        REQUIRE(r.blocked.empty());
    }
    SECTION("K4 at p=2") { REQUIRE(solve_ebcp(testutil::complete_graph(4), 2).gamma == 2); }
    SECTION("K5 closed-form values") {
        REQUIRE(solve_ebcp(testutil::complete_graph(5), 2).gamma == 4);
        REQUIRE(solve_ebcp(testutil::complete_graph(5), 1).gamma == 10);
    }
    SECTION("cutoff reports Exceeds") {
        EbcpOptions opts;
        opts.cutoff = 3;
        EbcpResult r = solve_ebcp(testutil::complete_graph(5), 1, opts);
        REQUIRE(r.exceeds);
    }
    SECTION("matches brute force and is monotone in p") {
        for (uint64_t seed = 60; seed < 72; ++seed) {
            Graph g = erdos_renyi(8, 0.6, seed);
            int omega = oracle::brute_omega(g);
            int64_t prev = std::numeric_limits<int64_t>::max();
            for (int p = 1; p <= omega; ++p) {
                EbcpOptions opts;
                opts.seed = seed;
                EbcpResult r = solve_ebcp(g, p, opts);
                REQUIRE_FALSE(r.exceeds);
                REQUIRE(r.gamma == oracle::brute_ebcp(g, p));
                REQUIRE(max_clique(remove_edges(g, r.blocked)).size <= p);
                REQUIRE(r.gamma <= prev);
                prev = r.gamma;
            }
        }
    }
}

TEST_CASE("threshold duality between the two problems") {
    for (uint64_t seed = 80; seed < 90; ++seed) {
        Graph g = erdos_renyi(8, 0.55, seed);
        int omega = oracle::brute_omega(g);
        if (omega < 2) continue;
        for (int64_t k = 0; k <= 3; ++k) {
            int eta = solve_eicp(g, k).eta;
            for (int p = 1; p <= omega; ++p) {
                bool gamma_within = solve_ebcp(g, p).gamma <= k;
                REQUIRE(gamma_within == (eta <= p));
            }
        }
    }
}

TEST_CASE("ablation flags preserve exactness") {
    for (auto c : testutil::er_suite(30)) {
        Graph g = erdos_renyi(c.n, c.rho, c.seed);
        int expect = oracle::brute_eicp(g, c.k).first;
        for (int variant = 0; variant < 3; ++variant) {
            SolveOptions opts;
            opts.seed = c.seed;
            opts.disable_reduce = variant == 0;
            opts.disable_ub = variant == 1;
            opts.disable_ordering_cuts = variant == 2;
            SolveReport r = solve_eicp(g, c.k, opts);
            INFO("variant=" << variant << " seed=" << c.seed);
            REQUIRE(r.eta == expect);
            check_witness(g, r, c.k);
        }
    }
}

TEST_CASE("reports are deterministic given the seed") {
    Graph g = erdos_renyi(12, 0.7, 99);
    SolveOptions opts;
    opts.seed = 7;
    auto j1 = solve_report_json(solve_eicp(g, 3, opts), g);
    auto j2 = solve_report_json(solve_eicp(g, 3, opts), g);
    j1.erase("time_ms");
    j2.erase("time_ms");
    REQUIRE(j1.dump() == j2.dump());
}

TEST_CASE("timeout reports bounds instead of an answer") {
    Graph g = erdos_renyi(40, 0.8, 3);
    SolveOptions opts;
    opts.time_limit_secs = 1e-9;
    SolveReport r = solve_eicp(g, 5, opts);
    REQUIRE(r.status == SolveStatus::TimedOut);
    REQUIRE(r.eta == -1);
    REQUIRE(r.lb >= 1);
    REQUIRE(r.ub >= r.lb);
}

TEST_CASE("fractional budgets round up") {
    REQUIRE(budget_from_fraction(0.0001, 9999) == 1);
    REQUIRE(budget_from_fraction(0.5, 10) == 5);
    REQUIRE(budget_from_fraction(0.0, 10) == 0);
    REQUIRE(budget_from_fraction(0.01, 250) == 3);
}
