#include <catch2/catch_amalgamated.hpp>

#include "eicp/clique.hpp"
#include "eicp/oracle.hpp"
#include "eicp/prng.hpp"
#include "testutil.hpp"

using namespace eicp;

TEST_CASE("max_clique basics") {
    REQUIRE(max_clique(testutil::complete_graph(5)).size == 5);
    REQUIRE(max_clique(testutil::cycle_graph(5)).size == 2);
    REQUIRE(max_clique(Graph()).size == 0);
    REQUIRE(max_clique(testutil::edgeless_graph(4)).size == 1);
    SECTION("petersen graph") {
        Graph g = testutil::petersen_graph();
        REQUIRE(oracle::brute_omega(g) == 2);
        REQUIRE(max_clique(g).size == 2);
    }
    SECTION("clique content is consistent") {
        Graph g = erdos_renyi(20, 0.6, 17);
        CliqueResult res = max_clique(g);
        REQUIRE(is_clique(g, res.clique));
        REQUIRE(int(res.clique.size()) == res.size);
    }
}

TEST_CASE("max_clique exactness vs enumeration") {
    SplitMix64 rng(123);
    for (int t = 0; t < 60; ++t) {
        int n = 4 + int(rng.below(11)); // up to 14
        double rho = 0.2 + 0.1 * double(rng.below(8));
        Graph g = erdos_renyi(n, rho, rng.next());
        CliqueResult res = max_clique(g);
        REQUIRE_FALSE(res.timed_out);
        REQUIRE(res.size == oracle::brute_omega(g));
        REQUIRE(is_clique(g, res.clique));
    }
}

TEST_CASE("bound sandwich and removal monotonicity") {
    SplitMix64 rng(321);
    for (int t = 0; t < 25; ++t) {
        Graph g = erdos_renyi(14, 0.5, rng.next());
        int omega = max_clique(g).size;
        REQUIRE(omega <= greedy_color_bound(g));
        EdgeSet f;
        for (const Edge& e : g.edges())
            if (rng.below(4) == 0) f.insert(e);
        REQUIRE(max_clique(remove_edges(g, f)).size <= omega);
    }
}

TEST_CASE("node budget returns a valid incumbent") {
    Graph g = erdos_renyi(60, 0.6, 99);
    MaxCliqueOptions opt;
    opt.node_budget = 3;
    CliqueResult res = max_clique(g, opt);
    REQUIRE(res.timed_out);
    REQUIRE(res.size >= 1);
    REQUIRE(is_clique(g, res.clique));
    REQUIRE(res.size <= max_clique(g).size);
}

TEST_CASE("deterministic node counts") {
    Graph g = erdos_renyi(40, 0.5, 5);
    CliqueResult a = max_clique(g);
    CliqueResult b = max_clique(g);
    REQUIRE(a.search_nodes == b.search_nodes);
    REQUIRE(a.clique == b.clique);
}

TEST_CASE("greedy_color_bound") {
    REQUIRE(greedy_color_bound(testutil::edgeless_graph(4)) == 1);
    REQUIRE(greedy_color_bound(testutil::complete_graph(4)) == 4);
    REQUIRE(greedy_color_bound(Graph()) == 0);
    SECTION("5-cycle needs three colors") {
        int bound = greedy_color_bound(testutil::cycle_graph(5));
        REQUIRE(bound == 3); // any proper coloring of C5 uses >= 3
    }
    SECTION("custom order") {
        std::vector<int> order = {4, 3, 2, 1, 0};
        int bound = greedy_color_bound(testutil::cycle_graph(5), &order);
        REQUIRE(bound >= 3);
        std::vector<int> bad = {0, 1};
        REQUIRE_THROWS_AS(greedy_color_bound(testutil::cycle_graph(5), &bad), ContractViolation);
    }
}

TEST_CASE("is_clique") {
    Graph k4 = testutil::complete_graph(4);
    REQUIRE(is_clique(k4, {2}));
    REQUIRE(is_clique(k4, {}));
    REQUIRE(is_clique(k4, {0, 1, 2, 3}));
    Graph broken = remove_edges(k4, {Edge(1, 2)});
    REQUIRE_FALSE(is_clique(broken, {0, 1, 2, 3}));
    REQUIRE_FALSE(is_clique(testutil::cycle_graph(5), {0, 2}));
}

TEST_CASE("subset search") {
    Graph g = testutil::complete_graph(6);
    MaxCliqueOptions opt;
    std::vector<int> subset = {0, 2, 4};
    opt.subset = &subset;
    CliqueResult res = max_clique(g, opt);
    REQUIRE(res.size == 3);
    REQUIRE(res.clique == subset);
}
