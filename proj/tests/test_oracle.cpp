#include <catch2/catch_amalgamated.hpp>

#include "eicp/clique.hpp"
#include "eicp/oracle.hpp"
#include "testutil.hpp"

using namespace eicp;

TEST_CASE("brute_omega") {
    REQUIRE(oracle::brute_omega(testutil::complete_graph(6)) == 6);
    REQUIRE(oracle::brute_omega(testutil::cycle_graph(4)) == 2);
    REQUIRE(oracle::brute_omega(testutil::edgeless_graph(3)) == 1);
    REQUIRE(oracle::brute_omega(Graph()) == 0);
    SECTION("agrees with the search engine on random graphs") {
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Graph g = erdos_renyi(8, 0.5, seed);
            REQUIRE(oracle::brute_omega(g) == max_clique(g).size);
        }
    }
    SECTION("refuses oversized graphs") {
        REQUIRE_THROWS_AS(oracle::brute_omega(testutil::edgeless_graph(20)),
                          oracle::OracleLimitError);
    }
}

TEST_CASE("brute_eicp") {
    Graph k4 = testutil::complete_graph(4);
    SECTION("K4") {
        auto [eta2, f2] = oracle::brute_eicp(k4, 2);
        REQUIRE(eta2 == 2);
        REQUIRE(f2.size() <= 2);
        auto [eta1, f1] = oracle::brute_eicp(k4, 1);
        REQUIRE(eta1 == 3);
    }
    SECTION("k=0 is the clique number") {
        Graph g = erdos_renyi(9, 0.5, 3);
        auto [eta, f] = oracle::brute_eicp(g, 0);
        REQUIRE(eta == oracle::brute_omega(g));
        REQUIRE(f.empty());
    }
    SECTION("witness is consistent") {
        Graph g = erdos_renyi(8, 0.6, 5);
        auto [eta, f] = oracle::brute_eicp(g, 3);
        REQUIRE(int64_t(f.size()) <= 3);
        REQUIRE(oracle::brute_omega(remove_edges(g, f)) == eta);
    }
    SECTION("monotone in k") {
        Graph g = erdos_renyi(8, 0.7, 9);
        int prev = oracle::brute_omega(g);
        for (int64_t k = 1; k <= 4; ++k) {
            int eta = oracle::brute_eicp(g, k).first;
            REQUIRE(eta <= prev);
            prev = eta;
        }
    }
}

TEST_CASE("brute_ebcp") {
    REQUIRE(oracle::brute_ebcp(testutil::complete_graph(4), 3) == 1);
    REQUIRE(oracle::brute_ebcp(testutil::complete_graph(5), 2) == 4);
    REQUIRE(oracle::brute_ebcp(testutil::complete_graph(3), 2) == 1);
    SECTION("monotone in p") {
        Graph g = erdos_renyi(8, 0.7, 21);
        int64_t prev = oracle::brute_ebcp(g, 1);
        for (int p = 2; p <= 6; ++p) {
            int64_t v = oracle::brute_ebcp(g, p);
            REQUIRE(v <= prev);
            prev = v;
        }
    }
}

TEST_CASE("interdiction/blocking duality") {
    // eta(G,k) = min{p : gamma(G,p) <= k} on small instances.
    for (uint64_t seed = 30; seed < 42; ++seed) {
        Graph g = erdos_renyi(7, 0.6, seed);
        for (int64_t k = 0; k <= 3; ++k) {
            int eta = oracle::brute_eicp(g, k).first;
            int expect = oracle::brute_omega(g);
            for (int p = 1; p <= expect; ++p) {
                if (oracle::brute_ebcp(g, p) <= k) {
                    expect = p;
                    break;
                }
            }
            REQUIRE(eta == expect);
        }
    }
}
