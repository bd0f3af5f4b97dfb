#include <catch2/catch_amalgamated.hpp>

#include "eicp/oracle.hpp"
#include "eicp/turan.hpp"
#include "testutil.hpp"

using namespace eicp;

TEST_CASE("gamma_clq closed form") {
    SECTION("i >= n costs nothing") {
        REQUIRE(gamma_clq(3, 5) == 0);
        REQUIRE(gamma_clq(0, 1) == 0);
        REQUIRE(gamma_clq(1, 1) == 0);
    }
    SECTION("i = 1 deletes everything") { REQUIRE(gamma_clq(5, 1) == 10); }
    SECTION("values checked against edge-subset enumeration") {
        REQUIRE(gamma_clq(4, 2) == 2);
        REQUIRE(gamma_clq(5, 2) == 4);
        REQUIRE(gamma_clq(7, 3) == 5);
        REQUIRE(oracle::brute_ebcp(testutil::complete_graph(4), 2) == 2);
        REQUIRE(oracle::brute_ebcp(testutil::complete_graph(5), 2) == 4);
        REQUIRE(oracle::brute_ebcp(testutil::complete_graph(7), 3) == 5);
    }
    SECTION("contract violations") {
        REQUIRE_THROWS_AS(gamma_clq(4, 0), ContractViolation);
        REQUIRE_THROWS_AS(gamma_clq(-1, 2), ContractViolation);
    }
}

TEST_CASE("gamma_clq structural invariants") {
    for (int n = 0; n <= 24; ++n) {
        int64_t prev = -1;
        for (int i = 1; i <= n + 2; ++i) {
            int64_t v = gamma_clq(n, i);
            if (i > 1) REQUIRE(v <= prev); // non-increasing in i
            prev = v;
            if (n > 0) REQUIRE(gamma_clq(n - 1, i) <= v); // non-decreasing in n
            if (i < n) {
                // Part sizes of the balanced split add back up to n.
                int64_t alpha = (n + i - 1) / i;
                int64_t n_small = int64_t(i) * alpha - n;
                int64_t n_large = (n - n_small * (alpha - 1)) / alpha;
                REQUIRE(n_small >= 0);
                REQUIRE(n_small * (alpha - 1) + n_large * alpha == n);
                REQUIRE(n_small + n_large == i);
            }
        }
    }
}

TEST_CASE("gamma_clq_inverse_le") {
    SECTION("single clique") {
        REQUIRE(gamma_clq_inverse_le({5}, 4, 5) == 2);
        REQUIRE(gamma_clq_inverse_le({4}, 100, 4) == 1);
    }
    SECTION("zero budget forces the max size") { REQUIRE(gamma_clq_inverse_le({3, 3}, 0, 3) == 3); }
    SECTION("matches a linear scan") {
        std::vector<int> sizes = {7, 5, 4, 2, 2};
        for (int64_t k = 0; k <= 40; ++k) {
            int expect = 7;
            for (int p = 1; p <= 7; ++p) {
                int64_t total = 0;
                for (int s : sizes) total += gamma_clq(s, p);
                if (total <= k) {
                    expect = p;
                    break;
                }
            }
            REQUIRE(gamma_clq_inverse_le(sizes, k, 7) == expect);
        }
    }
}
