#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dnastore/params.hpp"
#include "oracles.hpp"

using namespace dnastore;

TEST_SUITE("params") {

TEST_CASE("n=10 reproduces the worked example") {
    const auto p = derive_params(10);
    CHECK(p.n == 10);
    CHECK(p.m == 9);
    CHECK(p.vt_modulus == 19);
    CHECK(p.parity_positions == std::vector<int>{1, 2, 4, 8, 9});
    CHECK(p.l == 4);
    CHECK(p.message_positions == std::vector<int>{3, 5, 6, 7});
}

TEST_CASE("n=6 is the smallest admissible length") {
    const auto p = derive_params(6);
    CHECK(p.m == 5);
    CHECK(p.vt_modulus == 11);
    CHECK(p.parity_positions == std::vector<int>{1, 2, 4, 5});
    CHECK(p.l == 1);
    CHECK(p.message_positions == std::vector<int>{3});
}

TEST_CASE("n=9: m is a power of two, so m-1 joins the parity set") {
    const auto p = derive_params(9);
    CHECK(p.m == 8);
    CHECK(p.vt_modulus == 17);
    CHECK(p.parity_positions == std::vector<int>{1, 2, 4, 7, 8});
    CHECK(p.l == 3);
}

TEST_CASE("rejects strand lengths below 6") {
    CHECK_THROWS_AS(derive_params(5), std::invalid_argument);
    CHECK_THROWS_AS(derive_params(0), std::invalid_argument);
    CHECK_THROWS_AS(derive_params(-3), std::invalid_argument);
}

TEST_CASE("subset sums cover every deficiency in [0, 2m] for n in [6, 64]") {
    for (int n = 6; n <= 64; ++n) {
        const auto p = derive_params(n);
        const auto sums = oracle::subset_sums(p.parity_positions);
        for (int d = 0; d <= 2 * p.m; ++d) {
            REQUIRE_MESSAGE(sums.count(d) == 1, "n=", n, " d=", d);
        }
    }
}

TEST_CASE("structural message length matches n - ceil(log2(2n-1)) - 1") {
    for (int n = 6; n <= 64; ++n) {
        const auto p = derive_params(n);
        int ceil_log2 = 0;
        while ((1 << ceil_log2) < 2 * n - 1) ++ceil_log2;
        CHECK(p.l == n - ceil_log2 - 1);
        CHECK(p.l >= 1);
    }
}

TEST_CASE("message positions are the ascending complement of parity positions") {
    for (int n = 6; n <= 64; ++n) {
        const auto p = derive_params(n);
        std::vector<bool> seen(p.m + 1, false);
        for (int pos : p.parity_positions) {
            REQUIRE(pos >= 1);
            REQUIRE(pos <= p.m);
            REQUIRE(!seen[pos]);
            seen[pos] = true;
        }
        for (int pos : p.message_positions) {
            REQUIRE(pos >= 1);
            REQUIRE(pos <= p.m);
            REQUIRE(!seen[pos]);
            seen[pos] = true;
        }
        for (int pos = 1; pos <= p.m; ++pos) CHECK(seen[pos]);
        CHECK(std::is_sorted(p.message_positions.begin(), p.message_positions.end()));
        CHECK(std::is_sorted(p.parity_positions.begin(), p.parity_positions.end()));
    }
}

}  // TEST_SUITE
