#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "dnastore/kernel.hpp"
#include "dnastore/params.hpp"
#include "dnastore/vt.hpp"

using namespace dnastore;

namespace {

Bits b(const char* s) { return bits_from_string(s); }

std::vector<Bits> all_messages(int l) {
    std::vector<Bits> out;
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << l); ++value) {
        Bits message(l);
        for (int i = 0; i < l; ++i) message[i] = (value >> (l - 1 - i)) & 1u;
        out.push_back(message);
    }
    return out;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("kernel encoding: leading 1 plus even-weight closure") {
    CHECK(bits_to_string(kernel_encode(b("111001100"))) == "11110011000");
    CHECK(bits_to_string(kernel_encode(b("000000000"))) == "10000000001");
    CHECK(bits_to_string(kernel_encode(b("001011111"))) == "10010111111");
}

TEST_CASE("expansion reproduces the worked example") {
    const auto p10 = derive_params(10);
    CHECK(bits_to_string(expand(b("11110011000"), p10)) == "11110011000111000011");
    CHECK(bits_to_string(expand(b("10000000001"), p10)) == "10000000001000011111");

    const auto p7 = derive_params(7);  // odd n: no middle redundancy case
    CHECK(bits_to_string(expand(b("10000001"), p7)) == "10000001000111");
}

TEST_CASE("redundancy verification flags exactly the recomputation mismatches") {
    const auto p = derive_params(10);
    const Bits expanded = b("11110011000111000011");
    CHECK(verify_redundancy(expanded, p).empty());

    Bits r1_flipped = expanded;
    r1_flipped[11] ^= 1;  // bit 12 = r_1
    CHECK(verify_redundancy(r1_flipped, p) == std::vector<int>{1});

    Bits g5_flipped = expanded;
    g5_flipped[4] ^= 1;  // kernel bit g_5 feeds r_4
    CHECK(verify_redundancy(g5_flipped, p) == std::vector<int>{4});
}

TEST_CASE("strip inverts the kernel stage") {
    const auto p = derive_params(10);
    CHECK(bits_to_string(strip(b("11110011000111000011"), p)) == "111001100");
    CHECK(bits_to_string(strip(b("10000000001000011111"), p)) == "000000000");
}

TEST_CASE("round-trip and invariants over every codeword, n in [6, 12]") {
    for (int n = 6; n <= 12; ++n) {
        const auto p = derive_params(n);
        for (const auto& message : all_messages(p.l)) {
            const Bits word = vt_encode(message, p);
            const Bits kw = kernel_encode(word);
            REQUIRE(kw.size() == static_cast<std::size_t>(n + 1));
            REQUIRE(kw[0] == 1);
            REQUIRE(weight(kw) % 2 == 0);

            const Bits expanded = expand(kw, p);
            REQUIRE(expanded.size() == static_cast<std::size_t>(2 * n));
            REQUIRE(verify_redundancy(expanded, p).empty());
            REQUIRE(strip(expanded, p) == word);

            if (n % 2 == 0) {
                // exactly one of the two unzoned pairs matches; this is what
                // pins the GC weight to exactly n/2 for even n
                const bool leading_match = kw[0] == kw[n];                   // g_1 vs g_{n+1}
                const bool middle_match = kw[n / 2] == expanded[n + n / 2];  // g_{n/2+1} vs r_{n/2}
                REQUIRE(leading_match != middle_match);
            }
        }
    }
}

TEST_CASE("malformed kernel words are rejected") {
    const auto p = derive_params(10);
    CHECK_THROWS_AS(expand(b("01110011000"), p), std::invalid_argument);  // leading 0
    CHECK_THROWS_AS(expand(b("11110011001"), p), std::invalid_argument);  // odd weight
    CHECK_THROWS_AS(expand(b("111100110"), p), std::invalid_argument);    // wrong length
    CHECK_THROWS_AS(strip(b("1111"), p), std::invalid_argument);
}

}  // TEST_SUITE
