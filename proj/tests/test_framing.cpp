#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "dnastore/channel.hpp"
#include "dnastore/errors.hpp"
#include "dnastore/framing.hpp"
#include "dnastore/params.hpp"

using namespace dnastore;

namespace {

std::vector<std::uint8_t> random_payload(std::size_t size, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> out(size);
    for (auto& byte : out) byte = static_cast<std::uint8_t>(rng.next() & 0xff);
    return out;
}

}  // namespace

TEST_SUITE("framing") {

TEST_CASE("empty payload gives an empty archive") {
    const auto p = derive_params(10);
    const auto archive = encode_stream(std::vector<std::uint8_t>{}, p);
    CHECK(archive.payload_bits == 0);
    CHECK(archive.strands.empty());
    const auto decoded = decode_stream(archive, p);
    CHECK(decoded.bytes.empty());
}

TEST_CASE("one byte 0xB0 encodes to the two known strands") {
    const auto p = derive_params(10);
    const std::vector<std::uint8_t> payload{0xB0};
    const auto archive = encode_stream(payload, p);
    REQUIRE(archive.strands.size() == 2);
    CHECK(archive.payload_bits == 8);
    CHECK(archive.strands[0] == "TGGGCCTTAA");  // bits 1011
    CHECK(archive.strands[1] == "GCCCCAAAAA");  // bits 0000
    CHECK(decode_stream(archive, p).bytes == payload);
}

TEST_CASE("1 KiB payload at n=10 becomes 2048 strands") {
    const auto p = derive_params(10);
    const auto payload = random_payload(1024, 1);
    const auto archive = encode_stream(payload, p);
    CHECK(archive.payload_bits == 8192);
    CHECK(archive.strands.size() == 2048);
}

TEST_CASE("padding never leaks: bit counts that do not divide l") {
    const auto p = derive_params(9);  // l = 3
    const std::vector<std::uint8_t> payload{0xA5};
    const auto archive = encode_stream(payload, p);
    CHECK(archive.strands.size() == 3);  // ceil(8/3)
    const auto decoded = decode_stream(archive, p);
    CHECK(decoded.bytes == payload);
}

TEST_CASE("round-trip over random payloads for n in {6, 10, 13, 16}") {
    for (int n : {6, 10, 13, 16}) {
        const auto p = derive_params(n);
        for (std::size_t size : {std::size_t{1}, std::size_t{317}, std::size_t{4096}}) {
            const auto payload = random_payload(size, 1000 + size + n);
            const auto decoded = decode_stream(encode_stream(payload, p), p);
            REQUIRE(decoded.bytes == payload);
            REQUIRE(decoded.failed == 0);
        }
    }
}

TEST_CASE("64 KiB round-trip for n in {6, 10, 13, 16}") {
    for (int n : {6, 10, 13, 16}) {
        const auto p = derive_params(n);
        const auto payload = random_payload(64 * 1024, 77 + n);
        REQUIRE(decode_stream(encode_stream(payload, p), p).bytes == payload);
    }
}

TEST_CASE("a hand-made archive with a sub-byte bit count decodes with zero fill") {
    const auto p = derive_params(10);
    std::istringstream is("DNAARC 1 n=10 bits=4\nTGGGCCTTAA\n");
    const auto decoded = decode_stream(read_archive(is), p);
    CHECK(decoded.bytes == std::vector<std::uint8_t>{0xB0});
}

TEST_CASE("archive text format is byte-stable") {
    const auto p = derive_params(10);
    const auto archive = encode_stream(std::vector<std::uint8_t>{0xB0}, p);
    std::ostringstream os;
    write_archive(os, archive);
    CHECK(os.str() == "DNAARC 1 n=10 bits=8\nTGGGCCTTAA\nGCCCCAAAAA\n");

    std::istringstream is(os.str());
    const auto parsed = read_archive(is);
    CHECK(parsed.n == archive.n);
    CHECK(parsed.payload_bits == archive.payload_bits);
    CHECK(parsed.strands == archive.strands);
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream is("# produced by a test\n\nDNAARC 1 n=10 bits=8\n# two strands\nTGGGCCTTAA\n\nGCCCCAAAAA\n");
    const auto parsed = read_archive(is);
    CHECK(parsed.strands.size() == 2);
}

TEST_CASE("malformed archives are refused") {
    std::istringstream missing("TGGGCCTTAA\n");
    CHECK_THROWS_AS(read_archive(missing), IoError);

    std::istringstream version("DNAARC 2 n=10 bits=8\nTGGGCCTTAA\n");
    CHECK_THROWS_AS(read_archive(version), IoError);

    std::istringstream alphabet("DNAARC 1 n=10 bits=8\nTGGGCCTTAX\nGCCCCAAAAA\n");
    CHECK_THROWS_AS(read_archive(alphabet), IoError);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_archive(empty), IoError);
}

TEST_CASE("strand count must match the header") {
    const auto p = derive_params(10);
    std::istringstream is("DNAARC 1 n=10 bits=8\nTGGGCCTTAA\n");
    const auto parsed = read_archive(is);
    CHECK_THROWS_AS(decode_stream(parsed, p), IoError);
}

TEST_CASE("archive n must match the parameters") {
    const auto p = derive_params(12);
    const auto archive = encode_stream(std::vector<std::uint8_t>{0xB0}, derive_params(10));
    CHECK_THROWS_AS(decode_stream(archive, p), std::invalid_argument);
}

TEST_CASE("a corrupted strand is corrected and reported") {
    const auto p = derive_params(10);
    auto archive = encode_stream(std::vector<std::uint8_t>{0xB0}, p);
    archive.strands[0] = "TGGCCTTAA";  // base 4 deleted
    const auto decoded = decode_stream(archive, p);
    CHECK(decoded.bytes == std::vector<std::uint8_t>{0xB0});
    REQUIRE(decoded.outcomes.size() == 2);
    CHECK(decoded.outcomes[0].report.corrected_error == CorrectedError::deletion);
    CHECK(decoded.outcomes[1].report.corrected_error == CorrectedError::none);
}

TEST_CASE("an uncorrectable strand names its index; force yields partial output") {
    const auto p = derive_params(10);
    auto archive = encode_stream(std::vector<std::uint8_t>{0xB0, 0x5A}, p);
    archive.strands[2] = "TGGGCCTT";  // length n-2
    CHECK_THROWS_WITH_AS(decode_stream(archive, p), doctest::Contains("strand 3"), DecodeError);

    const auto forced = decode_stream(archive, p, true);
    CHECK(forced.failed == 1);
    REQUIRE(forced.outcomes.size() == 4);
    CHECK(!forced.outcomes[2].ok);
    CHECK(forced.outcomes[2].error.find("uncorrectable length") != std::string::npos);
    // the other strands still decode; the failed block reads as zeros
    CHECK(forced.bytes == std::vector<std::uint8_t>{0xB0, 0x0A});
}

TEST_CASE("every strand corrupted once still round-trips") {
    const auto p = derive_params(10);
    const auto payload = random_payload(256, 5);
    auto archive = encode_stream(payload, p);
    ErrorMix mix{1.0 / 3, 1.0 / 3, 1.0 / 3, 0};
    for (std::size_t i = 0; i < archive.strands.size(); ++i)
        archive.strands[i] = random_event(archive.strands[i], mix, derive_seed(3, i)).first;
    const auto decoded = decode_stream(archive, p);
    CHECK(decoded.bytes == payload);
}

}  // TEST_SUITE
