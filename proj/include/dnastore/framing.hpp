#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dnastore/codec.hpp"
#include "dnastore/params.hpp"

namespace dnastore {

/// Ordered strand collection plus the metadata needed to invert exactly.
/// Text form:  line 1 "DNAARC 1 n=<n> bits=<payload_bits>", then one strand
/// per line; lines starting with '#' and blank lines are ignored.
struct StrandArchive {
    int n = 0;
    std::uint64_t payload_bits = 0;
    std::vector<Strand> strands;
};

/// Payload bits MSB-first per byte, split into l-bit blocks (last block
/// zero-padded), one strand per block.
StrandArchive encode_stream(std::span<const std::uint8_t> payload, const CodeParams& params);

struct StrandOutcome {
    bool ok = true;
    std::string error;  // set when !ok
    DecodeReport report;
};

struct StreamDecode {
    std::vector<std::uint8_t> bytes;
    std::vector<StrandOutcome> outcomes;  // one per strand, in order
    std::size_t failed = 0;
};

/// Decodes strands in order and truncates the concatenated bits to
/// payload_bits. Without `force`, the first uncorrectable strand throws
/// DecodeError naming its (1-based) index; with `force`, failed strands
/// contribute zero bits and are recorded in the outcome list.
StreamDecode decode_stream(const StrandArchive& archive, const CodeParams& params,
                           bool force = false);

void write_archive(std::ostream& os, const StrandArchive& archive);

/// Throws IoError on a missing/garbled header or a non-ACGT strand line.
/// Strand lengths are not gated here; decode_stream reports those per strand.
StrandArchive read_archive(std::istream& is);

}  // namespace dnastore
