#include "dnastore/framing.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dnastore/errors.hpp"

namespace dnastore {

namespace {

std::uint64_t parse_field(const std::string& token, const std::string& key) {
    if (token.rfind(key, 0) != 0)
        throw IoError("archive header: expected '" + key + "<value>', got '" + token + "'");
    const std::string digits = token.substr(key.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw IoError("archive header: bad value in '" + token + "'");
    try {
        return std::stoull(digits);
    } catch (const std::exception&) {
        throw IoError("archive header: value out of range in '" + token + "'");
    }
}

}  // namespace

StrandArchive encode_stream(std::span<const std::uint8_t> payload, const CodeParams& params) {
    StrandArchive archive;
    archive.n = params.n;
    archive.payload_bits = static_cast<std::uint64_t>(payload.size()) * 8;

    Bits bits = bytes_to_bits(payload);
    if (bits.size() % params.l != 0)
        bits.resize(bits.size() + (params.l - bits.size() % params.l), 0);

    archive.strands.reserve(bits.size() / params.l);
    for (std::size_t start = 0; start < bits.size(); start += params.l) {
        const Bits block(bits.begin() + start, bits.begin() + start + params.l);
        archive.strands.push_back(encode_strand(block, params));
    }
    return archive;
}

StreamDecode decode_stream(const StrandArchive& archive, const CodeParams& params, bool force) {
    if (archive.n != params.n)
        throw std::invalid_argument("archive encoded with n=" + std::to_string(archive.n) +
                                    ", parameters say n=" + std::to_string(params.n));
    const std::uint64_t blocks = (archive.payload_bits + params.l - 1) / params.l;
    if (archive.strands.size() != blocks)
        throw IoError("archive strand count " + std::to_string(archive.strands.size()) +
                      " does not match header (expected " + std::to_string(blocks) + ")");

    StreamDecode result;
    result.outcomes.reserve(archive.strands.size());
    Bits bits;
    bits.reserve(blocks * params.l);
    for (std::size_t i = 0; i < archive.strands.size(); ++i) {
        try {
            auto decoded = decode_strand(archive.strands[i], params);
            bits.insert(bits.end(), decoded.message.begin(), decoded.message.end());
            result.outcomes.push_back({true, "", std::move(decoded.report)});
        } catch (const StrandDecodeError& e) {
            if (!force)
                throw DecodeError("strand " + std::to_string(i + 1) + ": " + e.what());
            bits.insert(bits.end(), params.l, 0);
            result.outcomes.push_back({false, e.what(), e.report()});
            ++result.failed;
        }
    }

    bits.resize(archive.payload_bits);  // padding bits never leak
    result.bytes = bits_to_bytes(bits);
    return result;
}

void write_archive(std::ostream& os, const StrandArchive& archive) {
    os << "DNAARC 1 n=" << archive.n << " bits=" << archive.payload_bits << "\n";
    for (const auto& strand : archive.strands) os << strand << "\n";
}

StrandArchive read_archive(std::istream& is) {
    StrandArchive archive;
    bool have_header = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        if (!have_header) {
            std::istringstream fields(line);
            std::string magic, version, n_field, bits_field, rest;
            fields >> magic >> version >> n_field >> bits_field;
            if (magic != "DNAARC")
                throw IoError("line " + std::to_string(lineno) + ": missing DNAARC header");
            if (version != "1")
                throw IoError("unsupported archive version '" + version + "'");
            if (fields >> rest)
                throw IoError("archive header: unexpected trailing field '" + rest + "'");
            const std::uint64_t n = parse_field(n_field, "n=");
            if (n == 0 || n > std::uint64_t{1} << 20)
                throw IoError("archive header: implausible strand length " + std::to_string(n));
            archive.n = static_cast<int>(n);
            archive.payload_bits = parse_field(bits_field, "bits=");
            have_header = true;
            continue;
        }

        for (char c : line)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
                throw IoError("line " + std::to_string(lineno) + ": invalid base '" +
                              std::string(1, c) + "'");
        archive.strands.push_back(line);
    }
    if (!have_header) throw IoError("missing DNAARC header");
    return archive;
}

}  // namespace dnastore
