#include "dnastore/bits.hpp"

#include <stdexcept>

namespace dnastore {

Bits bits_from_string(std::string_view s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string bits_to_string(const Bits& bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

int weight(const Bits& bits) {
    int w = 0;
    for (auto b : bits) w += b ? 1 : 0;
    return w;
}

Bits bytes_to_bits(std::span<const std::uint8_t> bytes) {
    Bits out;
    out.reserve(bytes.size() * 8);
    for (auto byte : bytes)
        for (int k = 7; k >= 0; --k) out.push_back((byte >> k) & 1u);
    return out;
}

std::vector<std::uint8_t> bits_to_bytes(const Bits& bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    return out;
}

}  // namespace dnastore
