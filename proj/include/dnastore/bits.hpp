#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnastore {

// Bit sequence, one byte per bit (values 0/1). The coding rules speak of
// 1-indexed positions; storage is 0-indexed, so position p lives at [p-1].
using Bits = std::vector<std::uint8_t>;

Bits bits_from_string(std::string_view s);
std::string bits_to_string(const Bits& bits);

int weight(const Bits& bits);

// MSB-first byte <-> bit packing (framing layer order).
Bits bytes_to_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(const Bits& bits);

}  // namespace dnastore
