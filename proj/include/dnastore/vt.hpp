#pragma once

#include "dnastore/bits.hpp"
#include "dnastore/params.hpp"

namespace dnastore {

/// Sum of i*b_i over 1-indexed positions, reduced mod `modulus`.
int weighted_sum(const Bits& bits, int modulus);

/// Amount missing to reach checksum 0: (-weighted_sum) mod modulus.
/// Zero exactly when `bits` is a valid VT word for this modulus.
int deficiency(const Bits& bits, int modulus);

/// Deterministic subset of parity positions summing exactly to d.
/// If d exceeds the sum of the power-of-two members, the non-power extra
/// member is taken first; the remainder is binary-decomposed over the powers.
std::vector<int> partition_deficiency(int d, const std::vector<int>& parity_positions);

/// Systematic VT encoding: message bits go to message positions, then a
/// subset of parity positions is raised to cancel the deficiency.
Bits vt_encode(const Bits& message, const CodeParams& params);

/// Message bits read back from the message positions.
Bits extract_message(const Bits& word, const CodeParams& params);

struct VtDecodeResult {
    Bits word;         // recovered codeword, length m
    int position = 0;  // 1-based position of the edit (0 = input was clean)
    int bit = -1;      // bit value inserted / removed / written at `position`
};

// Single-error decoders over modulus 2m+1. Each throws DecodeError when the
// input is not reachable from any codeword by the advertised single edit.
VtDecodeResult vt_decode_substitution(const Bits& received, int m);  // length m
VtDecodeResult vt_decode_deletion(const Bits& received, int m);      // length m-1
VtDecodeResult vt_decode_insertion(const Bits& received, int m);     // length m+1

}  // namespace dnastore
