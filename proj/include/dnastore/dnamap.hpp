#pragma once

#include <string>

#include "dnastore/bits.hpp"

namespace dnastore {

// Uppercase A/C/G/T, no separators. Codec output is always length n;
// received strands may be n-1 or n+1.
using Strand = std::string;

/// Bit pairs to bases, pair j = (b_j, b_{j+n}): 00->C, 01->A, 10->T, 11->G.
Strand to_strand(const Bits& expanded);

/// Exact inverse of to_strand. Throws std::invalid_argument on a bad base.
Bits from_strand(const Strand& strand);

/// First bit of each base's pair code: G,T -> 1; A,C -> 0. Any length.
Bits first_bits(const std::string& bases);

Strand reversed(const Strand& strand);
Strand reverse_complement(const Strand& strand);

/// Positions where the two strands differ. Throws on length mismatch.
int hamming(const Strand& a, const Strand& b);

/// Number of G or C bases.
int gc_weight(const Strand& strand);

}  // namespace dnastore
