#pragma once

#include "dnastore/bits.hpp"
#include "dnastore/params.hpp"

namespace dnastore {

/// 1 || word || p, with p chosen so the total weight is even. Length n+1.
Bits kernel_encode(const Bits& vt_word);

/// Appends the n-1 redundancy bits r_1..r_{n-1} to a kernel word g_1..g_{n+1}:
///   r_i = g_{i+1}                 for 1 <= i <= floor((n-1)/2)
///   r_i = g_1 + g_{i+1}  (mod 2)  for ceil((n+1)/2) <= i <= n-1
///   r_{n/2} = g_{n/2+1} + g_{n+1} (mod 2) when n is even
/// Result length 2n.
Bits expand(const Bits& kernel_word, const CodeParams& params);

/// Recomputes each redundancy bit from the kernel part and returns the
/// 1-based indices that disagree. Detection only, never used for correction.
std::vector<int> verify_redundancy(const Bits& expanded, const CodeParams& params);

/// g_2..g_n: the VT word back out of an expanded word.
Bits strip(const Bits& expanded, const CodeParams& params);

}  // namespace dnastore
