#pragma once

#include <vector>

namespace dnastore {

/// Code constants derived from the strand length n.
///
/// The VT layer works on words of m = n-1 bits with checksum modulus
/// 2m+1 = 2n-1. Positions 1..m split into parity positions (reserved for
/// checksum balancing) and message positions (payload). The parity set is
/// the powers of two up to m plus one extra member (m itself, or m-1 when
/// m is a power of two) so that every deficiency in [0, 2m] is a subset sum.
struct CodeParams {
    int n = 0;           // strand length in bases
    int m = 0;           // VT word length in bits, m = n-1
    int vt_modulus = 0;  // 2m+1 = 2n-1
    int l = 0;           // message length in bits, l = m - |parity_positions|
    std::vector<int> parity_positions;   // ascending, 1-based
    std::vector<int> message_positions;  // ascending, 1-based complement
};

/// Throws std::invalid_argument for n < 6 (the smallest n with l >= 1).
CodeParams derive_params(int n);

}  // namespace dnastore
