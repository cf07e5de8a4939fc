#include "dnastore/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dnastore {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

CodeParams derive_params(int n) {
    if (n < 6)
        throw std::invalid_argument("strand length too short for nonzero message length (need n >= 6, got " +
                                    std::to_string(n) + ")");
    if (n > (1 << 20))
        throw std::invalid_argument("strand length too large (max " + std::to_string(1 << 20) + ")");

    CodeParams p;
    p.n = n;
    p.m = n - 1;
    p.vt_modulus = 2 * n - 1;

    for (int v = 1; v <= p.m; v *= 2) p.parity_positions.push_back(v);
    // The powers alone cover deficiencies up to their sum; one extra member
    // extends coverage to the full range [0, 2m]. When m is a power of two it
    // is already in the set, so m-1 steps in instead.
    p.parity_positions.push_back(is_power_of_two(p.m) ? p.m - 1 : p.m);
    std::sort(p.parity_positions.begin(), p.parity_positions.end());

    std::size_t next = 0;
    for (int pos = 1; pos <= p.m; ++pos) {
        if (next < p.parity_positions.size() && p.parity_positions[next] == pos)
            ++next;
        else
            p.message_positions.push_back(pos);
    }
    p.l = static_cast<int>(p.message_positions.size());
    return p;
}

}  // namespace dnastore
