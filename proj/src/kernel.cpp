#include "dnastore/kernel.hpp"

#include <stdexcept>
#include <string>

namespace dnastore {

namespace {

void require_kernel_word(const Bits& kw, const CodeParams& params) {
    if (static_cast<int>(kw.size()) != params.n + 1)
        throw std::invalid_argument("kernel word: expected length " + std::to_string(params.n + 1) +
                                    ", got " + std::to_string(kw.size()));
    if (kw[0] != 1) throw std::invalid_argument("kernel word must start with 1");
    if (weight(kw) % 2 != 0) throw std::invalid_argument("kernel word must have even weight");
}

// r_i recomputed from kernel bits g_1..g_{n+1} (1-based i in [1, n-1]).
std::uint8_t redundancy_bit(const Bits& g, int n, int i) {
    if (i <= (n - 1) / 2) return g[i];                        // g_{i+1}
    if (i >= (n + 2) / 2) return g[0] ^ g[i];                 // g_1 + g_{i+1}
    return g[n / 2] ^ g[n];                                   // i = n/2, even n only
}

}  // namespace

Bits kernel_encode(const Bits& vt_word) {
    Bits out;
    out.reserve(vt_word.size() + 2);
    out.push_back(1);
    out.insert(out.end(), vt_word.begin(), vt_word.end());
    out.push_back(static_cast<std::uint8_t>((1 + weight(vt_word)) % 2));
    return out;
}

Bits expand(const Bits& kernel_word, const CodeParams& params) {
    require_kernel_word(kernel_word, params);
    Bits out = kernel_word;
    out.reserve(2 * params.n);
    for (int i = 1; i <= params.n - 1; ++i)
        out.push_back(redundancy_bit(kernel_word, params.n, i));
    return out;
}

std::vector<int> verify_redundancy(const Bits& expanded, const CodeParams& params) {
    if (static_cast<int>(expanded.size()) != 2 * params.n)
        throw std::invalid_argument("expanded word: expected length " + std::to_string(2 * params.n) +
                                    ", got " + std::to_string(expanded.size()));
    std::vector<int> violations;
    for (int i = 1; i <= params.n - 1; ++i)
        if (expanded[params.n + i] != redundancy_bit(expanded, params.n, i))
            violations.push_back(i);
    return violations;
}

Bits strip(const Bits& expanded, const CodeParams& params) {
    if (static_cast<int>(expanded.size()) != 2 * params.n)
        throw std::invalid_argument("expanded word: expected length " + std::to_string(2 * params.n) +
                                    ", got " + std::to_string(expanded.size()));
    return Bits(expanded.begin() + 1, expanded.begin() + params.n);
}

}  // namespace dnastore
