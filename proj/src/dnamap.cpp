#include "dnastore/dnamap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dnastore {

namespace {

// index = 2*b_j + b_{j+n}
constexpr char kPairToBase[4] = {'C', 'A', 'T', 'G'};

[[noreturn]] void bad_base(char c, std::size_t pos) {
    throw std::invalid_argument(std::string("invalid base '") + c + "' at position " +
                                std::to_string(pos + 1));
}

}  // namespace

Strand to_strand(const Bits& expanded) {
    if (expanded.size() % 2 != 0 || expanded.empty())
        throw std::invalid_argument("expanded word must have even, nonzero length");
    const std::size_t n = expanded.size() / 2;
    Strand out(n, '?');
    for (std::size_t j = 0; j < n; ++j)
        out[j] = kPairToBase[2 * expanded[j] + expanded[j + n]];
    return out;
}

Bits from_strand(const Strand& strand) {
    const std::size_t n = strand.size();
    Bits out(2 * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        switch (strand[j]) {
            case 'C': break;
            case 'A': out[j + n] = 1; break;
            case 'T': out[j] = 1; break;
            case 'G': out[j] = 1; out[j + n] = 1; break;
            default: bad_base(strand[j], j);
        }
    }
    return out;
}

Bits first_bits(const std::string& bases) {
    Bits out;
    out.reserve(bases.size());
    for (std::size_t j = 0; j < bases.size(); ++j) {
        switch (bases[j]) {
            case 'G':
            case 'T': out.push_back(1); break;
            case 'A':
            case 'C': out.push_back(0); break;
            default: bad_base(bases[j], j);
        }
    }
    return out;
}

Strand reversed(const Strand& strand) { return Strand(strand.rbegin(), strand.rend()); }

Strand reverse_complement(const Strand& strand) {
    Strand out;
    out.reserve(strand.size());
    for (auto it = strand.rbegin(); it != strand.rend(); ++it) {
        switch (*it) {
            case 'A': out.push_back('T'); break;
            case 'T': out.push_back('A'); break;
            case 'C': out.push_back('G'); break;
            case 'G': out.push_back('C'); break;
            default: bad_base(*it, strand.size() - 1 - (it - strand.rbegin()));
        }
    }
    return out;
}

int hamming(const Strand& a, const Strand& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming distance requires equal lengths (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    int distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++distance;
    return distance;
}

int gc_weight(const Strand& strand) {
    return static_cast<int>(std::count_if(strand.begin(), strand.end(),
                                          [](char c) { return c == 'G' || c == 'C'; }));
}

}  // namespace dnastore
