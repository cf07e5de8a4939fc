#include "dnastore/vt.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "dnastore/errors.hpp"

namespace dnastore {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void require_length(const Bits& bits, int expected, const char* what) {
    if (static_cast<int>(bits.size()) != expected)
        throw std::invalid_argument(std::string(what) + ": expected length " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(bits.size()));
}

// ones strictly right of each index: suffix[i] = ones in bits[i..].
std::vector<int> suffix_ones(const Bits& bits) {
    std::vector<int> suffix(bits.size() + 1, 0);
    for (int i = static_cast<int>(bits.size()) - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + (bits[i] ? 1 : 0);
    return suffix;
}

}  // namespace

int weighted_sum(const Bits& bits, int modulus) {
    if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
    long long sum = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) sum += static_cast<long long>(i) + 1;
    return static_cast<int>(sum % modulus);
}

int deficiency(const Bits& bits, int modulus) {
    return (modulus - weighted_sum(bits, modulus)) % modulus;
}

std::vector<int> partition_deficiency(int d, const std::vector<int>& parity_positions) {
    int extra = 0;
    long long sum_powers = 0;
    for (int p : parity_positions) {
        if (p <= 0) throw std::invalid_argument("parity positions must be positive");
        if (is_power_of_two(p)) {
            sum_powers += p;
        } else {
            if (extra != 0) throw std::invalid_argument("parity set has more than one non-power member");
            extra = p;
        }
    }
    if (extra == 0) throw std::invalid_argument("parity set lacks its non-power member");
    if (d < 0 || d > sum_powers + extra)
        throw std::invalid_argument("deficiency " + std::to_string(d) + " not coverable by parity positions");

    std::vector<int> subset;
    int rest = d;
    if (rest > sum_powers) {
        subset.push_back(extra);
        rest -= extra;
    }
    // The powers present are exactly 2^0..2^t, so the remainder's binary
    // representation is the unique decomposition over them.
    assert(rest >= 0 && rest <= sum_powers);
    for (int p : parity_positions)
        if (is_power_of_two(p) && (rest & p)) subset.push_back(p);
    std::sort(subset.begin(), subset.end());

    long long check = 0;
    for (int p : subset) check += p;
    if (check != d) throw std::invalid_argument("deficiency not representable over parity positions");
    return subset;
}

Bits vt_encode(const Bits& message, const CodeParams& params) {
    require_length(message, params.l, "message");
    Bits word(params.m, 0);
    for (std::size_t k = 0; k < message.size(); ++k)
        word[params.message_positions[k] - 1] = message[k] ? 1 : 0;
    int d = deficiency(word, params.vt_modulus);
    for (int pos : partition_deficiency(d, params.parity_positions)) word[pos - 1] = 1;
    assert(weighted_sum(word, params.vt_modulus) == 0);
    return word;
}

Bits extract_message(const Bits& word, const CodeParams& params) {
    require_length(word, params.m, "VT word");
    Bits message;
    message.reserve(params.message_positions.size());
    for (int pos : params.message_positions) message.push_back(word[pos - 1]);
    return message;
}

VtDecodeResult vt_decode_substitution(const Bits& received, int m) {
    require_length(received, m, "received word");
    const int modulus = 2 * m + 1;
    const int d = deficiency(received, modulus);

    VtDecodeResult result{received, 0, -1};
    if (d == 0) return result;
    if (d <= m) {
        // a 1 at position d was flipped to 0
        if (received[d - 1] != 0)
            throw DecodeError("uncorrectable substitution pattern: position " + std::to_string(d) +
                              " already holds 1");
        result.word[d - 1] = 1;
        result.position = d;
        result.bit = 1;
    } else {
        const int pos = modulus - d;
        if (received[pos - 1] != 1)
            throw DecodeError("uncorrectable substitution pattern: position " + std::to_string(pos) +
                              " already holds 0");
        result.word[pos - 1] = 0;
        result.position = pos;
        result.bit = 0;
    }
    return result;
}

VtDecodeResult vt_decode_deletion(const Bits& received, int m) {
    require_length(received, m - 1, "received word");
    const int modulus = 2 * m + 1;
    const int d = deficiency(received, modulus);
    const int w = weight(received);
    const auto suffix = suffix_ones(received);

    VtDecodeResult result;
    if (d <= w) {
        // deleted bit was 0: insert it back with exactly d ones to its right
        int slot = -1;
        for (int k = 0; k <= static_cast<int>(received.size()); ++k)
            if (suffix[k] == d) {
                slot = k;
                break;
            }
        if (slot < 0) throw DecodeError("uncorrectable deletion pattern");
        result.word = received;
        result.word.insert(result.word.begin() + slot, 0);
        result.position = slot + 1;
        result.bit = 0;
    } else {
        // deleted bit was 1: insert it back with exactly d-w-1 zeros to its left
        const int zeros_needed = d - w - 1;
        const int zeros_total = static_cast<int>(received.size()) - w;
        if (zeros_needed > zeros_total)
            throw DecodeError("uncorrectable deletion pattern: required insertion point does not exist");
        int slot = 0, zeros = 0;
        while (slot < static_cast<int>(received.size()) && zeros < zeros_needed) {
            if (received[slot] == 0) ++zeros;
            ++slot;
        }
        result.word = received;
        result.word.insert(result.word.begin() + slot, 1);
        result.position = slot + 1;
        result.bit = 1;
    }
    assert(weighted_sum(result.word, modulus) == 0);
    return result;
}

VtDecodeResult vt_decode_insertion(const Bits& received, int m) {
    require_length(received, m + 1, "received word");
    const int modulus = 2 * m + 1;
    const int e = weighted_sum(received, modulus);
    const auto suffix = suffix_ones(received);

    // Any removal matching one of the two rules lands exactly on checksum 0,
    // and every zero-checksum removal matches a rule (no mod wraparound is
    // possible: position + ones-right never exceeds m+1).
    int slot = -1;
    int bit = -1;
    for (int q = 0; q < static_cast<int>(received.size()); ++q) {
        if (received[q] == 0 && suffix[q + 1] == e) {
            slot = q;
            bit = 0;
            break;
        }
    }
    if (slot < 0) {
        for (int q = 0; q < static_cast<int>(received.size()); ++q) {
            if (received[q] == 1 && (q + 1) + suffix[q + 1] == e) {
                slot = q;
                bit = 1;
                break;
            }
        }
    }
    if (slot < 0)
        throw DecodeError("uncorrectable insertion pattern: no single-bit removal restores the checksum");

    VtDecodeResult result;
    result.word = received;
    result.word.erase(result.word.begin() + slot);
    result.position = slot + 1;
    result.bit = bit;
    assert(weighted_sum(result.word, modulus) == 0);
    return result;
}

}  // namespace dnastore
