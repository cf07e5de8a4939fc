#include "dnastore/codec.hpp"

#include <string>

#include "dnastore/kernel.hpp"
#include "dnastore/vt.hpp"

namespace dnastore {

const char* to_string(CorrectedError e) {
    switch (e) {
        case CorrectedError::none: return "none";
        case CorrectedError::deletion: return "deletion";
        case CorrectedError::insertion: return "insertion";
        case CorrectedError::substitution: return "substitution";
    }
    return "?";
}

Strand encode_strand(const Bits& message, const CodeParams& params) {
    return to_strand(expand(kernel_encode(vt_encode(message, params)), params));
}

StrandDecode decode_strand(const std::string& received, const CodeParams& params) {
    const int n = params.n;
    const int len = static_cast<int>(received.size());
    DecodeReport report;

    if (len < n - 1 || len > n + 1)
        throw StrandDecodeError("uncorrectable length: got " + std::to_string(len) +
                                    ", expected " + std::to_string(n - 1) + ".." +
                                    std::to_string(n + 1),
                                report);

    const Bits extracted = first_bits(received);
    if (len == n && extracted[0] != 1)
        report.warnings.push_back("leading bit is 0, expected constant 1");

    // g_1 carries no message, so dropping the first extracted bit reduces all
    // three length cases to a single VT decode (errors at base 1 included).
    const Bits rest(extracted.begin() + 1, extracted.end());

    Bits word;
    try {
        if (len == n - 1) {
            auto vt = vt_decode_deletion(rest, params.m);
            word = std::move(vt.word);
            report.corrected_error = CorrectedError::deletion;
            report.detail = "restored bit " + std::to_string(vt.bit) + " at vt position " +
                            std::to_string(vt.position);
        } else if (len == n + 1) {
            auto vt = vt_decode_insertion(rest, params.m);
            word = std::move(vt.word);
            report.corrected_error = CorrectedError::insertion;
            report.detail = "removed inserted bit " + std::to_string(vt.bit) +
                            " at vt position " + std::to_string(vt.position);
        } else {
            auto vt = vt_decode_substitution(rest, params.m);
            word = std::move(vt.word);
            if (vt.position != 0) {
                report.corrected_error = CorrectedError::substitution;
                report.detail = "flipped vt position " + std::to_string(vt.position) + " to " +
                                std::to_string(vt.bit);
            }
        }
    } catch (const DecodeError& e) {
        throw StrandDecodeError(e.what(), report);
    }

    if (len == n)
        report.redundancy_violations = verify_redundancy(from_strand(received), params);

    return {extract_message(word, params), std::move(report)};
}

}  // namespace dnastore
