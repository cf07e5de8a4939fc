#pragma once

#include <string>
#include <vector>

#include "dnastore/bits.hpp"
#include "dnastore/dnamap.hpp"
#include "dnastore/errors.hpp"
#include "dnastore/params.hpp"

namespace dnastore {

enum class CorrectedError { none, deletion, insertion, substitution };

const char* to_string(CorrectedError e);

struct DecodeReport {
    CorrectedError corrected_error = CorrectedError::none;
    std::string detail;                     // position/value info when known
    std::vector<int> redundancy_violations; // 1-based r indices (length-n path only)
    std::vector<std::string> warnings;
};

/// Strand decode failure carrying whatever was observed before giving up.
class StrandDecodeError : public DecodeError {
public:
    StrandDecodeError(const std::string& msg, DecodeReport report)
        : DecodeError(msg), report_(std::move(report)) {}
    const DecodeReport& report() const { return report_; }

private:
    DecodeReport report_;
};

/// Full pipeline: message -> VT word -> kernel word -> expanded word -> strand.
Strand encode_strand(const Bits& message, const CodeParams& params);

struct StrandDecode {
    Bits message;
    DecodeReport report;
};

/// Decodes a received strand of length n-1, n, or n+1 carrying at most one
/// indel or substitution. The leading extracted bit (the constant g_1 = 1)
/// is dropped, reducing every case to a single VT decode.
StrandDecode decode_strand(const std::string& received, const CodeParams& params);

}  // namespace dnastore
