#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnastore/dnamap.hpp"
#include "dnastore/params.hpp"

namespace dnastore {

/// Exact full-codebook statistics: no sampling, all pairs scanned.
struct AnalysisReport {
    int n = 0;
    std::uint64_t code_size = 0;  // 2^l
    int min_hamming = 0;          // min H(x, y) over distinct pairs
    int min_reverse = 0;          // min H(x^R, y) over all pairs, including x = y
    int min_rc = 0;               // min H(x^RC, y) over all pairs, including x = y
    int rc_formula_value = 0;     // 2 * floor((n-3)/2)
    int gc_min = 0;
    int gc_max = 0;
    double gc_target = 0.0;       // n/2, the design's fixed GC weight
};

/// All 2^l codewords, messages taken in ascending binary order.
/// Throws std::invalid_argument when 2^l exceeds `cap`, naming the cap needed.
std::vector<Strand> enumerate_codebook(const CodeParams& params,
                                       std::uint64_t cap = std::uint64_t{1} << 20);

AnalysisReport analyze(const CodeParams& params,
                       std::uint64_t cap = std::uint64_t{1} << 20);

struct ConstraintThresholds {
    std::optional<int> d_min;         // Hamming check skipped when absent
    std::optional<int> rc_min;        // defaults to rc_formula_value
    std::optional<double> gc_target;  // defaults to n/2
};

struct ConstraintResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Evaluates the Hamming / reverse-complement / GC-content constraints
/// against the supplied thresholds. GC is a fixed-value check: tolerance 0
/// for even n, +-1 for odd n.
std::vector<ConstraintResult> check_constraints(const AnalysisReport& report,
                                                const ConstraintThresholds& thresholds);

}  // namespace dnastore
