#include "dnastore/analysis.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "dnastore/codec.hpp"

namespace dnastore {

namespace {

struct PairMins {
    int hamming = std::numeric_limits<int>::max();
    int reverse = std::numeric_limits<int>::max();
    int rc = std::numeric_limits<int>::max();
};

// 5 -> "5", 3.5 -> "3.5"
std::string format_number(double v) {
    if (v == static_cast<long long>(v)) return std::to_string(static_cast<long long>(v));
    std::ostringstream os;
    os << v;
    return os.str();
}

// Scans rows i = first, first+stride, ... against all j >= i. Striding keeps
// the triangular workload balanced across workers.
PairMins scan_rows(const std::vector<Strand>& code, const std::vector<Strand>& rev,
                   const std::vector<Strand>& rc, std::size_t first, std::size_t stride) {
    PairMins mins;
    for (std::size_t i = first; i < code.size(); i += stride) {
        for (std::size_t j = i; j < code.size(); ++j) {
            if (i != j) mins.hamming = std::min(mins.hamming, hamming(code[i], code[j]));
            mins.reverse = std::min(mins.reverse, hamming(rev[i], code[j]));
            mins.rc = std::min(mins.rc, hamming(rc[i], code[j]));
        }
    }
    return mins;
}

}  // namespace

std::vector<Strand> enumerate_codebook(const CodeParams& params, std::uint64_t cap) {
    if (params.l >= 63 || (std::uint64_t{1} << params.l) > cap) {
        const std::string size = params.l < 63 ? std::to_string(std::uint64_t{1} << params.l)
                                               : ("2^" + std::to_string(params.l));
        throw std::invalid_argument("codebook size " + size + " exceeds cap " + std::to_string(cap) +
                                    "; rerun with cap >= " + size);
    }
    const std::uint64_t count = std::uint64_t{1} << params.l;
    std::vector<Strand> code;
    code.reserve(count);
    Bits message(params.l, 0);
    for (std::uint64_t value = 0; value < count; ++value) {
        for (int i = 0; i < params.l; ++i)
            message[i] = static_cast<std::uint8_t>((value >> (params.l - 1 - i)) & 1u);
        code.push_back(encode_strand(message, params));
    }
    return code;
}

AnalysisReport analyze(const CodeParams& params, std::uint64_t cap) {
    const auto code = enumerate_codebook(params, cap);

    AnalysisReport report;
    report.n = params.n;
    report.code_size = code.size();
    report.rc_formula_value = 2 * ((params.n - 3) / 2);
    report.gc_target = params.n / 2.0;

    report.gc_min = std::numeric_limits<int>::max();
    report.gc_max = 0;
    std::vector<Strand> rev, rc;
    rev.reserve(code.size());
    rc.reserve(code.size());
    for (const auto& strand : code) {
        const int gc = gc_weight(strand);
        report.gc_min = std::min(report.gc_min, gc);
        report.gc_max = std::max(report.gc_max, gc);
        rev.push_back(reversed(strand));
        rc.push_back(reverse_complement(strand));
    }

    PairMins mins;
    const std::size_t size = code.size();
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<std::size_t>(workers, size);
    if (size < 512 || workers < 2) {
        mins = scan_rows(code, rev, rc, 0, 1);
    } else {
        std::vector<PairMins> partial(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            threads.emplace_back([&, t] { partial[t] = scan_rows(code, rev, rc, t, workers); });
        for (auto& thread : threads) thread.join();
        for (const auto& p : partial) {
            mins.hamming = std::min(mins.hamming, p.hamming);
            mins.reverse = std::min(mins.reverse, p.reverse);
            mins.rc = std::min(mins.rc, p.rc);
        }
    }
    report.min_hamming = mins.hamming;
    report.min_reverse = mins.reverse;
    report.min_rc = mins.rc;
    return report;
}

std::vector<ConstraintResult> check_constraints(const AnalysisReport& report,
                                                const ConstraintThresholds& thresholds) {
    std::vector<ConstraintResult> results;

    if (thresholds.d_min) {
        results.push_back({"hamming", report.min_hamming >= *thresholds.d_min,
                           "min_hamming=" + std::to_string(report.min_hamming) +
                               " required=" + std::to_string(*thresholds.d_min)});
    }

    const int rc_required = thresholds.rc_min.value_or(report.rc_formula_value);
    ConstraintResult rc{"reverse_complement", report.min_rc >= rc_required,
                        "min_rc=" + std::to_string(report.min_rc) +
                            " required=" + std::to_string(rc_required)};
    if (report.min_rc > report.rc_formula_value)
        rc.detail += "; finding: measured minimum exceeds formula value " +
                     std::to_string(report.rc_formula_value);
    results.push_back(std::move(rc));

    const double target = thresholds.gc_target.value_or(report.n / 2.0);
    const double tolerance = report.n % 2 == 0 ? 0.0 : 1.0;
    const bool gc_pass =
        report.gc_min >= target - tolerance && report.gc_max <= target + tolerance;
    results.push_back({"gc_content", gc_pass,
                       "gc_min=" + std::to_string(report.gc_min) +
                           " gc_max=" + std::to_string(report.gc_max) + " target=" +
                           format_number(target) + " tolerance=" + format_number(tolerance)});
    return results;
}

}  // namespace dnastore
