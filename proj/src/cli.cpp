#include "dnastore/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dnastore/analysis.hpp"
#include "dnastore/channel.hpp"
#include "dnastore/codec.hpp"
#include "dnastore/errors.hpp"
#include "dnastore/framing.hpp"
#include "dnastore/params.hpp"
#include "dnastore/vt.hpp"

namespace dnastore::cli {

namespace {

bool is_stdio(const std::string& path) { return path.empty() || path == "-"; }

std::vector<std::uint8_t> read_payload(const std::string& path, std::istream& fallback) {
    if (is_stdio(path))
        return {std::istreambuf_iterator<char>(fallback), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_payload(const std::string& path, const std::vector<std::uint8_t>& bytes,
                   std::ostream& fallback) {
    if (is_stdio(path)) {
        fallback.write(reinterpret_cast<const char*>(bytes.data()),
                       static_cast<std::streamsize>(bytes.size()));
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("failed writing '" + path + "'");
}

StrandArchive read_archive_from(const std::string& path, std::istream& fallback) {
    if (is_stdio(path)) return read_archive(fallback);
    std::ifstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for reading");
    return read_archive(file);
}

void write_archive_to(const std::string& path, const StrandArchive& archive,
                      std::ostream& fallback) {
    if (is_stdio(path)) {
        write_archive(fallback, archive);
        return;
    }
    std::ofstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    write_archive(file, archive);
    if (!file) throw IoError("failed writing '" + path + "'");
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

// 5 -> "5", 3.5 -> "3.5"
std::string format_number(double v) {
    if (v == static_cast<long long>(v)) return std::to_string(static_cast<long long>(v));
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string describe(const DecodeReport& report) {
    std::string text;
    if (report.corrected_error != CorrectedError::none) {
        text = std::string("corrected ") + to_string(report.corrected_error);
        if (!report.detail.empty()) text += " (" + report.detail + ")";
    } else {
        text = "clean";
    }
    if (!report.redundancy_violations.empty())
        text += "; redundancy violations at r[" + join(report.redundancy_violations) + "]";
    for (const auto& w : report.warnings) text += "; warning: " + w;
    return text;
}

void print_decode_diagnostics(const StreamDecode& result, bool verbose, std::ostream& err) {
    std::size_t corrected = 0;
    for (std::size_t i = 0; i < result.outcomes.size(); ++i) {
        const auto& outcome = result.outcomes[i];
        if (!outcome.ok) {
            err << "strand " << (i + 1) << ": FAILED: " << outcome.error << "\n";
            continue;
        }
        const auto& report = outcome.report;
        const bool eventful = report.corrected_error != CorrectedError::none ||
                              !report.redundancy_violations.empty() || !report.warnings.empty();
        if (eventful) ++corrected;
        if (verbose || eventful)
            err << "strand " << (i + 1) << ": " << describe(report) << "\n";
    }
    err << "decoded " << result.outcomes.size() << " strands: "
        << (result.outcomes.size() - corrected - result.failed) << " clean, " << corrected
        << " corrected or flagged, " << result.failed << " failed\n";
}

struct AnalyzeOptions {
    int n = 0;
    std::optional<int> d_min;
    std::optional<int> rc_min;
    std::optional<double> gc_target;
    std::uint64_t cap = std::uint64_t{1} << 20;
    std::string out_path;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out) {
    const CodeParams params = derive_params(options.n);
    const AnalysisReport report = analyze(params, options.cap);
    const auto checks =
        check_constraints(report, {options.d_min, options.rc_min, options.gc_target});

    std::ostringstream text;
    text << "n=" << report.n << "\n"
         << "code_size=" << report.code_size << "\n"
         << "min_hamming=" << report.min_hamming << "\n"
         << "min_reverse=" << report.min_reverse << "\n"
         << "min_rc=" << report.min_rc << "\n"
         << "rc_formula_value=" << report.rc_formula_value << "\n"
         << "gc_min=" << report.gc_min << "\n"
         << "gc_max=" << report.gc_max << "\n"
         << "gc_target=" << format_number(report.gc_target) << "\n";
    bool all_pass = true;
    for (const auto& check : checks) {
        all_pass = all_pass && check.pass;
        text << "check_" << check.name << "=" << (check.pass ? "pass" : "fail") << " ("
             << check.detail << ")\n";
    }

    out << text.str();
    if (!options.out_path.empty()) {
        std::ofstream file(options.out_path);
        if (!file) throw IoError("cannot open '" + options.out_path + "' for writing");
        file << text.str();
        if (!file) throw IoError("failed writing '" + options.out_path + "'");
    }
    return all_pass ? 0 : 1;
}

void check_archive_n(const StrandArchive& archive, int n) {
    if (archive.n != n)
        throw std::invalid_argument("archive encoded with n=" + std::to_string(archive.n) +
                                    ", --n says " + std::to_string(n));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"DNA strand codec: single indel/substitution correction with GC-balanced, "
                 "reverse-complement-separated strands"};
    app.name("dnastore");
    app.require_subcommand(1);

    int n = 0;

    auto* params_cmd = app.add_subcommand("params", "Print the code constants derived from n");
    params_cmd->add_option("--n", n, "strand length in bases")->required();

    std::string in_path, out_path, log_path;

    auto* encode_cmd = app.add_subcommand("encode", "Encode a byte stream into a strand archive");
    encode_cmd->add_option("--n", n, "strand length in bases")->required();
    encode_cmd->add_option("--in", in_path, "payload file ('-' = stdin)");
    encode_cmd->add_option("--out", out_path, "archive file ('-' = stdout)");

    bool force = false, verbose = false;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a strand archive back into bytes");
    decode_cmd->add_option("--n", n, "strand length in bases")->required();
    decode_cmd->add_option("--in", in_path, "archive file ('-' = stdin)");
    decode_cmd->add_option("--out", out_path, "payload file ('-' = stdout)");
    decode_cmd->add_flag("--force", force, "emit partial output even if strands fail");
    decode_cmd->add_flag("--verbose", verbose, "report every strand, not just eventful ones");

    AnalyzeOptions analyze_options;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "Enumerate the codebook and verify its constraints");
    analyze_cmd->add_option("--n", analyze_options.n, "strand length in bases")->required();
    analyze_cmd->add_option("--d-min", analyze_options.d_min, "required minimum Hamming distance");
    analyze_cmd->add_option("--rc-min", analyze_options.rc_min,
                            "required minimum reverse-complement distance (default: formula value)");
    analyze_cmd->add_option("--gc-target", analyze_options.gc_target,
                            "required GC weight (default: n/2)");
    analyze_cmd->add_option("--cap", analyze_options.cap, "refuse codebooks larger than this");
    analyze_cmd->add_option("--out", analyze_options.out_path, "also write the report to a file");

    std::uint64_t seed = 0;
    std::string mix_text;
    int events = 1;
    auto* simulate_cmd = app.add_subcommand("simulate", "Corrupt an archive with seeded errors");
    simulate_cmd->add_option("--n", n, "strand length in bases")->required();
    simulate_cmd->add_option("--in", in_path, "archive file ('-' = stdin)");
    simulate_cmd->add_option("--out", out_path, "corrupted archive file ('-' = stdout)");
    simulate_cmd->add_option("--seed", seed, "random seed (default 0)");
    simulate_cmd->add_option("--mix", mix_text, "probabilities, e.g. del:0.3,ins:0.3,sub:0.3,none:0.1")
        ->required();
    simulate_cmd->add_option("--log", log_path, "write one event line per strand to this file");
    simulate_cmd
        ->add_option("--events", events, "events drawn per strand (default 1; >1 voids the "
                                         "single-error guarantee)")
        ->check(CLI::PositiveNumber);

    auto* roundtrip_cmd =
        app.add_subcommand("roundtrip", "encode -> corrupt -> decode -> compare, print PASS/FAIL");
    roundtrip_cmd->add_option("--n", n, "strand length in bases")->required();
    roundtrip_cmd->add_option("--in", in_path, "payload file ('-' = stdin)");
    roundtrip_cmd->add_option("--seed", seed, "random seed (default 0)");
    roundtrip_cmd->add_option("--mix", mix_text, "probabilities, e.g. del:0.5,none:0.5")->required();

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(params_cmd)) {
            const CodeParams params = derive_params(n);
            out << "n=" << params.n << "\n"
                << "m=" << params.m << "\n"
                << "vt_modulus=" << params.vt_modulus << "\n"
                << "l=" << params.l << "\n"
                << "parity_positions=" << join(params.parity_positions) << "\n"
                << "message_positions=" << join(params.message_positions) << "\n";
            return 0;
        }

        if (app.got_subcommand(encode_cmd)) {
            const CodeParams params = derive_params(n);
            const auto payload = read_payload(in_path, in);
            const auto archive = encode_stream(payload, params);
            write_archive_to(out_path, archive, out);
            err << "encoded " << payload.size() << " bytes into " << archive.strands.size()
                << " strands\n";
            return 0;
        }

        if (app.got_subcommand(decode_cmd)) {
            const CodeParams params = derive_params(n);
            const auto archive = read_archive_from(in_path, in);
            check_archive_n(archive, n);
            const auto result = decode_stream(archive, params, force);
            print_decode_diagnostics(result, verbose, err);
            write_payload(out_path, result.bytes, out);
            return result.failed == 0 ? 0 : 1;
        }

        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(analyze_options, out);

        if (app.got_subcommand(simulate_cmd)) {
            const CodeParams params = derive_params(n);
            const ErrorMix mix = ErrorMix::parse(mix_text);
            auto archive = read_archive_from(in_path, in);
            check_archive_n(archive, params.n);

            std::ofstream log_file;
            if (!log_path.empty()) {
                log_file.open(log_path);
                if (!log_file) throw IoError("cannot open '" + log_path + "' for writing");
            }
            std::size_t applied = 0;
            for (std::size_t i = 0; i < archive.strands.size(); ++i) {
                SplitMix64 rng(derive_seed(seed, i));
                for (int k = 0; k < events; ++k) {
                    auto [corrupted, event] = random_event(archive.strands[i], mix, rng);
                    archive.strands[i] = std::move(corrupted);
                    if (event) ++applied;
                    if (log_file) log_file << format_event_line(i + 1, event) << "\n";
                }
            }
            write_archive_to(out_path, archive, out);
            err << "applied " << applied << " events across " << archive.strands.size()
                << " strands (seed " << seed << ")\n";
            return 0;
        }

        if (app.got_subcommand(roundtrip_cmd)) {
            const CodeParams params = derive_params(n);
            const ErrorMix mix = ErrorMix::parse(mix_text);
            const auto payload = read_payload(in_path, in);
            auto archive = encode_stream(payload, params);
            for (std::size_t i = 0; i < archive.strands.size(); ++i)
                archive.strands[i] =
                    random_event(archive.strands[i], mix, derive_seed(seed, i)).first;

            bool pass = false;
            std::string failure;
            try {
                const auto result = decode_stream(archive, params);
                pass = result.bytes == payload;
                if (!pass) failure = "decoded payload differs from input";
            } catch (const DecodeError& e) {
                failure = e.what();
            }
            if (pass) {
                out << "PASS\n";
                return 0;
            }
            out << "FAIL\n";
            err << "roundtrip failed: " << failure << "\n";
            return 1;
        }
    } catch (const DecodeError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace dnastore::cli
