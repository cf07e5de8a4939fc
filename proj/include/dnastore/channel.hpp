#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace dnastore {

enum class EventKind { del, ins, sub };

const char* to_string(EventKind k);

struct ChannelEvent {
    EventKind kind = EventKind::del;
    int position = 0;  // 1-based base position in the strand it applies to
    char base = 0;     // inserted/substituted value; unused for deletions
};

/// Exact splice semantics: delete shrinks by one, insert grows by one
/// (the new base takes `position`), substitute replaces in place and must
/// change the base. Throws std::invalid_argument on out-of-range positions
/// or a self-substitution.
std::string apply_event(const std::string& strand, const ChannelEvent& event);

/// Probabilities over the per-strand outcomes. Must be non-negative and
/// sum to 1.
struct ErrorMix {
    double del = 0.0;
    double ins = 0.0;
    double sub = 0.0;
    double none = 1.0;

    void validate() const;  // throws std::invalid_argument
    /// Parses "del:0.3,ins:0.3,sub:0.4" (missing kinds default to 0).
    static ErrorMix parse(const std::string& text);
};

/// SplitMix64: the project's stable, portable random stream. The output
/// sequence for a given seed is part of the CLI contract and must not change.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double next_unit();                          // uniform in [0, 1)
    std::uint64_t next_below(std::uint64_t k);   // uniform in [0, k), unbiased

private:
    std::uint64_t state_;
};

/// Per-strand substream seed for parallel / per-index corruption.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Draws at most one event (kind, then position, then base) and applies it.
/// Deterministic for a fixed generator state.
std::pair<std::string, std::optional<ChannelEvent>>
random_event(const std::string& strand, const ErrorMix& mix, SplitMix64& rng);

std::pair<std::string, std::optional<ChannelEvent>>
random_event(const std::string& strand, const ErrorMix& mix, std::uint64_t seed);

/// One log line per strand: "<index> <kind> <pos> [<base>]", kind "none"
/// when nothing happened. Index is 1-based.
std::string format_event_line(std::size_t index, const std::optional<ChannelEvent>& event);

}  // namespace dnastore
