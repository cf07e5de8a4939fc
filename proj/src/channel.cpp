#include "dnastore/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dnastore {

namespace {

constexpr char kBases[4] = {'A', 'C', 'G', 'T'};
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

bool valid_base(char c) { return c == 'A' || c == 'C' || c == 'G' || c == 'T'; }

}  // namespace

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::del: return "delete";
        case EventKind::ins: return "insert";
        case EventKind::sub: return "substitute";
    }
    return "?";
}

std::string apply_event(const std::string& strand, const ChannelEvent& event) {
    const int len = static_cast<int>(strand.size());
    std::string out = strand;
    switch (event.kind) {
        case EventKind::del:
            if (event.position < 1 || event.position > len)
                throw std::invalid_argument("delete position out of range");
            out.erase(out.begin() + (event.position - 1));
            break;
        case EventKind::ins:
            if (event.position < 1 || event.position > len + 1)
                throw std::invalid_argument("insert position out of range");
            if (!valid_base(event.base)) throw std::invalid_argument("invalid inserted base");
            out.insert(out.begin() + (event.position - 1), event.base);
            break;
        case EventKind::sub:
            if (event.position < 1 || event.position > len)
                throw std::invalid_argument("substitute position out of range");
            if (!valid_base(event.base)) throw std::invalid_argument("invalid substituted base");
            if (strand[event.position - 1] == event.base)
                throw std::invalid_argument("substitution must change the base");
            out[event.position - 1] = event.base;
            break;
    }
    return out;
}

void ErrorMix::validate() const {
    for (double p : {del, ins, sub, none})
        if (p < 0.0 || !std::isfinite(p))
            throw std::invalid_argument("error mix probabilities must be finite and non-negative");
    const double sum = del + ins + sub + none;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("error mix probabilities must sum to 1 (got " +
                                    std::to_string(sum) + ")");
}

ErrorMix ErrorMix::parse(const std::string& text) {
    ErrorMix mix{0.0, 0.0, 0.0, 0.0};
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(start, end - start);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad error mix entry '" + item + "' (want kind:probability)");
        const std::string key = item.substr(0, colon);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(colon + 1), &used);
            if (used != item.size() - colon - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad probability in error mix entry '" + item + "'");
        }
        if (key == "del") mix.del = value;
        else if (key == "ins") mix.ins = value;
        else if (key == "sub") mix.sub = value;
        else if (key == "none") mix.none = value;
        else throw std::invalid_argument("unknown error kind '" + key + "' in mix");
        start = end + 1;
    }
    mix.validate();
    return mix;
}

std::uint64_t SplitMix64::next() {
    state_ += kGoldenGamma;
    return mix64(state_);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("next_below(0)");
    const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
    std::uint64_t x = next();
    while (x < threshold) x = next();
    return x % k;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGoldenGamma);
}

std::pair<std::string, std::optional<ChannelEvent>>
random_event(const std::string& strand, const ErrorMix& mix, SplitMix64& rng) {
    mix.validate();
    const double u = rng.next_unit();
    EventKind kind;
    if (u < mix.del) kind = EventKind::del;
    else if (u < mix.del + mix.ins) kind = EventKind::ins;
    else if (u < mix.del + mix.ins + mix.sub) kind = EventKind::sub;
    else return {strand, std::nullopt};

    if (strand.empty()) throw std::invalid_argument("cannot corrupt an empty strand");
    const auto len = static_cast<std::uint64_t>(strand.size());

    ChannelEvent event;
    event.kind = kind;
    switch (kind) {
        case EventKind::del:
            event.position = static_cast<int>(rng.next_below(len)) + 1;
            break;
        case EventKind::ins:
            event.position = static_cast<int>(rng.next_below(len + 1)) + 1;
            event.base = kBases[rng.next_below(4)];
            break;
        case EventKind::sub: {
            event.position = static_cast<int>(rng.next_below(len)) + 1;
            const char current = strand[event.position - 1];
            if (!valid_base(current)) throw std::invalid_argument("strand holds an invalid base");
            char others[3];
            int count = 0;
            for (char c : kBases)
                if (c != current) others[count++] = c;
            event.base = others[rng.next_below(3)];
            break;
        }
    }
    return {apply_event(strand, event), event};
}

std::pair<std::string, std::optional<ChannelEvent>>
random_event(const std::string& strand, const ErrorMix& mix, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return random_event(strand, mix, rng);
}

std::string format_event_line(std::size_t index, const std::optional<ChannelEvent>& event) {
    std::string line = std::to_string(index);
    if (!event) return line + " none";
    line += " ";
    line += to_string(event->kind);
    line += " " + std::to_string(event->position);
    if (event->kind != EventKind::del) {
        line += " ";
        line += event->base;
    }
    return line;
}

}  // namespace dnastore
