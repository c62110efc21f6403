#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace homsim {

// Philox4x32-10 counter-based generator. Streams are addressed by
// (key, stream_id): the key carries the global seed, the high counter
// words carry the stream id, and the low counter words advance per draw.
// Any (seed, stream) pair therefore yields the same sequence regardless
// of evaluation order or thread assignment.
namespace philox {

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

inline std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                          std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kW0;
            key[1] += kW1;
        }
        round_once(ctr, key);
    }
    return ctr;
}

}  // namespace philox

/// SplitMix64 mixing step; used to derive stream ids from tags and indices.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Stream id for (tag, index); tags separate the purposes a seed is used for.
inline std::uint64_t substream(std::uint64_t tag, std::uint64_t index) {
    return mix64(tag ^ mix64(index));
}

class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream_id)),
          stream_hi_(static_cast<std::uint32_t>(stream_id >> 32)) {}

    std::uint32_t next_u32() {
        if (avail_ == 0) {
            buf_ = philox::block({static_cast<std::uint32_t>(draw_),
                                  static_cast<std::uint32_t>(draw_ >> 32), stream_lo_, stream_hi_},
                                 key_);
            ++draw_;
            avail_ = 4;
        }
        return buf_[4 - avail_--];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential(double mean) { return -mean * std::log(uniform_pos()); }

    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_ = 0, stream_hi_ = 0;
    std::uint64_t draw_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int avail_ = 0;
};

// Stream tags. Fixed constants: changing them changes every simulated stream.
namespace stream_tag {
inline constexpr std::uint64_t cw_block = 0x63775F626C6Bull;      // "cw_blk"
inline constexpr std::uint64_t pulse_block = 0x70756C7365ull;     // "pulse"
inline constexpr std::uint64_t background = 0x6267ull;            // "bg"
inline constexpr std::uint64_t route = 0x726F757465ull;           // "route"
inline constexpr std::uint64_t pair = 0x70616972ull;              // "pair"
inline constexpr std::uint64_t single = 0x73696E676Cull;          // "singl"
inline constexpr std::uint64_t detect = 0x646574ull;              // "det"
inline constexpr std::uint64_t phase = 0x7068617365ull;           // "phase"
inline constexpr std::uint64_t scan_point = 0x7363616Eull;        // "scan"
}  // namespace stream_tag

}  // namespace homsim
