#pragma once

#include <array>
#include <cstdint>

namespace cvdj {

// Philox4x32-10 counter-based generator (Salmon et al., SC '11).
//
// Output is a pure function of (key, counter), so a draw is addressed by
// (seed, stream, block_index) and never depends on how the consuming loop is
// sharded or interleaved.  Layout used here:
//   key     = seed split into two 32-bit words
//   counter = {block_lo, block_hi, stream_lo, stream_hi}
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> bijection(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    static std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint64_t stream,
                                              std::uint64_t block_index) {
        const std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(block_index),
            static_cast<std::uint32_t>(block_index >> 32),
            static_cast<std::uint32_t>(stream),
            static_cast<std::uint32_t>(stream >> 32)};
        const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                                  static_cast<std::uint32_t>(seed >> 32)};
        return bijection(ctr, key);
    }
};

// Sequential view over one Philox stream.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() {
        if (word_ >= 4) {
            buffer_ = Philox4x32::block(seed_, stream_, block_++);
            word_ = 0;
        }
        const std::uint64_t lo = buffer_[word_];
        const std::uint64_t hi = buffer_[word_ + 1];
        word_ += 2;
        return (hi << 32) | lo;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int word_ = 4;
};

}  // namespace cvdj
