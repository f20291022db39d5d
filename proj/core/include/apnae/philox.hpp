#pragma once

#include <array>
#include <cstdint>

namespace apnae {

/// Philox4x32-10 counter-based pseudo-random generator (Salmon et al.,
/// "Parallel Random Numbers: As Easy as 1, 2, 3", the Random123 family).
///
/// The generator is a pure function of (key, counter): key carries the user
/// seed, the counter carries a 64-bit stream id and a 64-bit block index.
/// Streams are therefore splittable -- trial i of seed s is computable without
/// generating trials 0..i-1 -- and output is bit-exact across platforms.
/// Known-answer vectors from the Random123 distribution are pinned in the
/// test suite.
class Philox4x32 {
public:
    using result_type = std::uint32_t;

    Philox4x32(std::uint64_t seed, std::uint64_t stream = 0);

    /// One 10-round block: 4 output words from (counter, key). Exposed for
    /// known-answer tests.
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    /// Uniform in [0,1) with 53-bit resolution.
    double next_double();
    /// Uniform in [0, bound), bound >= 1; rejection sampling, no modulo bias.
    std::uint32_t uniform_below(std::uint32_t bound);
    bool bernoulli(double p) { return next_double() < p; }

    std::uint32_t operator()() { return next_u32(); }
    static constexpr std::uint32_t min() { return 0; }
    static constexpr std::uint32_t max() { return 0xFFFFFFFFu; }

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    unsigned buffered_ = 0;  // unconsumed words remaining in buffer_
};

} // namespace apnae
