#include <apnae/philox.hpp>

#include <stdexcept>

namespace apnae {

namespace {
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
    std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
    std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}
} // namespace

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    round_once(c, k);
    for (int i = 0; i < 9; ++i) {
        k[0] += kWeyl0;
        k[1] += kWeyl1;
        round_once(c, k);
    }
    return c;
}

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_(stream) {}

void Philox4x32::refill() {
    std::array<std::uint32_t, 4> ctr{std::uint32_t(block_index_), std::uint32_t(block_index_ >> 32),
                                     std::uint32_t(stream_), std::uint32_t(stream_ >> 32)};
    buffer_ = block(ctr, key_);
    ++block_index_;
    buffered_ = 4;
}

std::uint32_t Philox4x32::next_u32() {
    if (buffered_ == 0) refill();
    return buffer_[4 - buffered_--];
}

std::uint64_t Philox4x32::next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double Philox4x32::next_double() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

std::uint32_t Philox4x32::uniform_below(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Largest multiple of bound representable in 32 bits; values at or above
    // it are rejected so every residue is exactly equally likely.
    std::uint64_t limit = (std::uint64_t(1) << 32) - ((std::uint64_t(1) << 32) % bound);
    std::uint32_t u;
    do {
        u = next_u32();
    } while (std::uint64_t(u) >= limit);
    return u % bound;
}

} // namespace apnae
