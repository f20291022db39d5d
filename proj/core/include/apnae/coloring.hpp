#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace apnae {

/// Packed two-coloring / truth assignment over n vertices. Bit 1 = true/black,
/// bit 0 = false/white. The ones count is cached so the ones fraction is O(1).
/// Instances are immutable after construction and safe to share across threads.
class Coloring {
public:
    explicit Coloring(std::uint32_t n);  // all-zero coloring

    /// Parse a '0'/'1' string, index i = vertex i.
    static Coloring from_bits(std::string_view bits);
    /// Low n bits of mask, bit i = vertex i. Requires n <= 64.
    static Coloring from_mask(std::uint32_t n, std::uint64_t mask);
    static Coloring from_vector(const std::vector<bool>& bits);

    std::uint32_t size() const { return n_; }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    std::uint32_t ones_count() const { return ones_; }
    double ones_fraction() const { return n_ ? double(ones_) / n_ : 0.0; }

    Coloring exclusive_or(const Coloring& other) const;  // throws on size mismatch
    Coloring complement() const;

    std::string to_string() const;
    bool operator==(const Coloring& other) const { return n_ == other.n_ && words_ == other.words_; }

private:
    std::uint32_t n_;
    std::uint32_t ones_;
    std::vector<std::uint64_t> words_;
};

/// Fraction of positions where s and t agree. Equals 1 - ones(s^t)/n.
double overlap_fraction(const Coloring& s, const Coloring& t);

} // namespace apnae
