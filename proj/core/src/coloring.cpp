#include <apnae/coloring.hpp>

#include <bit>
#include <stdexcept>

namespace apnae {

namespace {
std::uint32_t popcount_all(const std::vector<std::uint64_t>& words) {
    std::uint32_t total = 0;
    for (std::uint64_t w : words) total += std::uint32_t(std::popcount(w));
    return total;
}
} // namespace

Coloring::Coloring(std::uint32_t n) : n_(n), ones_(0), words_((n + 63) / 64, 0) {}

Coloring Coloring::from_bits(std::string_view bits) {
    Coloring c(std::uint32_t(bits.size()));
    for (std::uint32_t i = 0; i < bits.size(); ++i) {
        char ch = bits[i];
        if (ch == '1') {
            c.words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        } else if (ch != '0') {
            throw std::invalid_argument("coloring string must contain only 0/1");
        }
    }
    c.ones_ = popcount_all(c.words_);
    return c;
}

Coloring Coloring::from_mask(std::uint32_t n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("from_mask supports n <= 64");
    Coloring c(n);
    if (n < 64) mask &= (std::uint64_t(1) << n) - 1;
    if (n > 0) c.words_[0] = mask;
    c.ones_ = popcount_all(c.words_);
    return c;
}

Coloring Coloring::from_vector(const std::vector<bool>& bits) {
    Coloring c(std::uint32_t(bits.size()));
    for (std::uint32_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) c.words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    c.ones_ = popcount_all(c.words_);
    return c;
}

Coloring Coloring::exclusive_or(const Coloring& other) const {
    if (n_ != other.n_) throw std::invalid_argument("coloring size mismatch");
    Coloring out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] ^ other.words_[w];
    out.ones_ = popcount_all(out.words_);
    return out;
}

Coloring Coloring::complement() const {
    Coloring out(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    if (n_ & 63) out.words_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    out.ones_ = n_ - ones_;
    return out;
}

std::string Coloring::to_string() const {
    std::string s(n_, '0');
    for (std::uint32_t i = 0; i < n_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

double overlap_fraction(const Coloring& s, const Coloring& t) {
    Coloring x = s.exclusive_or(t);
    return 1.0 - double(x.ones_count()) / s.size();
}

} // namespace apnae
