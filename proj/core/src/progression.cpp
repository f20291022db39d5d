#include <apnae/progression.hpp>

#include <stdexcept>
#include <string>

namespace apnae {

std::vector<std::uint32_t> progression_vertices(const Progression& p, const PrimeModulus& n) {
    if (p.length >= n.value()) {
        throw std::invalid_argument("progression length " + std::to_string(p.length) +
                                    " must be below modulus " + std::to_string(n.value()));
    }
    std::vector<std::uint32_t> out(p.length);
    for (std::uint32_t i = 0; i < p.length; ++i) out[i] = vertex_at(p, i, n.value());
    return out;
}

Progression reversed(const Progression& p, std::uint32_t n) {
    std::uint32_t last = vertex_at(p, p.length - 1, n);
    std::uint32_t neg_step = p.step == 0 ? 0 : n - p.step;
    return {last, neg_step, p.length};
}

ProgressionRange::ProgressionRange(const PrimeModulus& n, std::uint32_t length, bool exclude_trivial)
    : n_(n.value()), length_(length), exclude_trivial_(exclude_trivial) {
    if (length >= n_) throw std::invalid_argument("progression length must be below modulus");
    if (length < 3) throw std::invalid_argument("progression length must be at least 3");
}

ProgressionRange::iterator& ProgressionRange::iterator::operator++() {
    ++step_;
    if (exclude_trivial_ && step_ == 0) step_ = 1;  // unreachable after start, kept for symmetry
    if (step_ >= n_) {
        ++start_;
        step_ = exclude_trivial_ ? 1 : 0;
        if (start_ >= n_) { start_ = n_; step_ = 0; }  // end sentinel
    }
    return *this;
}

ProgressionRange::iterator ProgressionRange::begin() const {
    return {n_, length_, 0, exclude_trivial_ ? 1u : 0u, exclude_trivial_};
}

ProgressionRange::iterator ProgressionRange::end() const {
    return {n_, length_, n_, 0, exclude_trivial_};
}

std::uint64_t ProgressionRange::size() const {
    return std::uint64_t(n_) * (exclude_trivial_ ? n_ - 1 : n_);
}

std::vector<Progression> all_progressions(const PrimeModulus& n, std::uint32_t length,
                                          bool exclude_trivial) {
    ProgressionRange range(n, length, exclude_trivial);
    std::vector<Progression> out;
    out.reserve(range.size());
    for (Progression p : range) out.push_back(p);
    return out;
}

} // namespace apnae
