#pragma once

#include <cstdint>

namespace apnae {

/// Deterministic primality test (trial division; n fits comfortably in 64 bits
/// at the scales this library targets).
bool is_prime(std::uint64_t n);

/// Vertex/variable count of the ring Z_n. Construction enforces the model
/// preconditions: n prime and n > 2.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t n);

    std::uint32_t value() const { return n_; }
    operator std::uint32_t() const { return n_; }

private:
    std::uint32_t n_;
};

} // namespace apnae
