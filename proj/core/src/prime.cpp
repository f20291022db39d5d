#include <apnae/prime.hpp>

#include <stdexcept>
#include <string>

namespace apnae {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint32_t n) : n_(n) {
    if (n <= 2 || !is_prime(n)) {
        throw std::invalid_argument("modulus must be an odd prime > 2, got " + std::to_string(n));
    }
}

} // namespace apnae
