#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace apnae {

/// Small exact fraction for the k=3 counting identities (denominators are
/// O(2^k n^2) there, far from overflow). Always normalized: gcd(num,den)=1,
/// den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return double(num) / double(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den, b.den);
        return {a.num * (b.den / g) + b.num * (a.den / g), (a.den / g) * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational{-b.num, b.den};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return {(a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return a * Rational{b.den, b.num};
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;  // both normalized
    }
};

} // namespace apnae
