#include <apnae/counting.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace apnae {

MonoCount count_monochromatic(const Coloring& c, std::uint32_t k) {
    std::uint32_t n = c.size();
    if (k < 3 || k >= n) throw std::invalid_argument("count_monochromatic requires 3 <= k < n");
    MonoCount out;
    out.total = std::uint64_t(n) * n;
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t x = 0; x < n; ++x) {
            bool color = c.test(a);
            bool mono = true;
            std::uint32_t v = a;
            for (std::uint32_t i = 1; i < k; ++i) {
                v += x;
                if (v >= n) v -= n;
                if (c.test(v) != color) { mono = false; break; }
            }
            out.monochromatic += mono;
        }
    }
    return out;
}

std::int64_t mono_ap3_count(std::uint32_t n, std::uint32_t z) {
    if (z > n) throw std::invalid_argument("ones count exceeds n");
    std::int64_t N = n, Z = z;
    return N * N - 3 * Z * N + 3 * Z * Z;
}

std::int64_t bichromatic_ap3_count(std::uint32_t n, std::uint32_t z) {
    if (z > n) throw std::invalid_argument("ones count exceeds n");
    std::int64_t N = n, Z = z;
    return 3 * Z * (N - Z);
}

double beta_fraction(const Coloring& s, const Coloring& t, std::uint32_t k) {
    return count_monochromatic(s.exclusive_or(t), k).fraction();
}

double pair_nae_satisfy_prob(const Coloring& s, const Coloring& t, std::uint32_t k) {
    double beta = beta_fraction(s, t, k);
    return 1.0 - std::ldexp(1.0, 2 - int(k)) + std::ldexp(beta, 1 - int(k));
}

Rational pair_nae_satisfy_prob_exact(const Coloring& s, const Coloring& t, std::uint32_t k) {
    if (k > 30) throw std::invalid_argument("exact pair probability supports k <= 30");
    MonoCount mc = count_monochromatic(s.exclusive_or(t), k);
    std::int64_t half_pow = std::int64_t(1) << (k - 1);  // 2^(k-1)
    std::int64_t n2 = std::int64_t(mc.total);
    // 1 - 2^(2-k) + 2^(1-k) * mono/n^2 over the common denominator 2^(k-1) n^2
    return Rational{(half_pow - 2) * n2 + std::int64_t(mc.monochromatic), half_pow * n2};
}

double bichromatic_prob(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0,1]");
    double b = 1.0 - alpha;
    return 1.0 - alpha * alpha * alpha - b * b * b;
}

double pair_bichromatic_prob(double alpha, double beta, double gamma, std::uint32_t k) {
    constexpr double eps = 1e-12;
    if (!(alpha >= -eps && alpha <= 1 + eps && beta >= -eps && beta <= 1 + eps))
        throw std::invalid_argument("alpha/beta must be in [0,1]");
    if (gamma < -eps || gamma > std::min(alpha, beta) + eps || alpha + beta - gamma > 1 + eps)
        throw std::invalid_argument("infeasible overlap: need 0 <= gamma <= min(alpha,beta) and alpha+beta-gamma <= 1");
    auto powk = [k](double v) { return std::pow(std::max(v, 0.0), double(k)); };
    return 1.0 - powk(alpha) - powk(1 - alpha) - powk(beta) - powk(1 - beta) + powk(gamma) +
           powk(alpha - gamma) + powk(beta - gamma) + powk(1 - alpha - beta + gamma);
}

} // namespace apnae
