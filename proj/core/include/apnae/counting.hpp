#pragma once

#include <cstdint>

#include <apnae/coloring.hpp>
#include <apnae/rational.hpp>

namespace apnae {

/// Result of counting monochromatic progressions among all n^2 length-k APs
/// of a coloring (trivial progressions included; they are monochromatic by
/// definition).
struct MonoCount {
    std::uint64_t total = 0;          // n^2
    std::uint64_t monochromatic = 0;
    double fraction() const { return total ? double(monochromatic) / total : 0.0; }
};

/// Direct enumeration over all n^2 progressions, O(n^2 k). Requires k < n.
MonoCount count_monochromatic(const Coloring& c, std::uint32_t k);

/// Exact closed form for k=3: a coloring with z ones has
/// n^2 - 3zn + 3z^2 monochromatic 3-term APs. Integer arithmetic throughout.
std::int64_t mono_ap3_count(std::uint32_t n, std::uint32_t z);

/// Complement of the above: 3z(n-z) bichromatic 3-term APs.
std::int64_t bichromatic_ap3_count(std::uint32_t n, std::uint32_t z);

/// Fraction of length-k APs monochromatic in s XOR t. For k=3 this equals
/// a^3 + (1-a)^3 with a = overlap_fraction(s, t), for any pair.
double beta_fraction(const Coloring& s, const Coloring& t, std::uint32_t k);

/// Probability a uniform random signed AP clause is NAE-satisfied by both
/// assignments: 1 - 2^(2-k) + 2^(1-k) * beta(s,t).
double pair_nae_satisfy_prob(const Coloring& s, const Coloring& t, std::uint32_t k);

/// Exact rational version (k <= 30): (2^(k-1) - 2) n^2 + mono) / (2^(k-1) n^2).
Rational pair_nae_satisfy_prob_exact(const Coloring& s, const Coloring& t, std::uint32_t k);

/// Probability a random 3-AP edge is bichromatic under a coloring with ones
/// fraction alpha: 1 - alpha^3 - (1-alpha)^3.
double bichromatic_prob(double alpha);

/// Probability a random size-k edge is bichromatic under both of two
/// colorings with black fractions alpha, beta and black-in-both fraction
/// gamma (inclusion-exclusion over the four joint color classes). Throws on
/// infeasible (alpha, beta, gamma). Exact for independently chosen vertices;
/// for 3-AP edges it is exact in the single-coloring margins only.
double pair_bichromatic_prob(double alpha, double beta, double gamma, std::uint32_t k);

} // namespace apnae
