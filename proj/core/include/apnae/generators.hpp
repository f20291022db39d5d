#pragma once

#include <cstdint>

#include <apnae/coloring.hpp>
#include <apnae/instances.hpp>

namespace apnae {

/// Samplers are pure functions of (parameters, seed, stream): same inputs give
/// bit-identical output on every platform. The stream index selects an
/// independent Philox stream, so parallel callers can draw disjoint instances
/// without coordination.
///
/// All samplers require n prime, 3 <= k < n and draw uniformly with
/// replacement; residues come from rejection sampling (no modulo bias).

/// m i.i.d. uniform AP edges over the n^2 progressions (n*(n-1) when
/// exclude_trivial).
ApHypergraph sample_ap_hypergraph_m(std::uint32_t n, std::uint32_t k, std::uint64_t m,
                                    std::uint64_t seed, bool exclude_trivial = false,
                                    std::uint64_t stream = 0);

/// Each candidate progression included independently with probability p,
/// scanned in lexicographic (start, step) order; edge count ~ Binomial(n^2, p).
ApHypergraph sample_ap_hypergraph_p(std::uint32_t n, std::uint32_t k, double p,
                                    std::uint64_t seed, bool exclude_trivial = false,
                                    std::uint64_t stream = 0);

/// m clauses, each a uniform progression plus k i.i.d. uniform sign bits
/// (uniform over the 2^k * n^2 possible clauses).
Formula sample_nae_formula(std::uint32_t n, std::uint32_t k, std::uint64_t m,
                           std::uint64_t seed, bool exclude_trivial = false,
                           std::uint64_t stream = 0);

/// Uniform random coloring of Z_n.
Coloring sample_coloring(std::uint32_t n, std::uint64_t seed, std::uint64_t stream = 0);

} // namespace apnae
