#include <apnae/generators.hpp>

#include <stdexcept>
#include <string>

#include <apnae/philox.hpp>
#include <apnae/prime.hpp>

namespace apnae {

namespace {

void check_model(std::uint32_t n, std::uint32_t k) {
    if (!is_prime(n) || n <= 2)
        throw std::invalid_argument("model requires prime n > 2, got " + std::to_string(n));
    if (k < 3 || k >= n)
        throw std::invalid_argument("model requires 3 <= k < n");
    if (k > 31) throw std::invalid_argument("clause width above 31 is not supported");
}

// Draw order per edge: start then step. With exclude_trivial the step is
// uniform over [1, n-1].
Progression draw_progression(Philox4x32& rng, std::uint32_t n, std::uint32_t k,
                             bool exclude_trivial) {
    std::uint32_t a = rng.uniform_below(n);
    std::uint32_t x = exclude_trivial ? 1 + rng.uniform_below(n - 1) : rng.uniform_below(n);
    return {a, x, k};
}

} // namespace

ApHypergraph sample_ap_hypergraph_m(std::uint32_t n, std::uint32_t k, std::uint64_t m,
                                    std::uint64_t seed, bool exclude_trivial,
                                    std::uint64_t stream) {
    check_model(n, k);
    Philox4x32 rng(seed, stream);
    ApHypergraph h{n, k, {}};
    h.edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) h.edges.push_back(draw_progression(rng, n, k, exclude_trivial));
    return h;
}

ApHypergraph sample_ap_hypergraph_p(std::uint32_t n, std::uint32_t k, double p,
                                    std::uint64_t seed, bool exclude_trivial,
                                    std::uint64_t stream) {
    check_model(n, k);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inclusion probability must be in [0,1]");
    Philox4x32 rng(seed, stream);
    ApHypergraph h{n, k, {}};
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t x = exclude_trivial ? 1u : 0u; x < n; ++x) {
            if (rng.bernoulli(p)) h.edges.push_back({a, x, k});
        }
    }
    return h;
}

Formula sample_nae_formula(std::uint32_t n, std::uint32_t k, std::uint64_t m,
                           std::uint64_t seed, bool exclude_trivial, std::uint64_t stream) {
    check_model(n, k);
    Philox4x32 rng(seed, stream);
    Formula f{n, k, {}};
    f.clauses.reserve(m);
    std::uint32_t sign_mask = (k == 32) ? 0xFFFFFFFFu : ((1u << k) - 1);
    for (std::uint64_t i = 0; i < m; ++i) {
        Progression p = draw_progression(rng, n, k, exclude_trivial);
        std::uint32_t signs = rng.next_u32() & sign_mask;
        f.clauses.push_back({p, signs});
    }
    return f;
}

Coloring sample_coloring(std::uint32_t n, std::uint64_t seed, std::uint64_t stream) {
    Philox4x32 rng(seed, stream);
    std::vector<bool> bits(n);
    std::uint32_t word = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if ((i & 31) == 0) word = rng.next_u32();
        bits[i] = (word >> (i & 31)) & 1u;
    }
    return Coloring::from_vector(bits);
}

} // namespace apnae
