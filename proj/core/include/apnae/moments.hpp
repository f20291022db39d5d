#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace apnae {

/// First/second moment quantities for one problem instance family, all in
/// log2 scale. per_n_gap = (log2_EX2 - 2*log2_EX)/n measures how far E[X^2]
/// sits above E[X]^2 per variable.
struct MomentReport {
    std::string problem;  // "nae" or "2col"
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    double r = 0.0;
    std::uint64_t m = 0;
    double log2_ex = 0.0;
    double log2_ex2 = 0.0;
    double per_n_gap = 0.0;
    std::optional<double> diag_argmax_alpha;
    std::optional<bool> diag_success;
};

/// -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

/// f_k(alpha) = 1 - 2^(2-k) + 2^(1-k) (alpha^k + (1-alpha)^k): probability
/// that two assignments agreeing on an alpha fraction of variables both
/// NAE-satisfy a uniform random clause (k=3; upper-bound heuristic otherwise).
double nae_pair_clause_prob(double alpha, std::uint32_t k);

/// log2 E[X] = n + m log2(1 - 2^(1-k)) for NAE satisfying-assignment counts.
double log2_first_moment_nae(std::uint32_t n, std::uint32_t k, std::uint64_t m);

/// Density r at which the first moment bound kicks in: the root of
/// 2 (1-2^(1-k))^r = 1, i.e. -1/log2(1 - 2^(1-k)). k=3 gives log_{4/3} 2.
double first_moment_threshold(std::uint32_t k);

/// log2 E[X^2] = n + log2 sum_z C(n,z) f(z/n)^m, via log-sum-exp.
/// k must be 3 (the identity behind f needs the length-3 counting lemma);
/// anything else throws.
double log2_second_moment_nae(std::uint32_t n, std::uint32_t k, std::uint64_t m);
double log2_second_moment_nae_r(std::uint32_t n, std::uint32_t k, double r);

/// log2 E[X] for 2-colorings of a random 3-AP hypergraph:
/// log2 sum_z C(n,z) (1 - (z/n)^3 - (1-z/n)^3)^m.
double log2_first_moment_2col(std::uint32_t n, std::uint64_t m);
double log2_first_moment_2col_r(std::uint32_t n, double r);

/// log2 of the multinomial pair sum
///   sum_{z1+z2+z3+z4=n} C(n; z1,z2,z3,z4) p((z1+z2)/n, (z1+z3)/n, z1/n)^m
/// (gamma = black-in-both fraction z1/n). This is the standard-hypergraph
/// second moment; for the AP model it is an approximation -- see
/// pair_bichromatic_prob.
double log2_second_moment_2col(std::uint32_t n, std::uint64_t m);
double log2_second_moment_2col_r(std::uint32_t n, double r);

struct DiagnosticResult {
    double argmax_alpha = 0.5;
    bool success = false;
    double log2_max = 0.0;     // max_alpha [H(alpha) + r log2 f_k(alpha)]
    double log2_center = 0.0;  // value at alpha = 1/2
};

/// Scans g(alpha) = 2^H(alpha) f_k(alpha)^r over [0,1] (grid step 1e-4, then
/// golden-section refinement to 1e-9). Success iff the per-variable E[X^2]
/// bound 2*max g does not exceed the per-variable E[X]^2 value
/// 4 f_k(1/2)^r, i.e. iff alpha = 1/2 stays the global maximizer (within tol,
/// in log2 domain).
DiagnosticResult second_moment_diagnostic(std::uint32_t k, double r, double tol = 1e-9);

/// Assembles the full report; with_diagnostic adds the scan (both problems
/// use the same k=3 scan: the 2-coloring objective attains its maximum on the
/// alpha=beta=1/2 slice where it coincides with the NAE one).
MomentReport compute_moment_report(const std::string& problem, std::uint32_t n, std::uint32_t k,
                                   double r, bool with_diagnostic);

/// log2 binomial coefficient via lgamma.
double log2_binomial(std::uint32_t n, std::uint32_t z);

} // namespace apnae
