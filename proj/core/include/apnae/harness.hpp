#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace apnae {

enum class Problem { Nae, TwoCol };

Problem problem_from_string(const std::string& s);  // "nae" | "2col"
std::string to_string(Problem p);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% (by default) Wilson score interval for successes/total.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t total,
                               double z = 1.959963984540054);

/// One grid point of a satisfiability scan. p_hat = sat/(sat+unsat); unknown
/// outcomes are excluded from the estimate but always reported.
struct ScanRow {
    double r = 0.0;
    std::uint32_t n = 0;
    std::uint32_t k = 3;
    std::uint32_t trials = 0;
    std::uint32_t sat = 0;
    std::uint32_t unsat = 0;
    std::uint32_t unknown = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
};

/// Solves `trials` independent instances at density r, each drawn from its
/// own Philox stream derived from (seed, row_index, trial index), so results
/// do not depend on scheduling or worker count. Instances are sampled without
/// trivial progressions (a trivial edge / uniform-sign trivial clause is an
/// instant unsatisfiable core, which saturates the scan away from 1).
/// Throws if every trial returns Unknown (budget too small).
ScanRow estimate_sat_probability(Problem problem, std::uint32_t n, std::uint32_t k, double r,
                                 std::uint32_t trials, std::uint64_t seed,
                                 std::uint64_t node_budget, unsigned workers = 0,
                                 std::uint32_t row_index = 0);

/// One ScanRow per grid point r_min, r_min+r_step, ..., <= r_max (ascending).
std::vector<ScanRow> threshold_scan(Problem problem, std::uint32_t n, std::uint32_t k,
                                    double r_min, double r_max, double r_step,
                                    std::uint32_t trials, std::uint64_t seed,
                                    std::uint64_t node_budget, unsigned workers = 0);

/// Empirical 50% crossover: isotonic (non-increasing) regression of p_hat
/// over r, then linear interpolation where the fit crosses 1/2. Throws if the
/// rows do not bracket 1/2.
double crossover_estimate(const std::vector<ScanRow>& rows);

/// Fixed columns: r,n,k,trials,sat,unsat,unknown,p_hat,ci_lo,ci_hi.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// Monte Carlo check of the closed-form moments: samples instances (full n^2
/// model, trivial progressions included), counts X exhaustively per sample,
/// and compares sample mean / second moment against the closed forms.
struct MomentVerification {
    Problem problem = Problem::Nae;
    std::uint32_t n = 0, k = 3;
    std::uint64_t m = 0, samples = 0;
    double mean_x = 0.0;
    double se_mean = 0.0;       // sample SE of the mean
    double closed_ex = 0.0;     // 2^(log2 first moment)
    double mean_x2 = 0.0;
    double se_mean_x2 = 0.0;
    std::optional<double> closed_ex2;  // k=3 closed form (NAE exact; 2col standard-model approximation)
    bool mean_within_3se = false;
};

MomentVerification verify_moments_montecarlo(Problem problem, std::uint32_t n, std::uint32_t k,
                                             std::uint64_t m, std::uint64_t samples,
                                             std::uint64_t seed);

} // namespace apnae
