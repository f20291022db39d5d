#include <apnae/harness.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <apnae/generators.hpp>
#include <apnae/moments.hpp>
#include <apnae/solver.hpp>

namespace apnae {

Problem problem_from_string(const std::string& s) {
    if (s == "nae") return Problem::Nae;
    if (s == "2col") return Problem::TwoCol;
    throw std::invalid_argument("problem must be 'nae' or '2col', got '" + s + "'");
}

std::string to_string(Problem p) { return p == Problem::Nae ? "nae" : "2col"; }

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t total, double z) {
    if (total == 0) return {0.0, 1.0};
    if (successes > total) throw std::invalid_argument("successes exceed total");
    double t = double(total);
    double p = double(successes) / t;
    double z2 = z * z;
    double denom = 1.0 + z2 / t;
    double center = (p + z2 / (2.0 * t)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

struct RowCounts {
    std::atomic<std::uint32_t> sat{0};
    std::atomic<std::uint32_t> unsat{0};
    std::atomic<std::uint32_t> unknown{0};
};

SolveStatus solve_cell(Problem problem, std::uint32_t n, std::uint32_t k, std::uint64_t m,
                       std::uint64_t seed, std::uint64_t stream, std::uint64_t node_budget) {
    // Scans run the trivial-free model: a step-0 edge (or uniform-sign step-0
    // clause) is an immediate unsatisfiable core and would pin the observed
    // probability away from 1 even at vanishing density.
    if (problem == Problem::Nae) {
        Formula f = sample_nae_formula(n, k, m, seed, /*exclude_trivial=*/true, stream);
        return decide_nae(f, node_budget).status;
    }
    ApHypergraph h = sample_ap_hypergraph_m(n, k, m, seed, /*exclude_trivial=*/true, stream);
    return decide_2col(h, node_budget).status;
}

unsigned resolve_workers(unsigned workers, std::uint64_t cells) {
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (cells < workers) workers = unsigned(cells);
    return workers;
}

ScanRow finish_row(double r, std::uint32_t n, std::uint32_t k, std::uint32_t trials,
                   const RowCounts& c) {
    ScanRow row;
    row.r = r;
    row.n = n;
    row.k = k;
    row.trials = trials;
    row.sat = c.sat.load();
    row.unsat = c.unsat.load();
    row.unknown = c.unknown.load();
    std::uint32_t decided = row.sat + row.unsat;
    if (decided == 0)
        throw std::runtime_error("budget-too-small: every trial returned UNKNOWN at r=" +
                                 std::to_string(r));
    row.p_hat = double(row.sat) / decided;
    WilsonInterval ci = wilson_interval(row.sat, decided);
    row.ci_lo = ci.lo;
    row.ci_hi = ci.hi;
    return row;
}

std::vector<ScanRow> run_grid(Problem problem, std::uint32_t n, std::uint32_t k,
                              const std::vector<double>& grid, std::uint32_t trials,
                              std::uint64_t seed, std::uint64_t node_budget, unsigned workers,
                              std::uint32_t row_base) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    const std::size_t rows = grid.size();
    std::vector<std::uint64_t> ms(rows);
    for (std::size_t j = 0; j < rows; ++j) ms[j] = clause_count_for_density(grid[j], n);

    std::vector<RowCounts> counts(rows);
    const std::uint64_t cells = std::uint64_t(rows) * trials;
    std::atomic<std::uint64_t> next{0};

    auto worker = [&]() {
        for (;;) {
            std::uint64_t cell = next.fetch_add(1);
            if (cell >= cells) return;
            std::uint32_t row = std::uint32_t(cell / trials);
            std::uint32_t trial = std::uint32_t(cell % trials);
            // Stream ids derive from (row index, trial index) so results are
            // independent of scheduling and worker count.
            std::uint64_t stream = (std::uint64_t(row_base + row) << 32) | trial;
            SolveStatus st = solve_cell(problem, n, k, ms[row], seed, stream, node_budget);
            switch (st) {
                case SolveStatus::Sat: counts[row].sat.fetch_add(1); break;
                case SolveStatus::Unsat: counts[row].unsat.fetch_add(1); break;
                default: counts[row].unknown.fetch_add(1); break;
            }
        }
    };

    unsigned w = resolve_workers(workers, cells);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned i = 0; i + 1 < w; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::vector<ScanRow> out;
    out.reserve(rows);
    for (std::size_t j = 0; j < rows; ++j) out.push_back(finish_row(grid[j], n, k, trials, counts[j]));
    return out;
}

} // namespace

ScanRow estimate_sat_probability(Problem problem, std::uint32_t n, std::uint32_t k, double r,
                                 std::uint32_t trials, std::uint64_t seed,
                                 std::uint64_t node_budget, unsigned workers,
                                 std::uint32_t row_index) {
    return run_grid(problem, n, k, {r}, trials, seed, node_budget, workers, row_index).front();
}

std::vector<ScanRow> threshold_scan(Problem problem, std::uint32_t n, std::uint32_t k,
                                    double r_min, double r_max, double r_step,
                                    std::uint32_t trials, std::uint64_t seed,
                                    std::uint64_t node_budget, unsigned workers) {
    if (r_step <= 0.0) throw std::invalid_argument("r-step must be positive");
    if (r_min > r_max) throw std::invalid_argument("r-min must not exceed r-max");
    std::vector<double> grid;
    for (std::uint32_t i = 0;; ++i) {
        double r = r_min + double(i) * r_step;
        if (r > r_max + 1e-9 * std::max(1.0, std::abs(r_max))) break;
        grid.push_back(r);
    }
    return run_grid(problem, n, k, grid, trials, seed, node_budget, workers, 0);
}

double crossover_estimate(const std::vector<ScanRow>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("crossover needs at least two rows");

    // Pool-adjacent-violators fit of a non-increasing sequence, weighted by
    // decided trial counts, to iron out Monte Carlo wiggles before
    // interpolating.
    struct Block {
        double value;
        double weight;
        std::size_t span;
    };
    std::vector<Block> blocks;
    for (const ScanRow& row : rows) {
        double w = double(row.sat + row.unsat);
        blocks.push_back({row.p_hat, w, 1});
        while (blocks.size() >= 2 && blocks[blocks.size() - 2].value < blocks.back().value) {
            Block b = blocks.back();
            blocks.pop_back();
            Block& a = blocks.back();
            a.value = (a.value * a.weight + b.value * b.weight) / (a.weight + b.weight);
            a.weight += b.weight;
            a.span += b.span;
        }
    }
    std::vector<double> fit;
    fit.reserve(rows.size());
    for (const Block& b : blocks) fit.insert(fit.end(), b.span, b.value);

    bool above = false, below = false;
    for (double v : fit) {
        above |= v >= 0.5;
        below |= v < 0.5;
    }
    if (!above || !below)
        throw std::runtime_error("insufficient-range: scan does not bracket p = 1/2");

    for (std::size_t i = 0; i + 1 < fit.size(); ++i) {
        if (fit[i] >= 0.5 && fit[i + 1] < 0.5) {
            double t = (fit[i] - 0.5) / (fit[i] - fit[i + 1]);
            return rows[i].r + t * (rows[i + 1].r - rows[i].r);
        }
    }
    throw std::runtime_error("insufficient-range: no crossing found");
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "r,n,k,trials,sat,unsat,unknown,p_hat,ci_lo,ci_hi\n";
    char buf[196];
    for (const ScanRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.6g,%u,%u,%u,%u,%u,%u,%.6f,%.6f,%.6f\n", row.r, row.n,
                      row.k, row.trials, row.sat, row.unsat, row.unknown, row.p_hat, row.ci_lo,
                      row.ci_hi);
        out << buf;
    }
}

MomentVerification verify_moments_montecarlo(Problem problem, std::uint32_t n, std::uint32_t k,
                                             std::uint64_t m, std::uint64_t samples,
                                             std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("samples must be at least 1");
    if (n > kExhaustiveVarLimit)
        throw std::invalid_argument("verify-moments needs exhaustive counting, n <= " +
                                    std::to_string(kExhaustiveVarLimit));
    if (problem == Problem::TwoCol && k != 3)
        throw std::invalid_argument("2col moments require k=3");

    long double sx = 0, sx2 = 0, sx4 = 0;
    for (std::uint64_t q = 0; q < samples; ++q) {
        std::uint64_t x;
        // Full n^2 model here: the closed forms assume trivial progressions
        // are part of the sample space.
        if (problem == Problem::Nae) {
            Formula f = sample_nae_formula(n, k, m, seed, /*exclude_trivial=*/false, q);
            x = *count_nae_exhaustive(f).count;
        } else {
            ApHypergraph h = sample_ap_hypergraph_m(n, k, m, seed, /*exclude_trivial=*/false, q);
            x = *count_2col_exhaustive(h).count;
        }
        long double xd = static_cast<long double>(x);
        sx += xd;
        sx2 += xd * xd;
        sx4 += xd * xd * xd * xd;
    }

    MomentVerification v;
    v.problem = problem;
    v.n = n;
    v.k = k;
    v.m = m;
    v.samples = samples;
    long double q = static_cast<long double>(samples);
    v.mean_x = double(sx / q);
    v.mean_x2 = double(sx2 / q);
    if (samples > 1) {
        long double var = (sx2 - q * (sx / q) * (sx / q)) / (q - 1);
        v.se_mean = double(std::sqrt(std::max(var, 0.0L) / q));
        long double var2 = (sx4 - q * (sx2 / q) * (sx2 / q)) / (q - 1);
        v.se_mean_x2 = double(std::sqrt(std::max(var2, 0.0L) / q));
    }
    if (problem == Problem::Nae) {
        v.closed_ex = std::exp2(log2_first_moment_nae(n, k, m));
        if (k == 3) v.closed_ex2 = std::exp2(log2_second_moment_nae(n, k, m));
    } else {
        v.closed_ex = std::exp2(log2_first_moment_2col(n, m));
        v.closed_ex2 = std::exp2(log2_second_moment_2col(n, m));
    }
    v.mean_within_3se = std::abs(v.mean_x - v.closed_ex) <= 3.0 * v.se_mean + 1e-9;
    return v;
}

} // namespace apnae
