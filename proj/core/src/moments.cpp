#include <apnae/moments.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <apnae/instances.hpp>

namespace apnae {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double log2_sum_exp(const std::vector<double>& terms) {
    double m = -HUGE_VAL;
    for (double t : terms) m = std::max(m, t);
    if (!std::isfinite(m)) return -HUGE_VAL;
    double s = 0.0;
    for (double t : terms) s += std::exp2(t - m);
    return m + std::log2(s);
}

void require_k3(std::uint32_t k, const char* what) {
    if (k != 3)
        throw std::invalid_argument(std::string(what) +
                                    " is only defined for k=3 (no exact counting identity beyond length 3)");
}

// 3z(n-z)/n^2 = 1 - (z/n)^3 - (1-z/n)^3, exact in the integers.
double bichromatic_ratio(std::uint32_t n, std::uint32_t z) {
    return 3.0 * double(z) * double(n - z) / (double(n) * double(n));
}

} // namespace

double log2_binomial(std::uint32_t n, std::uint32_t z) {
    return (std::lgamma(double(n) + 1) - std::lgamma(double(z) + 1) -
            std::lgamma(double(n - z) + 1)) /
           kLn2;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("entropy argument must be in [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double nae_pair_clause_prob(double alpha, std::uint32_t k) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0,1]");
    double mono = std::pow(alpha, double(k)) + std::pow(1.0 - alpha, double(k));
    return 1.0 - std::ldexp(1.0, 2 - int(k)) + std::ldexp(mono, 1 - int(k));
}

double log2_first_moment_nae(std::uint32_t n, std::uint32_t k, std::uint64_t m) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    return double(n) + double(m) * std::log2(1.0 - std::ldexp(1.0, 1 - int(k)));
}

double first_moment_threshold(std::uint32_t k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    return -1.0 / std::log2(1.0 - std::ldexp(1.0, 1 - int(k)));
}

double log2_second_moment_nae(std::uint32_t n, std::uint32_t k, std::uint64_t m) {
    require_k3(k, "log2_second_moment_nae");
    std::vector<double> terms;
    terms.reserve(n + 1);
    for (std::uint32_t z = 0; z <= n; ++z) {
        double f = nae_pair_clause_prob(double(z) / n, 3);
        terms.push_back(log2_binomial(n, z) + double(m) * std::log2(f));
    }
    // The z-sum runs over second assignments relative to a fixed first one;
    // the 2^n choices of the first assignment contribute the leading n.
    return double(n) + log2_sum_exp(terms);
}

double log2_second_moment_nae_r(std::uint32_t n, std::uint32_t k, double r) {
    return log2_second_moment_nae(n, k, clause_count_for_density(r, n));
}

double log2_first_moment_2col(std::uint32_t n, std::uint64_t m) {
    std::vector<double> terms;
    terms.reserve(n + 1);
    for (std::uint32_t z = 0; z <= n; ++z) {
        double q = bichromatic_ratio(n, z);
        if (q <= 0.0) {
            if (m == 0) terms.push_back(log2_binomial(n, z));
            continue;  // monochromatic colorings satisfy nothing once m >= 1
        }
        terms.push_back(log2_binomial(n, z) + double(m) * std::log2(q));
    }
    return log2_sum_exp(terms);
}

double log2_first_moment_2col_r(std::uint32_t n, double r) {
    return log2_first_moment_2col(n, clause_count_for_density(r, n));
}

double log2_second_moment_2col(std::uint32_t n, std::uint64_t m) {
    std::vector<double> lg(n + 2);
    for (std::uint32_t i = 0; i <= n + 1; ++i) lg[i] = std::lgamma(double(i) + 1);
    const double lgn = lg[n];

    double max_term = -HUGE_VAL;
    auto for_each_term = [&](auto&& fn) {
        for (std::uint32_t z1 = 0; z1 <= n; ++z1) {
            for (std::uint32_t z2 = 0; z2 + z1 <= n; ++z2) {
                for (std::uint32_t z3 = 0; z3 + z1 + z2 <= n; ++z3) {
                    std::uint32_t z4 = n - z1 - z2 - z3;
                    double alpha = double(z1 + z2) / n;
                    double beta = double(z1 + z3) / n;
                    double gamma = double(z1) / n;
                    double p = 1.0;
                    if (m > 0) {
                        auto cube = [](double v) { return v * v * v; };
                        p = 1.0 - cube(alpha) - cube(1 - alpha) - cube(beta) - cube(1 - beta) +
                            cube(gamma) + cube(alpha - gamma) + cube(beta - gamma) +
                            cube(1 - alpha - beta + gamma);
                        if (p <= 0.0) continue;
                    }
                    double w = (lgn - lg[z1] - lg[z2] - lg[z3] - lg[z4]) / kLn2;
                    fn(w + double(m) * std::log2(p));
                }
            }
        }
    };

    for_each_term([&](double t) { max_term = std::max(max_term, t); });
    if (!std::isfinite(max_term)) return -HUGE_VAL;
    double s = 0.0;
    for_each_term([&](double t) { s += std::exp2(t - max_term); });
    return max_term + std::log2(s);
}

double log2_second_moment_2col_r(std::uint32_t n, double r) {
    return log2_second_moment_2col(n, clause_count_for_density(r, n));
}

namespace {

double diag_objective(double alpha, std::uint32_t k, double r) {
    return binary_entropy(alpha) + r * std::log2(nae_pair_clause_prob(alpha, k));
}

} // namespace

DiagnosticResult second_moment_diagnostic(std::uint32_t k, double r, double tol) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    if (r <= 0.0) throw std::invalid_argument("density must be positive");

    constexpr int kGrid = 10000;
    double best_a = 0.0;
    double best_v = diag_objective(0.0, k, r);
    for (int i = 1; i <= kGrid; ++i) {
        double a = double(i) / kGrid;
        double v = diag_objective(a, k, r);
        if (v > best_v) { best_v = v; best_a = a; }
    }

    // Golden-section refinement around the best grid point (unimodal there).
    double lo = std::max(0.0, best_a - 1.0 / kGrid);
    double hi = std::min(1.0, best_a + 1.0 / kGrid);
    constexpr double kGolden = 0.6180339887498949;
    double c = hi - kGolden * (hi - lo), d = lo + kGolden * (hi - lo);
    double fc = diag_objective(c, k, r), fd = diag_objective(d, k, r);
    while (hi - lo > 1e-9) {
        if (fc > fd) {
            hi = d; d = c; fd = fc;
            c = hi - kGolden * (hi - lo);
            fc = diag_objective(c, k, r);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + kGolden * (hi - lo);
            fd = diag_objective(d, k, r);
        }
    }
    double refined_a = 0.5 * (lo + hi);
    double refined_v = diag_objective(refined_a, k, r);
    if (refined_v > best_v) { best_v = refined_v; best_a = refined_a; }

    DiagnosticResult out;
    out.log2_max = best_v;
    out.log2_center = diag_objective(0.5, k, r);
    // Per-variable E[X^2] bound is 2 * max g; per-variable E[X]^2 is
    // 4 f(1/2)^r = 2 * g(1/2). Success iff the max does not beat the center.
    out.success = best_v - out.log2_center <= tol;
    out.argmax_alpha = out.success && std::abs(best_a - 0.5) <= 1e-6 ? 0.5 : best_a;
    return out;
}

MomentReport compute_moment_report(const std::string& problem, std::uint32_t n, std::uint32_t k,
                                   double r, bool with_diagnostic) {
    MomentReport rep;
    rep.problem = problem;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.m = clause_count_for_density(r, n);
    if (problem == "nae") {
        rep.log2_ex = log2_first_moment_nae(n, k, rep.m);
        rep.log2_ex2 = log2_second_moment_nae(n, k, rep.m);
    } else if (problem == "2col") {
        require_k3(k, "2-coloring moments");
        rep.log2_ex = log2_first_moment_2col(n, rep.m);
        rep.log2_ex2 = log2_second_moment_2col(n, rep.m);
    } else {
        throw std::invalid_argument("problem must be 'nae' or '2col'");
    }
    rep.per_n_gap = (rep.log2_ex2 - 2.0 * rep.log2_ex) / double(n);
    if (with_diagnostic) {
        DiagnosticResult d = second_moment_diagnostic(k, r);
        rep.diag_argmax_alpha = d.argmax_alpha;
        rep.diag_success = d.success;
    }
    return rep;
}

} // namespace apnae
