// Command-line harness: instance generation, counting, moment reports,
// solving, Monte Carlo threshold scans and moment verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <apnae/counting.hpp>
#include <apnae/generators.hpp>
#include <apnae/harness.hpp>
#include <apnae/instance_io.hpp>
#include <apnae/moments.hpp>
#include <apnae/prime.hpp>
#include <apnae/solver.hpp>

using nlohmann::json;

namespace {

void check_params(std::uint32_t n, std::uint32_t k) {
    if (n <= 2 || !apnae::is_prime(n))
        throw std::invalid_argument("n must be a prime > 2, got " + std::to_string(n));
    if (k < 3 || k >= n) throw std::invalid_argument("k must satisfy 3 <= k < n");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

json solve_result_json(const apnae::SolveResult& res) {
    json j;
    j["status"] = apnae::to_string(res.status);
    j["witness"] = res.witness ? json(res.witness->to_string()) : json(nullptr);
    j["count"] = res.count ? json(*res.count) : json(nullptr);
    j["nodes_explored"] = res.nodes_explored;
    j["budget_exhausted"] = res.budget_exhausted;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Random arithmetic-progression hypergraphs: NAE-SAT and 2-coloring workbench"};
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Sample a random instance and write it out");
    std::string gen_model, gen_out;
    std::uint32_t gen_n = 0, gen_k = 3;
    std::uint64_t gen_seed = 0;
    std::optional<std::uint64_t> gen_m;
    std::optional<double> gen_p;
    bool gen_exclude = false;
    gen->add_option("--model", gen_model, "apnae (formula) or aphg (hypergraph)")
        ->required()
        ->check(CLI::IsMember({"apnae", "aphg"}));
    gen->add_option("--n", gen_n, "prime vertex/variable count")->required();
    gen->add_option("--k", gen_k, "progression length")->required();
    gen->add_option("--m", gen_m, "edge/clause count (H(n,m) model)");
    gen->add_option("--p", gen_p, "inclusion probability (H(n,p) model, hypergraph only)");
    gen->add_option("--seed", gen_seed, "random seed")->required();
    gen->add_flag("--exclude-trivial", gen_exclude, "restrict steps to [1,n-1]");
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");
    gen->callback([&] {
        check_params(gen_n, gen_k);
        if (gen_m.has_value() == gen_p.has_value())
            throw std::invalid_argument("gen needs exactly one of --m or --p");
        std::ofstream file;
        std::ostream& out = open_output(file, gen_out);
        if (gen_model == "apnae") {
            if (gen_p) throw std::invalid_argument("--p applies to the hypergraph model only");
            apnae::write_instance(out, apnae::sample_nae_formula(gen_n, gen_k, *gen_m, gen_seed, gen_exclude));
        } else if (gen_m) {
            apnae::write_instance(out, apnae::sample_ap_hypergraph_m(gen_n, gen_k, *gen_m, gen_seed, gen_exclude));
        } else {
            apnae::write_instance(out, apnae::sample_ap_hypergraph_p(gen_n, gen_k, *gen_p, gen_seed, gen_exclude));
        }
    });

    // --- count-mono ----------------------------------------------------------
    auto* cm = app.add_subcommand("count-mono", "Count monochromatic APs of a coloring");
    std::string cm_coloring;
    bool cm_random = false;
    std::uint32_t cm_n = 0, cm_k = 3;
    std::uint64_t cm_seed = 0;
    cm->add_option("--coloring", cm_coloring, "0/1 string, index i = vertex i");
    cm->add_flag("--random", cm_random, "sample a uniform coloring instead");
    cm->add_option("--n", cm_n, "vertex count (with --random)");
    cm->add_option("--seed", cm_seed, "seed (with --random)");
    cm->add_option("--k", cm_k, "progression length")->required();
    cm->callback([&] {
        if (cm_random == !cm_coloring.empty())
            throw std::invalid_argument("count-mono needs exactly one of --coloring or --random");
        apnae::Coloring col = cm_random ? apnae::sample_coloring(cm_n, cm_seed)
                                        : apnae::Coloring::from_bits(cm_coloring);
        check_params(col.size(), cm_k);
        apnae::MonoCount mc = apnae::count_monochromatic(col, cm_k);
        json j;
        j["n"] = col.size();
        j["k"] = cm_k;
        j["coloring"] = col.to_string();
        j["count"] = mc.monochromatic;
        j["total"] = mc.total;
        j["fraction"] = mc.fraction();
        if (cm_k == 3) j["closed_form"] = apnae::mono_ap3_count(col.size(), col.ones_count());
        std::cout << j.dump() << '\n';
    });

    // --- moments -------------------------------------------------------------
    auto* mo = app.add_subcommand("moments", "Closed-form moment report (JSON)");
    std::string mo_problem;
    std::uint32_t mo_n = 0, mo_k = 3;
    double mo_r = 0.0;
    bool mo_diag = false;
    mo->add_option("--problem", mo_problem, "nae or 2col")->required()->check(CLI::IsMember({"nae", "2col"}));
    mo->add_option("--n", mo_n)->required();
    mo->add_option("--k", mo_k)->required();
    mo->add_option("--r", mo_r, "clause density m/n")->required();
    mo->add_flag("--diagnostic", mo_diag, "run the second-moment maximizer scan");
    mo->callback([&] {
        check_params(mo_n, mo_k);
        apnae::MomentReport rep = apnae::compute_moment_report(mo_problem, mo_n, mo_k, mo_r, mo_diag);
        json j;
        j["problem"] = rep.problem;
        j["n"] = rep.n;
        j["k"] = rep.k;
        j["r"] = rep.r;
        j["m"] = rep.m;
        j["log2_EX"] = rep.log2_ex;
        j["log2_EX2"] = rep.log2_ex2;
        j["per_n_gap"] = rep.per_n_gap;
        j["diag_argmax_alpha"] = rep.diag_argmax_alpha ? json(*rep.diag_argmax_alpha) : json(nullptr);
        j["diag_success"] = rep.diag_success ? json(*rep.diag_success) : json(nullptr);
        std::cout << j.dump() << '\n';
    });

    // --- solve -----------------------------------------------------------------
    auto* so = app.add_subcommand("solve", "Solve an instance file (JSON result)");
    std::string so_in, so_method;
    std::uint64_t so_budget = apnae::kDefaultNodeBudget;
    so->add_option("--in", so_in, "instance file")->required();
    so->add_option("--method", so_method, "exhaustive or dpll")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "dpll"}));
    so->add_option("--budget", so_budget, "decision-node budget (dpll)");
    so->callback([&] {
        apnae::Instance inst = apnae::read_instance_file(so_in);
        apnae::SolveResult res;
        if (std::holds_alternative<apnae::Formula>(inst)) {
            const auto& f = std::get<apnae::Formula>(inst);
            res = so_method == "exhaustive" ? apnae::count_nae_exhaustive(f) : apnae::decide_nae(f, so_budget);
        } else {
            const auto& h = std::get<apnae::ApHypergraph>(inst);
            res = so_method == "exhaustive" ? apnae::count_2col_exhaustive(h) : apnae::decide_2col(h, so_budget);
        }
        std::cout << solve_result_json(res).dump() << '\n';
    });

    // --- scan -----------------------------------------------------------------
    auto* sc = app.add_subcommand("scan", "Monte Carlo satisfiability scan over a density grid");
    std::string sc_problem, sc_out;
    std::uint32_t sc_n = 0, sc_k = 3, sc_trials = 0;
    double sc_rmin = 0, sc_rmax = 0, sc_rstep = 0.1;
    std::uint64_t sc_seed = 0, sc_budget = 10'000'000;
    sc->add_option("--problem", sc_problem)->required()->check(CLI::IsMember({"nae", "2col"}));
    sc->add_option("--n", sc_n)->required();
    sc->add_option("--k", sc_k)->required();
    sc->add_option("--r-min", sc_rmin)->required();
    sc->add_option("--r-max", sc_rmax)->required();
    sc->add_option("--r-step", sc_rstep)->required();
    sc->add_option("--trials", sc_trials, "instances per grid point")->required();
    sc->add_option("--seed", sc_seed)->required();
    sc->add_option("--budget", sc_budget, "decision-node budget per instance");
    sc->add_option("--out", sc_out, "CSV output path")->required();
    sc->callback([&] {
        check_params(sc_n, sc_k);
        auto rows = apnae::threshold_scan(apnae::problem_from_string(sc_problem), sc_n, sc_k,
                                          sc_rmin, sc_rmax, sc_rstep, sc_trials, sc_seed, sc_budget);
        std::ofstream file;
        std::ostream& out = open_output(file, sc_out);
        apnae::write_scan_csv(out, rows);
        try {
            std::cerr << "crossover_estimate: " << apnae::crossover_estimate(rows) << '\n';
        } catch (const std::exception&) {
            // grid does not bracket 1/2; CSV is still complete
        }
    });

    // --- verify-moments ---------------------------------------------------------
    auto* vm = app.add_subcommand("verify-moments", "Monte Carlo check of the closed-form moments");
    std::string vm_problem;
    std::uint32_t vm_n = 0, vm_k = 3;
    std::uint64_t vm_m = 0, vm_samples = 0, vm_seed = 0;
    vm->add_option("--problem", vm_problem)->required()->check(CLI::IsMember({"nae", "2col"}));
    vm->add_option("--n", vm_n)->required();
    vm->add_option("--k", vm_k)->required();
    vm->add_option("--m", vm_m)->required();
    vm->add_option("--samples", vm_samples)->required();
    vm->add_option("--seed", vm_seed)->required();
    vm->callback([&] {
        check_params(vm_n, vm_k);
        apnae::MomentVerification v = apnae::verify_moments_montecarlo(
            apnae::problem_from_string(vm_problem), vm_n, vm_k, vm_m, vm_samples, vm_seed);
        json j;
        j["problem"] = apnae::to_string(v.problem);
        j["n"] = v.n;
        j["k"] = v.k;
        j["m"] = v.m;
        j["samples"] = v.samples;
        j["mean_X"] = v.mean_x;
        j["se_mean"] = v.se_mean;
        j["closed_EX"] = v.closed_ex;
        j["mean_X2"] = v.mean_x2;
        j["se_mean_X2"] = v.se_mean_x2;
        j["closed_EX2"] = v.closed_ex2 ? json(*v.closed_ex2) : json(nullptr);
        j["mean_within_3se"] = v.mean_within_3se;
        std::cout << j.dump() << '\n';
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
