/*
   Copyright 2026 The ovpbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the exit status is the number of failed criteria. The master seed for
// every seeded criterion is 1.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "ovp/crossval.hpp"
#include "ovp/distributions.hpp"
#include "ovp/evaluation.hpp"

using namespace ovp;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kBaseSeed = 1;
const Prices kBase(2.0, 1.0);

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

LocalizationSample base_solver_loc(const ExperimentConfig& cfg) {
    RngStream rng = RngStream::for_cell(cfg.master_seed, kSolverLocStreamIndex, 0);
    return sample_localization(cfg.localization, cfg.m, rng);
}

// ---------------------------------------------------------------------------

void criterion_1_dirac_closed_form() {
    Timer timer;
    double worst = 0.0;
    for (double theta_bar : {5.0, 20.0, 100.0}) {
        const LocalizationSample loc(50, theta_bar);
        for (double theta_hat : {1.0, 20.0, 50.0}) {
            const double q = solve_ovp(theta_hat, 10, loc, kBase);
            worst = std::max(worst, std::abs(q - theta_bar * std::log(2.0)));
        }
    }
    const double elapsed = timer.seconds();
    report(1, "Dirac localization recovers theta_bar ln(p/c)",
           worst <= 1e-6 && elapsed < 1.0,
           fmt("max |q - closed form| = %.2e, %.2fs", worst, elapsed));
}

void criterion_2_monotone_root() {
    RngStream rng(kBaseSeed, 2000);
    RngStream loc_rng = RngStream::for_cell(kBaseSeed, kSolverLocStreamIndex, 0);
    const auto loc = sample_localization(NormalLocalization{20.0, 1.0}, 50, loc_rng);

    bool monotone = true;
    for (int trial = 0; trial < 10000 && monotone; ++trial) {
        double q1 = 60.0 * rng.next_unit();
        double q2 = 60.0 * rng.next_unit();
        if (q1 == q2) continue;
        if (q1 > q2) std::swap(q1, q2);
        const double theta_hat = 0.5 + 49.5 * rng.next_unit();
        if (!(search_objective(q1, theta_hat, 10, loc, kBase) <
              search_objective(q2, theta_hat, 10, loc, kBase))) {
            monotone = false;
        }
    }

    int max_iters = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const double theta_hat = 0.5 + 49.5 * rng.next_unit();
        const auto result = solve_ovp_result(theta_hat, 10, loc, kBase);
        max_iters = std::max(max_iters, result.bisection_iters);
    }
    report(2, "search objective strictly increasing; bisection converges",
           monotone && max_iters <= 200,
           fmt("monotone on 10^4 pairs: %s, max iterations %d", monotone ? "yes" : "no",
               max_iters));
}

void criterion_3_os_dominates_pto() {
    Timer timer;
    ExperimentConfig cfg;
    cfg.master_seed = kBaseSeed;
    const auto solver_loc = base_solver_loc(cfg);

    int dominated = 0;
    const int grid_points = 20;
    for (int k = 0; k < grid_points; ++k) {
        const double theta = 17.0 + 6.0 * k / (grid_points - 1);
        const auto os =
            evaluate_policy(PolicySpec{PolicyKind::kOs}, theta, k, cfg, solver_loc);
        const auto pto =
            evaluate_policy(PolicySpec{PolicyKind::kPto}, theta, k, cfg, solver_loc);
        if (os.avg_profit >= pto.avg_profit) {
            ++dominated;
        }
    }
    const double elapsed = timer.seconds();
    report(3, "OS average profit dominates PTO on the theta grid",
           dominated >= 19 && elapsed < 30.0,
           fmt("OS >= PTO at %d/%d grid points, %.2fs", dominated, grid_points, elapsed));
}

void criterion_4_ovp_superiority() {
    Timer timer;
    ExperimentConfig cfg;
    cfg.master_seed = kBaseSeed;
    cfg.policies = {PolicySpec{PolicyKind::kOvp}, PolicySpec{PolicyKind::kOs}};
    const auto rows = run_experiment(cfg);

    double regret_sum = 0.0;
    int points = 0, ovp_ge_os = 0;
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        regret_sum += rows[i].pct_regret; // enum order puts OVP first per theta
        if (rows[i].avg_profit >= rows[i + 1].avg_profit) {
            ++ovp_ge_os;
        }
        ++points;
    }
    const double mean_regret = regret_sum / points;
    const double share = static_cast<double>(ovp_ge_os) / points;
    const double elapsed = timer.seconds();
    report(4, "OVP achieves near-zero regret and beats OS",
           mean_regret <= 2.0 && share >= 0.9 && elapsed < 300.0,
           fmt("mean regret %.3f%%, OVP >= OS at %.0f%% of thetas, %.1fs", mean_regret,
               100.0 * share, elapsed));
}

void criterion_5_specificity_sensitivity() {
    ExperimentConfig cfg;
    cfg.master_seed = kBaseSeed;
    RngStream rng1 = RngStream::for_cell(cfg.master_seed, kSolverLocStreamIndex, 0);
    const auto loc_narrow = sample_localization(NormalLocalization{20.0, 1.0}, cfg.m, rng1);
    RngStream rng2 = RngStream::for_cell(cfg.master_seed, kSolverLocStreamIndex, 0);
    const auto loc_wide = sample_localization(NormalLocalization{20.0, 2.0}, cfg.m, rng2);

    // Paired comparison on shared replicate datasets at theta = 20.
    const double oracle = oracle_profit_for_truth(20.0, cfg.truth, cfg.prices);
    double diff_sum = 0.0, diff_sq = 0.0;
    for (std::uint32_t i = 0; i < cfg.n_bar; ++i) {
        const Dataset data = sample_cell_dataset(cfg, 20.0, 0, i);
        const double q_narrow = policy_quantity(PolicySpec{PolicyKind::kOvp}, data,
                                                cfg.prices, loc_narrow, cfg.ovp);
        const double q_wide = policy_quantity(PolicySpec{PolicyKind::kOvp}, data,
                                              cfg.prices, loc_wide, cfg.ovp);
        const double regret_narrow =
            100.0 * (oracle - expected_profit_exp(q_narrow, 20.0, cfg.prices)) / oracle;
        const double regret_wide =
            100.0 * (oracle - expected_profit_exp(q_wide, 20.0, cfg.prices)) / oracle;
        const double diff = regret_narrow - regret_wide;
        diff_sum += diff;
        diff_sq += diff * diff;
    }
    const double n = static_cast<double>(cfg.n_bar);
    const double mean_diff = diff_sum / n;
    const double se = std::sqrt(std::max(0.0, (diff_sq - n * mean_diff * mean_diff) /
                                                  (n - 1.0) / n));
    report(5, "narrow localization beats wide at its own center",
           mean_diff <= 3.0 * se,
           fmt("regret difference (narrow - wide) = %.4f%% +- %.4f%%", mean_diff, se));
}

void criterion_6_oqd_crossing() {
    ExperimentConfig cfg;
    cfg.master_seed = kBaseSeed;
    cfg.n = 5;
    cfg.n_bar = 500;
    const auto solver_loc = base_solver_loc(cfg);

    int oqd_wins = 0, os_wins = 0;
    for (int k = 0; k < 13; ++k) {
        const double theta = 15.0 + 30.0 * k / 12.0;
        const auto os =
            evaluate_policy(PolicySpec{PolicyKind::kOs}, theta, k, cfg, solver_loc);
        const auto oqd =
            evaluate_policy(PolicySpec{PolicyKind::kOqd}, theta, k, cfg, solver_loc);
        if (oqd.avg_profit > os.avg_profit) ++oqd_wins;
        if (os.avg_profit > oqd.avg_profit) ++os_wins;
    }
    report(6, "OQD and OS each dominate somewhere on the theta grid",
           oqd_wins > 0 && os_wins > 0,
           fmt("OQD wins %d and OS wins %d of 13 grid points", oqd_wins, os_wins));
}

void criterion_7_dro_oracles() {
    Timer timer;
    RngStream rng(kBaseSeed, 7000);
    double w_gap = 0.0, kl_gap = 0.0, scarf_gap = 0.0;

    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(5.0 * rng.next_unit());
        Dataset data(n);
        double max_d = 0.0;
        for (double& d : data) {
            d = 1.0 + 24.0 * rng.next_unit();
            max_d = std::max(max_d, d);
        }
        const double radius_w = 0.2 + 3.0 * rng.next_unit();
        const double radius_kl = 0.02 + 0.5 * rng.next_unit();
        const double grid_max = max_d + 5.0;

        for (int j = 0; j < 4; ++j) {
            const double q = (0.1 + 0.9 * rng.next_unit()) * max_d;
            w_gap = std::max(w_gap,
                             std::abs(wasserstein_worst_case(q, data, radius_w, kBase) -
                                      oracles::wasserstein_primal_worst_case(
                                          q, data, radius_w, kBase, 0.01, grid_max)));
            kl_gap = std::max(kl_gap,
                              std::abs(kl_worst_case(q, data, radius_kl, kBase) -
                                       oracles::kl_tilt_worst_case(q, data, radius_kl,
                                                                   kBase)));
        }

        if (trial < 5) {
            const double q_w = solve_dro_wasserstein(data, radius_w, kBase);
            w_gap = std::max(
                w_gap, std::abs(wasserstein_worst_case(q_w, data, radius_w, kBase) -
                                oracles::wasserstein_primal_optimal_value(
                                    data, radius_w, kBase, 0.05, grid_max)));
            const double q_k = solve_dro_kl(data, radius_kl, kBase);
            kl_gap = std::max(kl_gap,
                              std::abs(kl_worst_case(q_k, data, radius_kl, kBase) -
                                       oracles::kl_primal_optimal_value(
                                           data, radius_kl, kBase, 0.02, max_d)));
        }
    }

    for (int trial = 0; trial < 20; ++trial) {
        const double d_hat = 5.0 + 20.0 * rng.next_unit();
        const double sigma2 = (0.05 + 0.3 * rng.next_unit()) * d_hat * d_hat;
        const Prices prices(trial % 2 == 0 ? 2.0 : 3.0, 1.0);
        scarf_gap = std::max(
            scarf_gap, std::abs(solve_dro_moments(d_hat, sigma2, prices) -
                                oracles::scarf_two_point_oracle_quantity(d_hat, sigma2,
                                                                         prices)));
    }

    const double elapsed = timer.seconds();
    report(7, "DRO duals match primal brute-force oracles",
           w_gap <= 1e-2 && kl_gap <= 1e-2 && scarf_gap <= 1e-3 && elapsed < 60.0,
           fmt("wasserstein %.2e, kl %.2e, scarf %.2e, %.1fs", w_gap, kl_gap, scarf_gap,
               elapsed));
}

void criterion_8_zero_radius_collapse() {
    RngStream rng(kBaseSeed, 8000);
    bool exact = true;
    for (int trial = 0; trial < 50 && exact; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(10.0 * rng.next_unit());
        Dataset data(n);
        for (double& d : data) {
            d = 0.5 + 25.0 * rng.next_unit();
        }
        const double saa = solve_saa(data, kBase);
        exact = solve_dro_wasserstein(data, 0.0, kBase) == saa &&
                solve_dro_kl(data, 0.0, kBase) == saa;
    }
    report(8, "zero-radius DRO returns the SAA quantity exactly", exact,
           exact ? "50/50 datasets" : "mismatch found");
}

void criterion_9_special_functions() {
    double gamma_gap = 0.0;
    for (double a : {0.85, 1.0, 1.15, 2.0, 5.0}) {
        for (double x : {0.1, 1.0, 5.0, 20.0, 60.0}) {
            gamma_gap = std::max(gamma_gap,
                                 std::abs(reg_lower_gamma(a, x) -
                                          oracles::reg_lower_gamma_quadrature(a, x)));
        }
    }

    double profit_gap = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double q = 0.75 * k;
        profit_gap = std::max(profit_gap,
                              std::abs(expected_profit_gamma(q, 1.0, 20.0, kBase) -
                                       expected_profit_exp(q, 20.0, kBase)));
    }
    report(9, "special functions match quadrature and closed forms",
           gamma_gap <= 1e-8 && profit_gap <= 1e-10,
           fmt("P(a,x) gap %.2e, gamma-vs-exp profit gap %.2e", gamma_gap, profit_gap));
}

void criterion_10_misspecification_direction() {
    ExperimentConfig cfg;
    cfg.master_seed = kBaseSeed;
    cfg.policies = {PolicySpec{PolicyKind::kSaa}, PolicySpec{PolicyKind::kOvp}};
    const auto rows_base = run_experiment(cfg);

    ExperimentConfig mis = cfg;
    mis.truth = TruthSpec{TruthSpec::Kind::kGamma, 1.15};
    const auto rows_mis = run_experiment(mis);

    int increased = 0, total = 0;
    for (std::size_t i = 0; i < rows_base.size(); i += 2) {
        // Rows are sorted (theta, policy); OVP precedes SAA in enum order.
        const double gap_base = rows_base[i + 1].avg_profit - rows_base[i].avg_profit;
        const double gap_mis = rows_mis[i + 1].avg_profit - rows_mis[i].avg_profit;
        if (gap_mis > gap_base) {
            ++increased;
        }
        ++total;
    }
    const double share = static_cast<double>(increased) / total;
    report(10, "misspecification moves the SAA-OVP gap toward SAA", share >= 0.7,
           fmt("gap increased at %d/%d thetas (%.0f%%)", increased, total, 100.0 * share));
}

void criterion_11_calibration_determinism() {
    CvConfig cfg;
    cfg.seed = kBaseSeed;
    bool ok = true;
    std::string detail;
    for (PolicyKind kind : {PolicyKind::kDroWasserstein, PolicyKind::kDroKl}) {
        const double chosen = calibrate_radius(kind, cfg, kBase, 10);
        const double again = calibrate_radius(kind, cfg, kBase, 10);
        const auto curve = cv_gap_curve(kind, cfg, kBase, 10);
        double best_radius = curve[0].radius;
        double best_gap = curve[0].avg_pct_gap;
        for (const auto& point : curve) {
            if (point.avg_pct_gap < best_gap) {
                best_gap = point.avg_pct_gap;
                best_radius = point.radius;
            }
        }
        ok = ok && chosen == again && chosen == best_radius;
        detail += fmt("%s r=%.4g ", policy_kind_name(kind).c_str(), chosen);
    }
    report(11, "calibrated radius is seed-stable and the exhaustive argmin", ok, detail);
}

void criterion_12_reproducibility() {
#ifndef OVPBENCH_CLI_PATH
    report(12, "byte-identical CLI reproducibility", false, "CLI path not configured");
#else
    const fs::path dir =
        fs::temp_directory_path() / ("ovpbench_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    const std::string config = R"({
      "localization": {"kind": "normal", "mu": 20, "sigma": 1},
      "policies": ["OVP", "PTO", "SAA", "OS", "RO",
                   "DRO_MOMENTS",
                   {"kind": "DRO_WASSERSTEIN", "radius": 0.7989772444},
                   {"kind": "DRO_KL", "radius": 0.0001}],
      "master_seed": 1
    })";
    {
        std::ofstream out(dir / "base.json");
        out << config;
    }
    const auto invoke = [&](const std::string& out_name, const std::string& extra) {
        const std::string cmd = std::string(OVPBENCH_CLI_PATH) + " run --config " +
                                (dir / "base.json").string() + " --out " +
                                (dir / out_name).string() + extra + " > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    bool ok = invoke("a", "") == 0 && invoke("b", "") == 0 &&
              invoke("c", " --threads 1") == 0;
    std::string detail = "CLI run failed";
    if (ok) {
        const std::string a = slurp(dir / "a" / "results.csv");
        int lines = 0;
        for (char ch : a) {
            if (ch == '\n') ++lines;
        }
        ok = !a.empty() && a == slurp(dir / "b" / "results.csv") &&
             a == slurp(dir / "c" / "results.csv") && lines == 1 + 50 * 8;
        detail = ok ? fmt("three runs byte-identical, header + 50 x 8 rows (%zu bytes)",
                          a.size())
                    : fmt("results.csv differ or wrong shape (%d lines)", lines);
    }
    std::error_code ec;
    fs::remove_all(dir, ec);
    report(12, "byte-identical CLI reproducibility across runs and threads", ok, detail);
#endif
}

} // namespace

int main() {
    std::printf("acceptance suite (base seed %llu)\n",
                static_cast<unsigned long long>(kBaseSeed));
    criterion_1_dirac_closed_form();
    criterion_2_monotone_root();
    criterion_3_os_dominates_pto();
    criterion_4_ovp_superiority();
    criterion_5_specificity_sensitivity();
    criterion_6_oqd_crossing();
    criterion_7_dro_oracles();
    criterion_8_zero_radius_collapse();
    criterion_9_special_functions();
    criterion_10_misspecification_direction();
    criterion_11_calibration_determinism();
    criterion_12_reproducibility();
    std::printf("%d of 12 criteria failed\n", g_failures);
    return g_failures;
}
