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

#include "ovp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ovp/distributions.hpp"
#include "ovp/errors.hpp"
#include "ovp/parallel.hpp"
#include "ovp/scalar_opt.hpp"

namespace ovp {

namespace {

void validate_experiment(const ExperimentConfig& cfg) {
    if (cfg.n == 0 || cfg.m == 0 || cfg.n_bar == 0) {
        throw parameter_error("experiment counts n, m, n_bar must all be >= 1");
    }
    if (cfg.truth.kind == TruthSpec::Kind::kGamma && !(cfg.truth.gamma_shape > 0.0)) {
        throw parameter_error("gamma truth shape must be positive");
    }
    validate_localization(cfg.localization);
}

double sample_variance(const Dataset& data, double mean) {
    if (data.size() < 2) {
        return 0.0;
    }
    double ss = 0.0;
    for (double d : data) {
        ss += (d - mean) * (d - mean);
    }
    return ss / static_cast<double>(data.size() - 1);
}

struct ReplicateStats {
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double profit) {
        sum += profit;
        sum_sq += profit * profit;
    }
};

EvaluationRow make_row(double theta_true, PolicyKind kind, const ReplicateStats& stats,
                       std::size_t n_replicates, double oracle) {
    if (!(oracle > 0.0)) {
        throw evaluation_error("oracle profit is not positive at theta=" +
                               std::to_string(theta_true) +
                               "; percentage regret is ill-defined");
    }
    const double dn = static_cast<double>(n_replicates);
    const double avg = stats.sum / dn;
    double std_err = 0.0;
    if (n_replicates > 1) {
        const double var = std::max(0.0, (stats.sum_sq - dn * avg * avg) / (dn - 1.0));
        std_err = std::sqrt(var / dn);
    }
    EvaluationRow row;
    row.theta_true = theta_true;
    row.policy = kind;
    row.avg_profit = avg;
    row.std_err = std_err;
    row.pct_regret = 100.0 * (oracle - avg) / std::abs(oracle);
    row.n_replicates = n_replicates;
    return row;
}

} // namespace

double sample_truth_demand(const TruthSpec& truth, double theta, RngStream& rng) {
    if (truth.kind == TruthSpec::Kind::kExponential || truth.gamma_shape == 1.0) {
        return sample_exponential(theta, rng);
    }
    return sample_gamma(truth.gamma_shape, theta, rng);
}

Dataset sample_cell_dataset(const ExperimentConfig& cfg, double theta_true,
                            std::uint32_t theta_index, std::uint32_t replicate) {
    RngStream rng = RngStream::for_cell(cfg.master_seed, theta_index, replicate);
    Dataset data(cfg.n);
    for (double& d : data) {
        d = sample_truth_demand(cfg.truth, theta_true, rng);
    }
    return data;
}

double policy_quantity(const PolicySpec& policy, const Dataset& data,
                       const Prices& prices, const LocalizationSample& solver_loc_sample,
                       const OvpConfig& ovp_cfg) {
    const SufficientStat stat = mle(data);
    switch (policy.kind) {
    case PolicyKind::kOvp:
        return solve_ovp(stat.theta_hat, stat.n, solver_loc_sample, prices, ovp_cfg);
    case PolicyKind::kPto:
        return solve_pto(stat.theta_hat, prices);
    case PolicyKind::kSaa:
        return solve_saa(data, prices);
    case PolicyKind::kOs:
        return solve_os(stat.theta_hat, stat.n, prices);
    case PolicyKind::kOqd:
        return solve_oqd(stat.theta_hat, stat.n, prices);
    case PolicyKind::kRo:
        return solve_ro(stat.theta_hat, prices, policy.shrink);
    case PolicyKind::kDroMoments:
        return solve_dro_moments(stat.theta_hat, sample_variance(data, stat.theta_hat),
                                 prices);
    case PolicyKind::kDroWasserstein:
        return solve_dro_wasserstein(data, policy.radius, prices);
    case PolicyKind::kDroKl:
        return solve_dro_kl(data, policy.radius, prices);
    }
    throw parameter_error("unknown policy kind");
}

double true_expected_profit(double q, double theta_true, const TruthSpec& truth,
                            const Prices& prices) {
    if (truth.kind == TruthSpec::Kind::kExponential) {
        return expected_profit_exp(q, theta_true, prices);
    }
    return expected_profit_gamma(q, truth.gamma_shape, theta_true, prices);
}

double oracle_quantity_for_truth(double theta_true, const TruthSpec& truth,
                                 const Prices& prices) {
    if (truth.kind == TruthSpec::Kind::kExponential) {
        return oracle_quantity(theta_true, prices);
    }
    const double hi = 20.0 * truth.gamma_shape * theta_true;
    return golden_section_maximize(
        [&](double q) { return expected_profit_gamma(q, truth.gamma_shape, theta_true, prices); },
        0.0, hi, 1e-8);
}

double oracle_profit_for_truth(double theta_true, const TruthSpec& truth,
                               const Prices& prices) {
    return true_expected_profit(oracle_quantity_for_truth(theta_true, truth, prices),
                                theta_true, truth, prices);
}

EvaluationRow evaluate_policy(const PolicySpec& policy, double theta_true,
                              std::uint32_t theta_index, const ExperimentConfig& cfg,
                              const LocalizationSample& solver_loc_sample) {
    validate_experiment(cfg);
    if (!(theta_true > 0.0)) {
        throw parameter_error("theta_true must be positive");
    }
    const double oracle = oracle_profit_for_truth(theta_true, cfg.truth, cfg.prices);

    ReplicateStats stats;
    for (std::uint32_t i = 0; i < cfg.n_bar; ++i) {
        try {
            const Dataset data = sample_cell_dataset(cfg, theta_true, theta_index, i);
            const double q =
                policy_quantity(policy, data, cfg.prices, solver_loc_sample, cfg.ovp);
            stats.add(true_expected_profit(q, theta_true, cfg.truth, cfg.prices));
        } catch (const std::exception& e) {
            throw evaluation_error("policy " + policy_kind_name(policy.kind) +
                                   " failed at theta=" + std::to_string(theta_true) +
                                   ", replicate=" + std::to_string(i) + ": " + e.what());
        }
    }
    return make_row(theta_true, policy.kind, stats, cfg.n_bar, oracle);
}

std::vector<EvaluationRow> run_experiment(const ExperimentConfig& cfg,
                                          unsigned num_threads) {
    validate_experiment(cfg);
    if (cfg.policies.empty()) {
        throw parameter_error("experiment has no policies");
    }

    RngStream solver_rng = RngStream::for_cell(cfg.master_seed, kSolverLocStreamIndex, 0);
    RngStream eval_rng = RngStream::for_cell(cfg.master_seed, kEvalLocStreamIndex, 0);
    const LocalizationSample solver_loc =
        sample_localization(cfg.localization, cfg.m, solver_rng);
    const LocalizationSample eval_thetas =
        sample_localization(cfg.localization, cfg.m, eval_rng);

    const std::size_t n_policies = cfg.policies.size();
    std::vector<EvaluationRow> rows(cfg.m * n_policies);

    parallel_for_index(cfg.m, num_threads, [&](std::size_t j) {
        const double theta = eval_thetas[j];
        const double oracle = oracle_profit_for_truth(theta, cfg.truth, cfg.prices);
        std::vector<ReplicateStats> stats(n_policies);

        for (std::uint32_t i = 0; i < cfg.n_bar; ++i) {
            // One dataset per cell, shared by every policy (common random numbers).
            const Dataset data =
                sample_cell_dataset(cfg, theta, static_cast<std::uint32_t>(j), i);
            for (std::size_t k = 0; k < n_policies; ++k) {
                try {
                    const double q = policy_quantity(cfg.policies[k], data, cfg.prices,
                                                     solver_loc, cfg.ovp);
                    stats[k].add(true_expected_profit(q, theta, cfg.truth, cfg.prices));
                } catch (const std::exception& e) {
                    throw evaluation_error(
                        "policy " + policy_kind_name(cfg.policies[k].kind) +
                        " failed at theta=" + std::to_string(theta) +
                        ", replicate=" + std::to_string(i) + ": " + e.what());
                }
            }
        }
        for (std::size_t k = 0; k < n_policies; ++k) {
            rows[j * n_policies + k] =
                make_row(theta, cfg.policies[k].kind, stats[k], cfg.n_bar, oracle);
        }
    });

    std::sort(rows.begin(), rows.end(), [](const EvaluationRow& a, const EvaluationRow& b) {
        if (a.theta_true != b.theta_true) {
            return a.theta_true < b.theta_true;
        }
        return static_cast<int>(a.policy) < static_cast<int>(b.policy);
    });
    return rows;
}

} // namespace ovp
