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

#pragma once

#include <cstdint>
#include <vector>

#include "ovp/localization.hpp"
#include "ovp/newsvendor.hpp"
#include "ovp/policies.hpp"
#include "ovp/solver.hpp"

namespace ovp {

/// True demand distribution used by the sweep: the exponential hypothesis
/// family itself, or Gamma(shape, theta) to induce misspecification.
struct TruthSpec {
    enum class Kind { kExponential, kGamma };
    Kind kind = Kind::kExponential;
    double gamma_shape = 1.0;
};

struct ExperimentConfig {
    Prices prices{2.0, 1.0};
    std::size_t n = 10;      // demand observations per dataset
    std::size_t m = 50;      // localization sample count
    std::size_t n_bar = 200; // replicate datasets per theta
    Localization localization = NormalLocalization{20.0, 1.0};
    TruthSpec truth;
    std::vector<PolicySpec> policies;
    std::uint64_t master_seed = 1;
    OvpConfig ovp;
};

struct EvaluationRow {
    double theta_true = 0.0;
    PolicyKind policy = PolicyKind::kOvp;
    double avg_profit = 0.0;
    double std_err = 0.0;   // standard error of the replicate mean
    double pct_regret = 0.0;
    std::size_t n_replicates = 0;
};

/// Replicate stream ids are theta_index * 2^32 + replicate; these reserved
/// theta indices key the non-replicate draws of one experiment.
inline constexpr std::uint32_t kSolverLocStreamIndex = kMetaThetaIndex;
inline constexpr std::uint32_t kEvalLocStreamIndex = kMetaThetaIndex + 1;

/// One demand draw from the truth at theta. Gamma with shape exactly 1 is
/// routed through the exponential inverse-CDF sampler, so a Gamma(1) run is
/// bit-identical to an exponential one.
double sample_truth_demand(const TruthSpec& truth, double theta, RngStream& rng);

/// The replicate dataset consumed by every policy at grid cell
/// (theta_index, replicate); exposed so tests can verify the common random
/// numbers contract.
Dataset sample_cell_dataset(const ExperimentConfig& cfg, double theta_true,
                            std::uint32_t theta_index, std::uint32_t replicate);

/// Order quantity a policy prescribes for one dataset. OVP policies solve the
/// sampled first-order condition against solver_loc_sample.
double policy_quantity(const PolicySpec& policy, const Dataset& data,
                       const Prices& prices, const LocalizationSample& solver_loc_sample,
                       const OvpConfig& ovp_cfg);

/// Exact expected profit of ordering q when the truth is truth(theta).
double true_expected_profit(double q, double theta_true, const TruthSpec& truth,
                            const Prices& prices);

/// Perfect-information benchmark at theta: the exact maximizer of the true
/// expected profit (closed form for exponential truth, golden-section search
/// for Gamma truth).
double oracle_quantity_for_truth(double theta_true, const TruthSpec& truth,
                                 const Prices& prices);
double oracle_profit_for_truth(double theta_true, const TruthSpec& truth,
                               const Prices& prices);

/**
 * Out-of-sample evaluation of one policy at one true theta: resample n_bar
 * datasets, apply the policy to each, average the exact true expected profit,
 * and report percentage regret against the ex-ante oracle.
 *
 * theta_index selects the replicate streams; calls with the same
 * (master_seed, theta_index) consume identical datasets regardless of policy.
 */
EvaluationRow evaluate_policy(const PolicySpec& policy, double theta_true,
                              std::uint32_t theta_index, const ExperimentConfig& cfg,
                              const LocalizationSample& solver_loc_sample);

/**
 * Full sweep: evaluate every configured policy on every theta drawn from the
 * evaluation localization sample. Solver and evaluation samples come from
 * disjoint streams. Rows are sorted by (theta, policy) and are deterministic
 * given master_seed, independent of num_threads (0 = hardware concurrency).
 */
std::vector<EvaluationRow> run_experiment(const ExperimentConfig& cfg,
                                          unsigned num_threads = 0);

} // namespace ovp
