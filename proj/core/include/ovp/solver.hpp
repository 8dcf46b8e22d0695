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

#include <cstddef>
#include <vector>

#include "ovp/localization.hpp"
#include "ovp/newsvendor.hpp"

namespace ovp {

/// How the sufficient-statistic weights over the localization sample are scaled.
/// Any positive rescaling leaves the root of the search objective unchanged.
enum class WeightScaling {
    /// Subtract the max log-weight before exponentiating (log-sum-exp style);
    /// immune to underflow for any sample size.
    kLogStabilized,
    /// Multiply the raw weights theta^{-n} e^{-n theta_hat / theta} by the
    /// constant min(theta)^n e^{n theta_hat / max(theta)}; kept for fidelity
    /// checks against the stabilized form.
    kLiteralScale,
};

struct OvpConfig {
    double tol = 1e-8;          // bisection bracket width tolerance (demand units)
    int max_expand = 60;        // doublings of the upper bracket before giving up
    double b_init_factor = 2.0; // initial upper bracket as a multiple of theta_hat
    WeightScaling scaling = WeightScaling::kLogStabilized;
};

/// Weight of each localization point theta_m for a sample of size n with
/// statistic theta_hat, under the requested scaling.
std::vector<double> sufficient_stat_weights(double theta_hat, std::size_t n,
                                            const LocalizationSample& loc_sample,
                                            WeightScaling scaling);

/**
 * Sampled first-order condition of the out-of-sample objective:
 *
 *   sum_m (c - p e^{-q/theta_m}) w_m,    w_m = g1(theta_hat, theta_m) weight.
 *
 * Strictly increasing in q; its unique root is the OVP quantity.
 */
double search_objective(double q, double theta_hat, std::size_t n,
                        const LocalizationSample& loc_sample, const Prices& prices);

struct OvpSolveResult {
    double q = 0.0;
    int bisection_iters = 0;
    int bracket_expansions = 0;
};

/**
 * Bisection solve of search_objective(q) = 0.
 *
 * The bracket starts at [0, b_init_factor * theta_hat] and the upper end is
 * doubled until the objective there is positive (at most max_expand times,
 * then no_root_error). An exact zero hit returns immediately; otherwise the
 * bracket is shrunk to width tol and its midpoint returned.
 */
OvpSolveResult solve_ovp_result(double theta_hat, std::size_t n,
                                const LocalizationSample& loc_sample,
                                const Prices& prices, const OvpConfig& cfg = {});

double solve_ovp(double theta_hat, std::size_t n, const LocalizationSample& loc_sample,
                 const Prices& prices, const OvpConfig& cfg = {});

/**
 * Doubly sampled convex path for non-differentiable costs: minimize
 *
 *   sum_m w_m sum_l [ q c - p min(d_{m,l}, q) ]
 *
 * over q >= 0 by golden-section search (the objective is convex piecewise
 * linear). demand_samples_per_theta holds one dataset per localization point.
 */
double solve_ovp_saa(double theta_hat, std::size_t n,
                     const LocalizationSample& loc_sample,
                     const std::vector<Dataset>& demand_samples_per_theta,
                     const Prices& prices);

} // namespace ovp
