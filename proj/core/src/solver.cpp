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

#include "ovp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ovp/errors.hpp"
#include "ovp/scalar_opt.hpp"

namespace ovp {

namespace {

void require_loc_sample(const LocalizationSample& loc_sample) {
    if (loc_sample.empty()) {
        throw degenerate_data_error("localization sample is empty");
    }
}

double weighted_foc(double q, const LocalizationSample& loc_sample,
                    const std::vector<double>& weights, const Prices& prices) {
    double sum = 0.0;
    for (std::size_t m = 0; m < loc_sample.size(); ++m) {
        sum += (prices.c - prices.p * std::exp(-q / loc_sample[m])) * weights[m];
    }
    return sum;
}

} // namespace

std::vector<double> sufficient_stat_weights(double theta_hat, std::size_t n,
                                            const LocalizationSample& loc_sample,
                                            WeightScaling scaling) {
    require_loc_sample(loc_sample);
    std::vector<double> weights(loc_sample.size());

    if (scaling == WeightScaling::kLogStabilized) {
        double max_log = -std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < loc_sample.size(); ++m) {
            weights[m] = log_g1_weight(theta_hat, loc_sample[m], n);
            max_log = std::max(max_log, weights[m]);
        }
        for (double& w : weights) {
            w = std::exp(w - max_log);
        }
        return weights;
    }

    const auto [min_it, max_it] = std::minmax_element(loc_sample.begin(), loc_sample.end());
    const double dn = static_cast<double>(n);
    const double scale = std::pow(*min_it, dn) * std::exp(dn * theta_hat / *max_it);
    for (std::size_t m = 0; m < loc_sample.size(); ++m) {
        weights[m] = scale * std::pow(loc_sample[m], -dn) *
                     std::exp(-dn * theta_hat / loc_sample[m]);
    }
    return weights;
}

double search_objective(double q, double theta_hat, std::size_t n,
                        const LocalizationSample& loc_sample, const Prices& prices) {
    if (!(q >= 0.0)) {
        throw parameter_error("order quantity must be nonnegative");
    }
    const auto weights =
        sufficient_stat_weights(theta_hat, n, loc_sample, WeightScaling::kLogStabilized);
    return weighted_foc(q, loc_sample, weights, prices);
}

OvpSolveResult solve_ovp_result(double theta_hat, std::size_t n,
                                const LocalizationSample& loc_sample,
                                const Prices& prices, const OvpConfig& cfg) {
    if (!(theta_hat > 0.0)) {
        throw parameter_error("theta_hat must be positive");
    }
    if (!(cfg.tol > 0.0) || !(cfg.b_init_factor > 1.0)) {
        throw parameter_error("OvpConfig requires tol > 0 and b_init_factor > 1");
    }
    const auto weights = sufficient_stat_weights(theta_hat, n, loc_sample, cfg.scaling);
    const auto objective = [&](double q) {
        return weighted_foc(q, loc_sample, weights, prices);
    };

    OvpSolveResult result;

    // f(0) = (c - p) * sum(w) < 0, so only the upper end needs expanding.
    double lo = 0.0;
    double hi = cfg.b_init_factor * theta_hat;
    while (objective(hi) <= 0.0) {
        if (++result.bracket_expansions > cfg.max_expand) {
            throw no_root_error("search objective still nonpositive at q=" +
                                std::to_string(hi) + " after " +
                                std::to_string(cfg.max_expand) + " expansions");
        }
        hi *= 2.0;
    }

    while (hi - lo > cfg.tol) {
        ++result.bisection_iters;
        const double mid = 0.5 * (lo + hi);
        const double fmid = objective(mid);
        if (fmid == 0.0) {
            result.q = mid;
            return result;
        }
        if (fmid < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    result.q = 0.5 * (lo + hi);
    return result;
}

double solve_ovp(double theta_hat, std::size_t n, const LocalizationSample& loc_sample,
                 const Prices& prices, const OvpConfig& cfg) {
    return solve_ovp_result(theta_hat, n, loc_sample, prices, cfg).q;
}

double solve_ovp_saa(double theta_hat, std::size_t n,
                     const LocalizationSample& loc_sample,
                     const std::vector<Dataset>& demand_samples_per_theta,
                     const Prices& prices) {
    require_loc_sample(loc_sample);
    if (demand_samples_per_theta.size() != loc_sample.size()) {
        throw degenerate_data_error("need exactly one dataset per localization point");
    }
    double max_demand = 0.0;
    for (const auto& ds : demand_samples_per_theta) {
        if (ds.empty()) {
            throw degenerate_data_error("empty dataset in the sample family");
        }
        for (double d : ds) {
            max_demand = std::max(max_demand, d);
        }
    }
    if (max_demand == 0.0) {
        return 0.0;
    }

    const auto weights =
        sufficient_stat_weights(theta_hat, n, loc_sample, WeightScaling::kLogStabilized);
    const auto cost = [&](double q) {
        double total = 0.0;
        for (std::size_t m = 0; m < loc_sample.size(); ++m) {
            double inner = 0.0;
            for (double d : demand_samples_per_theta[m]) {
                inner += q * prices.c - prices.p * std::min(d, q);
            }
            total += weights[m] * inner;
        }
        return total;
    };
    return golden_section_minimize(cost, 0.0, 3.0 * max_demand, 1e-6);
}

} // namespace ovp
