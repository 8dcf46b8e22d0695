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

namespace ovp {

/// Newsvendor economics: selling price p and cost price c, p > c > 0.
struct Prices {
    double p;
    double c;

    Prices(double p_in, double c_in);

    /// Profit-maximizing demand quantile (p - c) / p.
    double critical_fractile() const { return (p - c) / p; }
};

/// Ordered demand observations; nonempty, all entries >= 0.
using Dataset = std::vector<double>;

/// Sample mean of a dataset together with its size. For the
/// mean-parameterized exponential family the mean is the MLE and a
/// sufficient statistic.
struct SufficientStat {
    double theta_hat;
    std::size_t n;
};

/// MLE of the exponential mean: the sample mean. Rejects empty or all-zero data.
SufficientStat mle(const Dataset& data);

/**
 * Expected newsvendor profit under Exponential(theta) demand:
 *
 *   E[p min(d, q)] - q c  =  p theta (1 - e^{-q/theta}) - q c.
 */
double expected_profit_exp(double q, double theta, const Prices& prices);

/// Derivative of the expected cost in q: c - p e^{-q/theta}. Strictly
/// increasing in q, negative at q = 0, approaching c from below.
double dphi_dq(double q, double theta, const Prices& prices);

/// Perfect-information order quantity theta * ln(p/c), the stationary
/// point of the expected cost.
double oracle_quantity(double theta, const Prices& prices);

/**
 * Log of the sufficient-statistic weight g1(theta_hat, theta) for a sample
 * of size n from the exponential family:
 *
 *   log g1 = -n ln(theta) - n theta_hat / theta.
 *
 * n = 0 gives 0 (no data, flat weight).
 */
double log_g1_weight(double theta_hat, double theta, std::size_t n);

/**
 * Expected newsvendor profit under Gamma(shape, scale) demand:
 *
 *   p [ shape scale P(shape+1, q/scale) + q (1 - P(shape, q/scale)) ] - q c,
 *
 * with P the regularized lower incomplete gamma function.
 */
double expected_profit_gamma(double q, double shape, double scale, const Prices& prices);

} // namespace ovp
