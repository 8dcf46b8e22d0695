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
#include <string>

#include "ovp/newsvendor.hpp"

namespace ovp {

enum class PolicyKind {
    kOvp,
    kPto,
    kSaa,
    kOs,
    kOqd,
    kRo,
    kDroMoments,
    kDroWasserstein,
    kDroKl,
};

/// Canonical token used in configs and CSV output (OVP, PTO, SAA, OS, OQD,
/// RO, DRO_MOMENTS, DRO_WASSERSTEIN, DRO_KL).
std::string policy_kind_name(PolicyKind kind);

/// Inverse of policy_kind_name; case-insensitive. Throws config_error on
/// unknown tokens.
PolicyKind policy_kind_from_name(const std::string& name);

/// A policy choice plus its hyperparameters. radius applies to the
/// Wasserstein and KL policies only; shrink to RO only.
struct PolicySpec {
    PolicyKind kind = PolicyKind::kOvp;
    double radius = 0.0;
    double shrink = 0.95;
};

/// Plug-in solution: order the perfect-information quantity at theta_hat,
/// q = theta_hat * ln(p/c).
double solve_pto(double theta_hat, const Prices& prices);

/// Sample average approximation: the smallest minimizer of the empirical
/// newsvendor cost, i.e. the ceil(N (p-c)/p)-th order statistic.
double solve_saa(const Dataset& data, const Prices& prices);

/// Operational statistics: q = alpha * theta_hat with
/// alpha = n ((p/c)^{1/(n+1)} - 1).
double solve_os(double theta_hat, std::size_t n, const Prices& prices);

/// Quadratic variant of the operational statistic:
/// q = max(0, alpha * theta_hat - theta_hat^2 / (2 n^3)).
double solve_oqd(double theta_hat, std::size_t n, const Prices& prices);

/// Interval-robust solution over theta in [shrink, 2 - shrink] * theta_hat.
/// Expected cost decreases in theta, so the worst case sits at the lower
/// end and q = shrink * theta_hat * ln(p/c).
double solve_ro(double theta_hat, const Prices& prices, double shrink);

/**
 * Moment-ambiguity (mean d_hat fixed, variance at most sigma2_hat) minimax
 * order quantity. The worst case is a two-point distribution and the
 * optimum has the closed form
 *
 *   q = 0                                                   if (p-c)/p <= s2/(s2+d^2),
 *   q = d_hat + (sigma/2) (sqrt((p-c)/c) - sqrt(c/(p-c)))   otherwise,
 *
 * with the boundary tie broken toward ordering.
 */
double solve_dro_moments(double d_hat, double sigma2_hat, const Prices& prices);

/**
 * Worst-case expected cost over the L1-Wasserstein ball of radius r around
 * the empirical distribution:
 *
 *   W(q) = min_{lambda >= 0} lambda r + (1/N) sum_i beta_i(q, lambda),
 *   beta_i = max_{d in {0, d_i, q}} [ q c - p min(d, q) - lambda |d - d_i| ].
 *
 * The inner maximand is piecewise linear in d with kinks exactly at the
 * listed breakpoints. Exposed for oracle tests.
 */
double wasserstein_worst_case(double q, const Dataset& data, double radius,
                              const Prices& prices);

/// Minimizer of wasserstein_worst_case over q >= 0 (nested golden-section
/// searches). radius = 0 returns the SAA quantity.
double solve_dro_wasserstein(const Dataset& data, double radius, const Prices& prices);

/**
 * Worst-case expected cost over the KL ball of radius r around the empirical
 * distribution, via the 1-D entropic dual
 *
 *   K(q) = inf_{lambda > 0} lambda r + lambda log( (1/N) sum_i e^{l_i(q)/lambda} ),
 *
 * with l_i(q) = q c - p min(d_i, q) and the lambda -> 0 limit max_i l_i(q).
 * Exposed for oracle tests.
 */
double kl_worst_case(double q, const Dataset& data, double radius, const Prices& prices);

/// Minimizer of kl_worst_case over q >= 0. radius = 0 returns the SAA quantity.
double solve_dro_kl(const Dataset& data, double radius, const Prices& prices);

} // namespace ovp
