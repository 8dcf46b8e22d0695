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

#include "ovp/policies.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "ovp/errors.hpp"
#include "ovp/scalar_opt.hpp"

namespace ovp {

namespace {

void require_theta_hat(double theta_hat) {
    if (!(theta_hat > 0.0)) {
        throw parameter_error("theta_hat must be positive");
    }
}

void require_data(const Dataset& data) {
    if (data.empty()) {
        throw degenerate_data_error("dataset is empty");
    }
}

double os_alpha(std::size_t n, const Prices& prices) {
    const double dn = static_cast<double>(n);
    return dn * (std::pow(prices.p / prices.c, 1.0 / (dn + 1.0)) - 1.0);
}

double max_demand(const Dataset& data) {
    return *std::max_element(data.begin(), data.end());
}

/// q c - p min(d_i, q), the empirical per-atom cost.
double atom_cost(double q, double d, const Prices& prices) {
    return q * prices.c - prices.p * std::min(d, q);
}

} // namespace

std::string policy_kind_name(PolicyKind kind) {
    switch (kind) {
    case PolicyKind::kOvp: return "OVP";
    case PolicyKind::kPto: return "PTO";
    case PolicyKind::kSaa: return "SAA";
    case PolicyKind::kOs: return "OS";
    case PolicyKind::kOqd: return "OQD";
    case PolicyKind::kRo: return "RO";
    case PolicyKind::kDroMoments: return "DRO_MOMENTS";
    case PolicyKind::kDroWasserstein: return "DRO_WASSERSTEIN";
    case PolicyKind::kDroKl: return "DRO_KL";
    }
    throw parameter_error("unknown policy kind");
}

PolicyKind policy_kind_from_name(const std::string& name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    if (upper == "OVP") return PolicyKind::kOvp;
    if (upper == "PTO") return PolicyKind::kPto;
    if (upper == "SAA") return PolicyKind::kSaa;
    if (upper == "OS") return PolicyKind::kOs;
    if (upper == "OQD") return PolicyKind::kOqd;
    if (upper == "RO") return PolicyKind::kRo;
    if (upper == "DRO_MOMENTS") return PolicyKind::kDroMoments;
    if (upper == "DRO_WASSERSTEIN") return PolicyKind::kDroWasserstein;
    if (upper == "DRO_KL") return PolicyKind::kDroKl;
    throw config_error("unknown policy kind '" + name + "'");
}

double solve_pto(double theta_hat, const Prices& prices) {
    require_theta_hat(theta_hat);
    return theta_hat * std::log(prices.p / prices.c);
}

double solve_saa(const Dataset& data, const Prices& prices) {
    require_data(data);
    const std::size_t n = data.size();
    // Smallest j with empirical-cost slope c - p (n-j)/n >= 0, i.e.
    // j >= n (p-c)/p; the epsilon guards the exact-integer case.
    const double target = static_cast<double>(n) * prices.critical_fractile();
    std::size_t k = static_cast<std::size_t>(std::ceil(target - 1e-12));
    k = std::clamp<std::size_t>(k, 1, n);

    Dataset sorted(data);
    std::sort(sorted.begin(), sorted.end());
    return sorted[k - 1];
}

double solve_os(double theta_hat, std::size_t n, const Prices& prices) {
    require_theta_hat(theta_hat);
    if (n == 0) {
        throw parameter_error("operational statistic needs n >= 1");
    }
    return os_alpha(n, prices) * theta_hat;
}

double solve_oqd(double theta_hat, std::size_t n, const Prices& prices) {
    require_theta_hat(theta_hat);
    if (n == 0) {
        throw parameter_error("quadratic operational statistic needs n >= 1");
    }
    const double dn = static_cast<double>(n);
    const double q = os_alpha(n, prices) * theta_hat -
                     theta_hat * theta_hat / (2.0 * dn * dn * dn);
    return std::max(0.0, q);
}

double solve_ro(double theta_hat, const Prices& prices, double shrink) {
    require_theta_hat(theta_hat);
    if (!(shrink > 0.0) || !(shrink <= 1.0)) {
        throw parameter_error("RO shrink factor must lie in (0, 1]");
    }
    // Expected cost decreases in theta, so the worst case is the interval's
    // lower end shrink * theta_hat.
    return shrink * theta_hat * std::log(prices.p / prices.c);
}

double solve_dro_moments(double d_hat, double sigma2_hat, const Prices& prices) {
    if (!(d_hat > 0.0)) {
        throw parameter_error("d_hat must be positive");
    }
    if (sigma2_hat < 0.0) {
        throw parameter_error("sigma2_hat must be nonnegative");
    }
    const double not_ordering_mass = sigma2_hat / (sigma2_hat + d_hat * d_hat);
    if (prices.critical_fractile() < not_ordering_mass) {
        return 0.0;
    }
    const double sigma = std::sqrt(sigma2_hat);
    const double ratio = (prices.p - prices.c) / prices.c;
    return d_hat + 0.5 * sigma * (std::sqrt(ratio) - std::sqrt(1.0 / ratio));
}

double wasserstein_worst_case(double q, const Dataset& data, double radius,
                              const Prices& prices) {
    require_data(data);
    if (radius < 0.0) {
        throw parameter_error("radius must be nonnegative");
    }
    const double inv_n = 1.0 / static_cast<double>(data.size());

    const auto dual_value = [&](double lambda) {
        double sum = 0.0;
        for (double d_i : data) {
            const double at_zero = q * prices.c - lambda * d_i;
            const double at_atom = atom_cost(q, d_i, prices);
            const double at_q = q * prices.c - prices.p * q - lambda * std::abs(q - d_i);
            sum += std::max({at_zero, at_atom, at_q});
        }
        return lambda * radius + inv_n * sum;
    };

    // The cost is p-Lipschitz in d, so the optimal multiplier lies in [0, p].
    const double lambda_star = golden_section_minimize(dual_value, 0.0, prices.p, 1e-8);
    return std::min(dual_value(lambda_star), std::min(dual_value(0.0), dual_value(prices.p)));
}

double solve_dro_wasserstein(const Dataset& data, double radius, const Prices& prices) {
    require_data(data);
    if (radius < 0.0) {
        throw parameter_error("radius must be nonnegative");
    }
    if (radius == 0.0) {
        return solve_saa(data, prices);
    }
    const double hi = max_demand(data);
    if (hi == 0.0) {
        return 0.0;
    }
    return golden_section_minimize(
        [&](double q) { return wasserstein_worst_case(q, data, radius, prices); }, 0.0, hi,
        1e-6);
}

double kl_worst_case(double q, const Dataset& data, double radius, const Prices& prices) {
    require_data(data);
    if (radius < 0.0) {
        throw parameter_error("radius must be nonnegative");
    }
    const std::size_t n = data.size();
    std::vector<double> losses(n);
    double max_loss = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        losses[i] = atom_cost(q, data[i], prices);
        max_loss = std::max(max_loss, losses[i]);
    }

    const auto dual_value = [&](double lambda) {
        double mean_exp = 0.0;
        for (double l : losses) {
            mean_exp += std::exp((l - max_loss) / lambda);
        }
        mean_exp /= static_cast<double>(n);
        return lambda * radius + max_loss + lambda * std::log(mean_exp);
    };

    const double scale = prices.p * std::max(1.0, max_demand(data));
    const double log_lo = std::log(1e-8 * scale);
    const double log_hi = std::log(1e6 * scale);
    const double log_lambda = golden_section_minimize(
        [&](double t) { return dual_value(std::exp(t)); }, log_lo, log_hi, 1e-10);

    // lambda -> 0 recovers max_i l_i; take it when the interior search cannot
    // do better (e.g. radius >= ln N, where the ball holds every point mass).
    return std::min(max_loss, dual_value(std::exp(log_lambda)));
}

double solve_dro_kl(const Dataset& data, double radius, const Prices& prices) {
    require_data(data);
    if (radius < 0.0) {
        throw parameter_error("radius must be nonnegative");
    }
    if (radius == 0.0) {
        return solve_saa(data, prices);
    }
    const double hi = max_demand(data);
    if (hi == 0.0) {
        return 0.0;
    }
    return golden_section_minimize(
        [&](double q) { return kl_worst_case(q, data, radius, prices); }, 0.0, hi, 1e-6);
}

} // namespace ovp
