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

#include "ovp/newsvendor.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ovp/distributions.hpp"
#include "ovp/errors.hpp"

namespace ovp {

namespace {

void require_quantity(double q) {
    if (!(q >= 0.0)) {
        throw parameter_error("order quantity must be nonnegative, got " +
                              std::to_string(q));
    }
}

void require_theta(double theta) {
    if (!(theta > 0.0)) {
        throw parameter_error("theta must be positive, got " + std::to_string(theta));
    }
}

} // namespace

Prices::Prices(double p_in, double c_in) : p(p_in), c(c_in) {
    if (!(c > 0.0) || !(p > c)) {
        throw parameter_error("prices must satisfy p > c > 0, got p=" +
                              std::to_string(p_in) + ", c=" + std::to_string(c_in));
    }
}

SufficientStat mle(const Dataset& data) {
    if (data.empty()) {
        throw degenerate_data_error("cannot estimate theta from an empty dataset");
    }
    const double sum = std::accumulate(data.begin(), data.end(), 0.0);
    const double theta_hat = sum / static_cast<double>(data.size());
    if (!(theta_hat > 0.0)) {
        throw degenerate_data_error("sample mean is zero; exponential MLE undefined");
    }
    return SufficientStat{theta_hat, data.size()};
}

double expected_profit_exp(double q, double theta, const Prices& prices) {
    require_quantity(q);
    require_theta(theta);
    return prices.p * theta * (1.0 - std::exp(-q / theta)) - q * prices.c;
}

double dphi_dq(double q, double theta, const Prices& prices) {
    require_quantity(q);
    require_theta(theta);
    return prices.c - prices.p * std::exp(-q / theta);
}

double oracle_quantity(double theta, const Prices& prices) {
    require_theta(theta);
    return theta * std::log(prices.p / prices.c);
}

double log_g1_weight(double theta_hat, double theta, std::size_t n) {
    require_theta(theta_hat);
    require_theta(theta);
    if (n == 0) {
        return 0.0;
    }
    const double dn = static_cast<double>(n);
    return -dn * std::log(theta) - dn * theta_hat / theta;
}

double expected_profit_gamma(double q, double shape, double scale, const Prices& prices) {
    require_quantity(q);
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw parameter_error("gamma parameters must be positive");
    }
    // E[min(d, q)] = shape*scale*P(shape+1, q/scale) + q*(1 - P(shape, q/scale)).
    const double x = q / scale;
    const double expected_sales =
        shape * scale * reg_lower_gamma(shape + 1.0, x) + q * (1.0 - reg_lower_gamma(shape, x));
    return prices.p * expected_sales - q * prices.c;
}

} // namespace ovp
