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

#include "ovp/distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ovp/errors.hpp"

namespace ovp {

namespace {

constexpr double kTermTol = 1e-14;
constexpr int kMaxIter = 500;

double require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw parameter_error(std::string(name) + " must be positive, got " +
                              std::to_string(value));
    }
    return value;
}

} // namespace

double exponential_from_uniform(double mean, double u) {
    require_positive(mean, "mean");
    return -mean * std::log(u);
}

double sample_exponential(double mean, RngStream& rng) {
    require_positive(mean, "mean");
    return -mean * std::log(rng.next_unit());
}

double sample_normal(double mu, double sigma, RngStream& rng) {
    require_positive(sigma, "sigma");
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    return mu + sigma * std::sqrt(-2.0 * std::log(u1)) *
                    std::cos(2.0 * std::numbers::pi * u2);
}

double sample_uniform(double a, double b, RngStream& rng) {
    if (!(a < b)) {
        throw parameter_error("uniform bounds must satisfy a < b, got [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return a + (b - a) * rng.next_unit();
}

double sample_gamma(double shape, double scale, RngStream& rng) {
    require_positive(shape, "shape");
    require_positive(scale, "scale");

    if (shape < 1.0) {
        // Boost: Gamma(shape) = Gamma(shape + 1) * U^{1/shape}.
        const double boost = std::pow(rng.next_unit(), 1.0 / shape);
        return sample_gamma(shape + 1.0, scale, rng) * boost;
    }

    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = sample_normal(0.0, 1.0, rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_unit();
        if (u < 1.0 - 0.0331 * x * x * x * x) {
            return d * v * scale;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v * scale;
        }
    }
}

double reg_lower_gamma(double a, double x) {
    require_positive(a, "a");
    if (x < 0.0) {
        throw parameter_error("x must be nonnegative, got " + std::to_string(x));
    }
    if (x == 0.0) {
        return 0.0;
    }

    const double log_prefactor = a * std::log(x) - x - std::lgamma(a);

    if (x < a + 1.0) {
        // Series: P(a,x) = x^a e^{-x} / Gamma(a) * sum_k x^k / (a (a+1) ... (a+k)).
        double term = 1.0 / a;
        double sum = term;
        double denom = a;
        for (int k = 0; k < kMaxIter; ++k) {
            denom += 1.0;
            term *= x / denom;
            sum += term;
            if (std::abs(term) < std::abs(sum) * kTermTol) {
                break;
            }
        }
        return std::exp(log_prefactor) * sum;
    }

    // Modified Lentz continued fraction for Q(a,x); P = 1 - Q.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kTermTol) {
            break;
        }
    }
    return 1.0 - std::exp(log_prefactor) * h;
}

} // namespace ovp
