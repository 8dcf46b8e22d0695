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

#include "ovp/localization.hpp"

#include <cstdio>

#include "ovp/distributions.hpp"
#include "ovp/errors.hpp"

namespace ovp {

namespace {

std::string format_params(const char* kind, double first, double second) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s(%g,%g)", kind, first, second);
    return buf;
}

} // namespace

void validate_localization(const Localization& loc) {
    std::visit(
        [](const auto& l) {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, NormalLocalization>) {
                if (!(l.mu > 0.0) || !(l.sigma > 0.0)) {
                    throw parameter_error(
                        "normal localization requires mu > 0 and sigma > 0");
                }
            } else if constexpr (std::is_same_v<T, UniformLocalization>) {
                if (!(l.a > 0.0) || !(l.a < l.b)) {
                    throw parameter_error(
                        "uniform localization requires 0 < a < b");
                }
            } else {
                if (!(l.theta_bar > 0.0)) {
                    throw parameter_error(
                        "dirac localization requires theta_bar > 0");
                }
            }
        },
        loc);
}

std::string localization_name(const Localization& loc) {
    return std::visit(
        [](const auto& l) -> std::string {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, NormalLocalization>) {
                return format_params("normal", l.mu, l.sigma);
            } else if constexpr (std::is_same_v<T, UniformLocalization>) {
                return format_params("uniform", l.a, l.b);
            } else {
                char buf[48];
                std::snprintf(buf, sizeof(buf), "dirac(%g)", l.theta_bar);
                return buf;
            }
        },
        loc);
}

LocalizationSample sample_localization(const Localization& loc, std::size_t m,
                                       RngStream& rng) {
    validate_localization(loc);
    LocalizationSample thetas;
    thetas.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double theta = std::visit(
            [&rng](const auto& l) -> double {
                using T = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<T, NormalLocalization>) {
                    // Theta must be positive; redraw the negligible mass at or below 0.
                    double draw;
                    do {
                        draw = sample_normal(l.mu, l.sigma, rng);
                    } while (draw <= 0.0);
                    return draw;
                } else if constexpr (std::is_same_v<T, UniformLocalization>) {
                    return sample_uniform(l.a, l.b, rng);
                } else {
                    return l.theta_bar;
                }
            },
            loc);
        thetas.push_back(theta);
    }
    return thetas;
}

} // namespace ovp
