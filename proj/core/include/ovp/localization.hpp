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

#include <string>
#include <variant>
#include <vector>

#include "ovp/rng.hpp"

namespace ovp {

/// Density over the unknown exponential mean theta. Thetas live on the
/// positive axis, so Normal draws at or below zero are rejected and redrawn.
struct NormalLocalization {
    double mu;
    double sigma;
};

struct UniformLocalization {
    double a;
    double b;
};

struct DiracLocalization {
    double theta_bar;
};

using Localization = std::variant<NormalLocalization, UniformLocalization, DiracLocalization>;

/// Throws parameter_error unless the parameters satisfy
/// Normal: mu > 0, sigma > 0; Uniform: 0 < a < b; Dirac: theta_bar > 0.
void validate_localization(const Localization& loc);

/// Short display name, e.g. "normal(20,1)".
std::string localization_name(const Localization& loc);

/// M positive reals sampled i.i.d. from the localization.
using LocalizationSample = std::vector<double>;

/// Draw m i.i.d. thetas. Dirac returns m copies of theta_bar.
LocalizationSample sample_localization(const Localization& loc, std::size_t m,
                                       RngStream& rng);

} // namespace ovp
