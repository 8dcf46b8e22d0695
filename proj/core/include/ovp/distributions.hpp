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

#include "ovp/rng.hpp"

namespace ovp {

/// Exponential inverse CDF applied to a uniform u in (0,1): -mean * ln(u).
double exponential_from_uniform(double mean, double u);

/// Draw from Exponential with the given mean (mean parameterization throughout).
double sample_exponential(double mean, RngStream& rng);

/**
 * Draw from Gamma(shape, scale), density x^{shape-1} e^{-x/scale} /
 * (Gamma(shape) scale^shape), via the Marsaglia-Tsang squeeze method.
 * Shapes below 1 use the boost Gamma(shape+1) * U^{1/shape}.
 */
double sample_gamma(double shape, double scale, RngStream& rng);

/// Draw from Normal(mu, sigma) (Box-Muller; two uniforms per variate).
double sample_normal(double mu, double sigma, RngStream& rng);

/// Draw uniformly from [a, b], a < b.
double sample_uniform(double a, double b, RngStream& rng);

/**
 * Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
 *
 * Series expansion for x < a + 1, Lentz continued fraction otherwise;
 * term tolerance 1e-14, at most 500 iterations. Absolute error <= 1e-10
 * over the parameter ranges the experiments use.
 */
double reg_lower_gamma(double a, double x);

} // namespace ovp
