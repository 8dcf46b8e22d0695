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

#include <cstdint>
#include <vector>

#include "ovp/evaluation.hpp"

namespace ovp {

/// 60 log-spaced radii spanning [0.0001, 5].
std::vector<double> default_radius_grid();

struct CvConfig {
    std::vector<double> grid = default_radius_grid(); // strictly increasing, all >= 0
    std::size_t n_thetas = 20;
    std::size_t datasets_per_theta = 1;
    Localization localization = NormalLocalization{20.0, 1.0};
    TruthSpec truth;
    std::uint64_t seed = 1;
};

struct CvPoint {
    double radius = 0.0;
    double avg_pct_gap = 0.0;
};

/// Average percentage gap against the ex-ante oracle for each grid radius,
/// computed on the given thetas and datasets (one vector of datasets per
/// theta). All radii see the same draws.
std::vector<CvPoint> cv_gap_curve_from(PolicyKind kind,
                                       const std::vector<double>& thetas,
                                       const std::vector<std::vector<Dataset>>& datasets,
                                       const std::vector<double>& grid,
                                       const Prices& prices, const TruthSpec& truth);

/// Sampling front end: draw n_thetas thetas from the localization and
/// datasets_per_theta datasets of size n from the truth at each theta, then
/// evaluate the gap curve. Deterministic given cfg.seed.
std::vector<CvPoint> cv_gap_curve(PolicyKind kind, const CvConfig& cfg,
                                  const Prices& prices, std::size_t n,
                                  unsigned num_threads = 0);

/// The grid radius minimizing the average percentage gap (first minimizer on
/// ties). kind must be DRO_WASSERSTEIN or DRO_KL.
double calibrate_radius(PolicyKind kind, const CvConfig& cfg, const Prices& prices,
                        std::size_t n, unsigned num_threads = 0);

} // namespace ovp
