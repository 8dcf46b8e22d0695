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

#include "ovp/crossval.hpp"

#include <algorithm>
#include <cmath>

#include "ovp/errors.hpp"
#include "ovp/parallel.hpp"

namespace ovp {

namespace {

constexpr std::uint32_t kCvThetaStreamIndex = kMetaThetaIndex + 2;
constexpr std::uint32_t kCvDataStreamIndex = kMetaThetaIndex + 3;

void validate_grid(const std::vector<double>& grid) {
    if (grid.empty()) {
        throw parameter_error("radius grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0 || (i > 0 && grid[i] <= grid[i - 1])) {
            throw parameter_error("radius grid must be strictly increasing and >= 0");
        }
    }
}

void validate_kind(PolicyKind kind) {
    if (kind != PolicyKind::kDroWasserstein && kind != PolicyKind::kDroKl) {
        throw parameter_error("radius calibration applies to DRO_WASSERSTEIN and DRO_KL only");
    }
}

} // namespace

std::vector<double> default_radius_grid() {
    constexpr std::size_t kPoints = 60;
    const double log_lo = std::log(0.0001);
    const double log_hi = std::log(5.0);
    std::vector<double> grid(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(kPoints - 1);
        grid[i] = std::exp(log_lo + t * (log_hi - log_lo));
    }
    // Pin the stated endpoints exactly.
    grid.front() = 0.0001;
    grid.back() = 5.0;
    return grid;
}

std::vector<CvPoint> cv_gap_curve_from(PolicyKind kind,
                                       const std::vector<double>& thetas,
                                       const std::vector<std::vector<Dataset>>& datasets,
                                       const std::vector<double>& grid,
                                       const Prices& prices, const TruthSpec& truth) {
    validate_kind(kind);
    validate_grid(grid);
    if (thetas.empty() || thetas.size() != datasets.size()) {
        throw degenerate_data_error("need one dataset family per theta");
    }

    std::vector<double> oracles(thetas.size());
    for (std::size_t t = 0; t < thetas.size(); ++t) {
        oracles[t] = oracle_profit_for_truth(thetas[t], truth, prices);
    }

    std::vector<CvPoint> curve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const double radius = grid[g];
        double gap_sum = 0.0;
        std::size_t count = 0;
        for (std::size_t t = 0; t < thetas.size(); ++t) {
            for (const Dataset& data : datasets[t]) {
                const double q = kind == PolicyKind::kDroWasserstein
                                     ? solve_dro_wasserstein(data, radius, prices)
                                     : solve_dro_kl(data, radius, prices);
                const double profit = true_expected_profit(q, thetas[t], truth, prices);
                gap_sum += 100.0 * (oracles[t] - profit) / oracles[t];
                ++count;
            }
        }
        curve[g] = CvPoint{radius, gap_sum / static_cast<double>(count)};
    }
    return curve;
}

std::vector<CvPoint> cv_gap_curve(PolicyKind kind, const CvConfig& cfg,
                                  const Prices& prices, std::size_t n,
                                  unsigned num_threads) {
    validate_kind(kind);
    validate_grid(cfg.grid);
    if (cfg.n_thetas == 0 || cfg.datasets_per_theta == 0 || n == 0) {
        throw parameter_error("cross-validation counts must all be >= 1");
    }

    RngStream theta_rng = RngStream::for_cell(cfg.seed, kCvThetaStreamIndex, 0);
    const std::vector<double> thetas =
        sample_localization(cfg.localization, cfg.n_thetas, theta_rng);

    std::vector<std::vector<Dataset>> datasets(cfg.n_thetas);
    for (std::size_t t = 0; t < cfg.n_thetas; ++t) {
        datasets[t].resize(cfg.datasets_per_theta);
        for (std::size_t j = 0; j < cfg.datasets_per_theta; ++j) {
            RngStream rng = RngStream::for_cell(
                cfg.seed, kCvDataStreamIndex,
                static_cast<std::uint32_t>(t * 65536 + j));
            Dataset data(n);
            for (double& d : data) {
                d = sample_truth_demand(cfg.truth, thetas[t], rng);
            }
            datasets[t][j] = std::move(data);
        }
    }

    // Each grid point is independent; slot results by index so the curve is
    // identical for any worker count.
    std::vector<CvPoint> curve(cfg.grid.size());
    parallel_for_index(cfg.grid.size(), num_threads, [&](std::size_t g) {
        const std::vector<double> single{cfg.grid[g]};
        curve[g] = cv_gap_curve_from(kind, thetas, datasets, single, prices, cfg.truth)[0];
    });
    return curve;
}

double calibrate_radius(PolicyKind kind, const CvConfig& cfg, const Prices& prices,
                        std::size_t n, unsigned num_threads) {
    const auto curve = cv_gap_curve(kind, cfg, prices, n, num_threads);
    const auto best = std::min_element(
        curve.begin(), curve.end(),
        [](const CvPoint& a, const CvPoint& b) { return a.avg_pct_gap < b.avg_pct_gap; });
    return best->radius;
}

} // namespace ovp
