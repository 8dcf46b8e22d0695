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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include "ovp/scalar_opt.hpp"

namespace oracles {

namespace {

double simpson_rule(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double fa,
                       double b, double fb, double m, double fm, double whole,
                       double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_rule(a, fa, m, fm, flm);
    const double right = simpson_rule(m, fm, b, fb, frm);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_recurse(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           simpson_recurse(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

double empirical_cost(double q, const ovp::Dataset& data, const ovp::Prices& prices) {
    double sum = 0.0;
    for (double d : data) {
        sum += q * prices.c - prices.p * std::min(d, q);
    }
    return sum / static_cast<double>(data.size());
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson_rule(a, fa, b, fb, fm);
    return simpson_recurse(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double reg_lower_gamma_quadrature(double a, double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    // Substituting t = u^{1/a} into the integral of t^{a-1} e^{-t} gives
    // (1/a) * integral_0^{x^a} e^{-u^{1/a}} du, smooth at u = 0 even for a < 1.
    const double upper = std::pow(x, a);
    const double integral = adaptive_simpson(
        [a](double u) { return std::exp(-std::pow(u, 1.0 / a)); }, 0.0, upper, 1e-12);
    return integral / a / std::tgamma(a);
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
    double flo = f(lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double wasserstein_primal_worst_case(double q, const ovp::Dataset& data, double radius,
                                     const ovp::Prices& prices, double grid_step,
                                     double grid_max) {
    const double inv_n = 1.0 / static_cast<double>(data.size());
    const auto loss = [&](double d) { return q * prices.c - prices.p * std::min(d, q); };

    // Per-atom transport frontier: reachable (cost, gain) pairs from moving
    // (part of) the atom's 1/N mass to grid destinations, upper concave hull.
    struct Segment {
        double slope;
        double cost;
    };
    // Destination grid: regular spacing plus the empirical support and the
    // kink at q, so the piecewise-linear extremes are reachable exactly.
    std::vector<double> destinations;
    for (double g = 0.0; g <= grid_max + 1e-12; g += grid_step) {
        destinations.push_back(g);
    }
    destinations.insert(destinations.end(), data.begin(), data.end());
    destinations.push_back(q);

    std::vector<Segment> segments;
    for (double d_i : data) {
        std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
        for (double g : destinations) {
            const double gain = (loss(g) - loss(d_i)) * inv_n;
            if (gain > 0.0) {
                pts.emplace_back(std::abs(g - d_i) * inv_n, gain);
            }
        }
        std::sort(pts.begin(), pts.end());
        // Upper hull (monotone chain over points sorted by cost): drop the
        // middle point whenever it lies on or below the chord.
        std::vector<std::pair<double, double>> hull;
        for (const auto& pt : pts) {
            while (hull.size() >= 2) {
                const auto& [x1, y1] = hull[hull.size() - 2];
                const auto& [x2, y2] = hull[hull.size() - 1];
                const double cross =
                    (x2 - x1) * (pt.second - y1) - (y2 - y1) * (pt.first - x1);
                if (cross >= 0.0) {
                    hull.pop_back();
                } else {
                    break;
                }
            }
            hull.push_back(pt);
        }
        for (std::size_t k = 1; k < hull.size(); ++k) {
            const double dc = hull[k].first - hull[k - 1].first;
            const double dg = hull[k].second - hull[k - 1].second;
            if (dc > 0.0 && dg > 0.0) {
                segments.push_back(Segment{dg / dc, dc});
            }
        }
    }

    // Spend the shared budget on the steepest segments first.
    std::sort(segments.begin(), segments.end(),
              [](const Segment& a, const Segment& b) { return a.slope > b.slope; });
    double gain = 0.0;
    double budget = radius;
    for (const auto& seg : segments) {
        if (budget <= 0.0) {
            break;
        }
        const double take = std::min(budget, seg.cost);
        gain += take * seg.slope;
        budget -= take;
    }
    return empirical_cost(q, data, prices) + gain;
}

double wasserstein_primal_optimal_value(const ovp::Dataset& data, double radius,
                                        const ovp::Prices& prices, double grid_step,
                                        double grid_max) {
    // Scan a regular q-grid plus the empirical atoms, where the convex
    // worst-case curve can kink.
    const double q_max = *std::max_element(data.begin(), data.end());
    std::vector<double> candidates{0.0};
    for (double q = grid_step; q <= q_max + 1e-12; q += grid_step) {
        candidates.push_back(q);
    }
    candidates.insert(candidates.end(), data.begin(), data.end());

    double best = 1e300;
    for (double q : candidates) {
        best = std::min(best, wasserstein_primal_worst_case(q, data, radius, prices,
                                                            grid_step, grid_max));
    }
    return best;
}

double kl_tilt_worst_case(double q, const ovp::Dataset& data, double radius,
                          const ovp::Prices& prices) {
    const std::size_t n = data.size();
    std::vector<double> losses(n);
    double max_loss = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        losses[i] = q * prices.c - prices.p * std::min(data[i], q);
        max_loss = std::max(max_loss, losses[i]);
    }

    const auto tilt = [&](double t) {
        // w_i proportional to exp(t l_i); returns (KL to uniform, E_w[l]).
        double norm = 0.0;
        for (double l : losses) {
            norm += std::exp(t * (l - max_loss));
        }
        double kl = 0.0, mean = 0.0;
        for (double l : losses) {
            const double w = std::exp(t * (l - max_loss)) / norm;
            if (w > 0.0) {
                kl += w * std::log(static_cast<double>(n) * w);
            }
            mean += w * l;
        }
        return std::pair<double, double>{kl, mean};
    };

    std::size_t max_count = 0;
    for (double l : losses) {
        if (l >= max_loss - 1e-13) {
            ++max_count;
        }
    }
    const double kl_limit = std::log(static_cast<double>(n) / static_cast<double>(max_count));
    if (radius >= kl_limit - 1e-12) {
        return max_loss;
    }

    double t_hi = 1.0;
    while (tilt(t_hi).first < radius) {
        t_hi *= 2.0;
    }
    double t_lo = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (tilt(mid).first < radius) {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
    return tilt(0.5 * (t_lo + t_hi)).second;
}

double kl_two_atom_worst_case(double q, const ovp::Dataset& data, double radius,
                              const ovp::Prices& prices) {
    const double l1 = q * prices.c - prices.p * std::min(data[0], q);
    const double l2 = q * prices.c - prices.p * std::min(data[1], q);
    double best = 0.5 * (l1 + l2);
    for (int k = 0; k <= 100000; ++k) {
        const double w = static_cast<double>(k) / 100000.0;
        double kl = 0.0;
        if (w > 0.0) kl += w * std::log(2.0 * w);
        if (w < 1.0) kl += (1.0 - w) * std::log(2.0 * (1.0 - w));
        if (kl <= radius) {
            best = std::max(best, w * l1 + (1.0 - w) * l2);
        }
    }
    return best;
}

double kl_primal_optimal_value(const ovp::Dataset& data, double radius,
                               const ovp::Prices& prices, double grid_step,
                               double grid_max) {
    std::vector<double> candidates{0.0};
    for (double q = grid_step; q <= grid_max + 1e-12; q += grid_step) {
        candidates.push_back(q);
    }
    candidates.insert(candidates.end(), data.begin(), data.end());

    double best = 1e300;
    for (double q : candidates) {
        best = std::min(best, kl_tilt_worst_case(q, data, radius, prices));
    }
    return best;
}

double scarf_two_point_worst_profit(double q, double d_hat, double sigma2,
                                    const ovp::Prices& prices) {
    // E[min(d, q)] of the two-point distribution (d1, d2) with mean d_hat.
    const auto expected_sales = [&](double d1, double d2) {
        if (d2 - d1 < 1e-14) {
            return std::min(d_hat, q);
        }
        const double w = (d2 - d_hat) / (d2 - d1);
        return w * std::min(d1, q) + (1.0 - w) * std::min(d2, q);
    };

    double worst = std::min(d_hat, q); // point mass at d_hat is always feasible
    const double far = d_hat + sigma2 / std::max(d_hat * 0.005, 1e-9) + q + 1.0;

    double lo1 = 0.0, hi1 = d_hat;
    for (int level = 0; level < 4; ++level) {
        const int kk = 200;
        double best1 = lo1;
        for (int i = 0; i <= kk; ++i) {
            const double d1 = lo1 + (hi1 - lo1) * i / kk;
            if (d1 > d_hat - 1e-12) {
                continue;
            }
            const double cap = d_hat + sigma2 / (d_hat - d1);
            const double hi2 = std::min(cap, far);
            for (int j = 0; j <= kk; ++j) {
                const double d2 = d_hat + (hi2 - d_hat) * j / kk;
                const double sales = expected_sales(d1, d2);
                if (sales < worst) {
                    worst = sales;
                    best1 = d1;
                }
            }
        }
        // Zoom on the incumbent for the next level.
        const double span1 = (hi1 - lo1) / kk * 3.0;
        lo1 = std::max(0.0, best1 - span1);
        hi1 = std::min(d_hat, best1 + span1);
    }
    return prices.p * worst - q * prices.c;
}

double scarf_two_point_oracle_quantity(double d_hat, double sigma2,
                                       const ovp::Prices& prices) {
    const double hi = d_hat + 4.0 * std::sqrt(sigma2) + 1.0;
    return ovp::golden_section_maximize(
        [&](double q) { return scarf_two_point_worst_profit(q, d_hat, sigma2, prices); },
        0.0, hi, 1e-6);
}

} // namespace oracles
