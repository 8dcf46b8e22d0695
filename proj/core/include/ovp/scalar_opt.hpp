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

#include <cmath>
#include <utility>

namespace ovp {

/**
 * Golden-section search for the minimizer of a unimodal function on [lo, hi].
 * Returns the bracket midpoint once the bracket width is at most tol.
 */
template <typename F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
    if (!(hi > lo)) {
        return lo;
    }
    const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
    double a = lo, b = hi;
    double u = b - inv_phi * (b - a);
    double v = a + inv_phi * (b - a);
    double fu = f(u);
    double fv = f(v);
    while (b - a > tol) {
        if (fu <= fv) {
            b = v;
            v = u;
            fv = fu;
            u = b - inv_phi * (b - a);
            fu = f(u);
        } else {
            a = u;
            u = v;
            fu = fv;
            v = a + inv_phi * (b - a);
            fv = f(v);
        }
    }
    return 0.5 * (a + b);
}

/// Golden-section maximization; returns the argmax.
template <typename F>
double golden_section_maximize(F&& f, double lo, double hi, double tol) {
    return golden_section_minimize([&f](double x) { return -f(x); }, lo, hi, tol);
}

} // namespace ovp
