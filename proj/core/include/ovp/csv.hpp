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
#include <vector>

#include "ovp/crossval.hpp"
#include "ovp/evaluation.hpp"

namespace ovp {

/// Locale-independent fixed formatting: 10 significant digits, dot decimal
/// separator, no trailing locale surprises.
std::string format_number(double value);

inline constexpr const char* kResultsHeader =
    "theta,policy,avg_profit,std_err,pct_regret,n_replicates";
inline constexpr const char* kCvCurveHeader = "radius,avg_pct_gap";

std::string results_csv(const std::vector<EvaluationRow>& rows);
std::string cv_curve_csv(const std::vector<CvPoint>& curve);

/// Write content to path, replacing any existing file. Throws config_error
/// on I/O failure.
void write_file(const std::string& path, const std::string& content);

} // namespace ovp
