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

#include "ovp/csv.hpp"

#include <cstdio>
#include <fstream>

#include "ovp/errors.hpp"

namespace ovp {

std::string format_number(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string results_csv(const std::vector<EvaluationRow>& rows) {
    std::string out(kResultsHeader);
    out += '\n';
    for (const auto& row : rows) {
        out += format_number(row.theta_true);
        out += ',';
        out += policy_kind_name(row.policy);
        out += ',';
        out += format_number(row.avg_profit);
        out += ',';
        out += format_number(row.std_err);
        out += ',';
        out += format_number(row.pct_regret);
        out += ',';
        out += std::to_string(row.n_replicates);
        out += '\n';
    }
    return out;
}

std::string cv_curve_csv(const std::vector<CvPoint>& curve) {
    std::string out(kCvCurveHeader);
    out += '\n';
    for (const auto& point : curve) {
        out += format_number(point.radius);
        out += ',';
        out += format_number(point.avg_pct_gap);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw config_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw config_error("failed writing '" + path + "'");
    }
}

} // namespace ovp
