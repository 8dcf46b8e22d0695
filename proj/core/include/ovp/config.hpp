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

#include <optional>
#include <string>

#include "ovp/crossval.hpp"
#include "ovp/evaluation.hpp"

namespace ovp {

/// Which figure sweep cmd_figures emits.
enum class FigureSet {
    kOsOqd,             // OS vs OQD at n = 5
    kLocalizations,     // normal(20,1), normal(20,2), uniform(18,22)
    kMisspecification,  // gamma shapes 1.15 and 0.85
};

FigureSet figure_set_from_name(const std::string& name);
std::string figure_set_name(FigureSet set);

/// Everything a CLI invocation needs, with experiment defaults built in so a
/// minimal config is just `localization` + `policies`.
struct ToolConfig {
    ExperimentConfig experiment;
    CvConfig cv;
    PolicyKind cv_policy = PolicyKind::kDroWasserstein;
    FigureSet figures = FigureSet::kLocalizations;
};

/// Parse a JSON config file. Unknown keys, missing required fields, and
/// domain violations raise config_error naming the offending field; JSON
/// syntax errors raise config_error with the parser diagnostic.
ToolConfig parse_tool_config_file(const std::string& path);
ToolConfig parse_tool_config_text(const std::string& text);

/// Canonical serialization of the resolved config (defaults applied, keys
/// sorted); two configs serialize identically iff every resolved parameter
/// matches.
std::string resolved_config_text(const ToolConfig& cfg);

/// FNV-1a 64-bit hex digest of the canonical serialization.
std::string config_digest(const ToolConfig& cfg);

} // namespace ovp
