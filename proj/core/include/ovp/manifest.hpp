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
#include <string>
#include <vector>

namespace ovp {

/// Provenance record written next to every output set: what configuration
/// produced it, with which tool version and seed, and when.
struct RunManifest {
    std::string config_digest;
    std::string tool_version;
    std::uint64_t master_seed = 0;
    std::string started_at; // UTC, ISO 8601
    std::vector<std::string> output_paths;
};

/// Current UTC time formatted as e.g. 2026-08-09T12:34:56Z.
std::string utc_timestamp_now();

/// Write the manifest as manifest.json inside out_dir.
void write_manifest(const std::string& out_dir, const RunManifest& manifest);

} // namespace ovp
