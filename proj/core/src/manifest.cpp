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

#include "ovp/manifest.hpp"

#include <ctime>

#include <json.hpp>

#include "ovp/csv.hpp"

namespace ovp {

std::string utc_timestamp_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

void write_manifest(const std::string& out_dir, const RunManifest& manifest) {
    const nlohmann::json doc{
        {"config_digest", manifest.config_digest},
        {"tool_version", manifest.tool_version},
        {"master_seed", manifest.master_seed},
        {"started_at", manifest.started_at},
        {"output_paths", manifest.output_paths},
    };
    write_file(out_dir + "/manifest.json", doc.dump(2) + "\n");
}

} // namespace ovp
