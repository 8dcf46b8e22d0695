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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ovp/config.hpp"
#include "ovp/csv.hpp"
#include "ovp/errors.hpp"
#include "ovp/manifest.hpp"
#include "ovp/version.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    unsigned threads = 0; // 0 = hardware concurrency
};

ovp::ToolConfig load_config(const CliOptions& opts) {
    ovp::ToolConfig cfg = ovp::parse_tool_config_file(opts.config_path);
    if (opts.seed_override) {
        cfg.experiment.master_seed = *opts.seed_override;
        cfg.cv.seed = *opts.seed_override;
    }
    std::filesystem::create_directories(opts.out_dir);
    return cfg;
}

ovp::RunManifest start_manifest(const ovp::ToolConfig& cfg) {
    ovp::RunManifest manifest;
    manifest.config_digest = ovp::config_digest(cfg);
    manifest.tool_version = ovp::kVersion;
    manifest.master_seed = cfg.experiment.master_seed;
    manifest.started_at = ovp::utc_timestamp_now();
    return manifest;
}

void emit_rows(const std::string& path, const std::vector<ovp::EvaluationRow>& rows,
               ovp::RunManifest& manifest) {
    ovp::write_file(path, ovp::results_csv(rows));
    manifest.output_paths.push_back(path);
    std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
}

int cmd_run(const CliOptions& opts) {
    ovp::ToolConfig cfg = load_config(opts);
    ovp::RunManifest manifest = start_manifest(cfg);

    const auto rows = ovp::run_experiment(cfg.experiment, opts.threads);
    emit_rows(opts.out_dir + "/results.csv", rows, manifest);

    ovp::write_manifest(opts.out_dir, manifest);
    return 0;
}

int cmd_calibrate(const CliOptions& opts) {
    ovp::ToolConfig cfg = load_config(opts);
    ovp::RunManifest manifest = start_manifest(cfg);

    const auto curve = ovp::cv_gap_curve(cfg.cv_policy, cfg.cv, cfg.experiment.prices,
                                         cfg.experiment.n, opts.threads);
    double best_radius = curve.front().radius;
    double best_gap = curve.front().avg_pct_gap;
    for (const auto& point : curve) {
        if (point.avg_pct_gap < best_gap) {
            best_gap = point.avg_pct_gap;
            best_radius = point.radius;
        }
    }

    const std::string curve_path = opts.out_dir + "/cv_curve.csv";
    ovp::write_file(curve_path, ovp::cv_curve_csv(curve));
    manifest.output_paths.push_back(curve_path);

    const std::string radius_path = opts.out_dir + "/chosen_radius.txt";
    ovp::write_file(radius_path, ovp::format_number(best_radius) + "\n");
    manifest.output_paths.push_back(radius_path);

    std::cout << "calibrated " << ovp::policy_kind_name(cfg.cv_policy)
              << " radius: " << ovp::format_number(best_radius) << " (avg gap "
              << ovp::format_number(best_gap) << "%)\n";
    ovp::write_manifest(opts.out_dir, manifest);
    return 0;
}

int cmd_figures(const CliOptions& opts) {
    ovp::ToolConfig cfg = load_config(opts);
    ovp::RunManifest manifest = start_manifest(cfg);

    switch (cfg.figures) {
    case ovp::FigureSet::kOsOqd: {
        ovp::ExperimentConfig exp = cfg.experiment;
        exp.n = 5;
        exp.policies = {ovp::PolicySpec{ovp::PolicyKind::kOs},
                        ovp::PolicySpec{ovp::PolicyKind::kOqd}};
        emit_rows(opts.out_dir + "/figure1_os_oqd.csv", ovp::run_experiment(exp, opts.threads),
                  manifest);
        break;
    }
    case ovp::FigureSet::kLocalizations: {
        const std::vector<std::pair<std::string, ovp::Localization>> sweeps{
            {"figure_loc_normal_20_1.csv", ovp::NormalLocalization{20.0, 1.0}},
            {"figure_loc_normal_20_2.csv", ovp::NormalLocalization{20.0, 2.0}},
            {"figure_loc_uniform_18_22.csv", ovp::UniformLocalization{18.0, 22.0}},
        };
        for (const auto& [name, loc] : sweeps) {
            ovp::ExperimentConfig exp = cfg.experiment;
            exp.localization = loc;
            emit_rows(opts.out_dir + "/" + name, ovp::run_experiment(exp, opts.threads),
                      manifest);
        }
        break;
    }
    case ovp::FigureSet::kMisspecification: {
        const std::vector<std::pair<std::string, double>> shapes{
            {"figure_mis_gamma_1.15.csv", 1.15},
            {"figure_mis_gamma_0.85.csv", 0.85},
        };
        for (const auto& [name, shape] : shapes) {
            ovp::ExperimentConfig exp = cfg.experiment;
            exp.truth = ovp::TruthSpec{ovp::TruthSpec::Kind::kGamma, shape};
            emit_rows(opts.out_dir + "/" + name, ovp::run_experiment(exp, opts.threads),
                      manifest);
        }
        break;
    }
    }

    ovp::write_manifest(opts.out_dir, manifest);
    return 0;
}

void add_common_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path, "Path to the JSON config file")
        ->required();
    cmd->add_option("--out", opts.out_dir, "Output directory (created if missing)");
    cmd->add_option("--seed", opts.seed_override,
                    "Master seed override (takes precedence over the config)");
    cmd->add_option("--threads", opts.threads,
                    "Worker threads (default: available parallelism)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Out-of-sample newsvendor policy benchmark"};
    app.set_version_flag("--version", ovp::kVersion);
    app.require_subcommand(1);

    CliOptions opts;
    CLI::App* run = app.add_subcommand("run", "Run the evaluation sweep");
    add_common_options(run, opts);
    CLI::App* calibrate =
        app.add_subcommand("calibrate", "Grid-search a DRO radius by cross-validation");
    add_common_options(calibrate, opts);
    CLI::App* figures =
        app.add_subcommand("figures", "Emit the per-figure sweep CSVs");
    add_common_options(figures, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(opts);
        }
        if (calibrate->parsed()) {
            return cmd_calibrate(opts);
        }
        return cmd_figures(opts);
    } catch (const ovp::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
