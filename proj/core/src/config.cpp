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

#include "ovp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ovp/errors.hpp"

namespace ovp {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& section) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.contains(key)) {
            throw config_error("unknown field '" + key + "' in " + section);
        }
    }
}

double get_number(const json& obj, const std::string& field, const std::string& section) {
    const auto it = obj.find(field);
    if (it == obj.end() || !it->is_number()) {
        throw config_error("field '" + field + "' in " + section + " must be a number");
    }
    return it->get<double>();
}

std::size_t get_count(const json& obj, const std::string& field,
                      const std::string& section, std::size_t fallback) {
    const auto it = obj.find(field);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
        throw config_error("field '" + field + "' in " + section +
                           " must be a positive integer");
    }
    return it->get<std::size_t>();
}

Localization parse_localization(const json& obj) {
    if (!obj.is_object() || !obj.contains("kind")) {
        throw config_error("field 'localization' must be an object with a 'kind'");
    }
    const std::string kind = obj.at("kind").get<std::string>();
    Localization loc;
    if (kind == "normal") {
        reject_unknown_keys(obj, {"kind", "mu", "sigma"}, "localization");
        loc = NormalLocalization{get_number(obj, "mu", "localization"),
                                 get_number(obj, "sigma", "localization")};
    } else if (kind == "uniform") {
        reject_unknown_keys(obj, {"kind", "a", "b"}, "localization");
        loc = UniformLocalization{get_number(obj, "a", "localization"),
                                  get_number(obj, "b", "localization")};
    } else if (kind == "dirac") {
        reject_unknown_keys(obj, {"kind", "theta_bar"}, "localization");
        loc = DiracLocalization{get_number(obj, "theta_bar", "localization")};
    } else {
        throw config_error("field 'localization.kind' must be normal, uniform, or dirac");
    }
    try {
        validate_localization(loc);
    } catch (const parameter_error& e) {
        throw config_error(std::string("field 'localization': ") + e.what());
    }
    return loc;
}

TruthSpec parse_truth(const json& obj) {
    if (!obj.is_object() || !obj.contains("kind")) {
        throw config_error("field 'truth' must be an object with a 'kind'");
    }
    const std::string kind = obj.at("kind").get<std::string>();
    TruthSpec truth;
    if (kind == "exponential") {
        reject_unknown_keys(obj, {"kind"}, "truth");
        truth.kind = TruthSpec::Kind::kExponential;
    } else if (kind == "gamma") {
        reject_unknown_keys(obj, {"kind", "shape"}, "truth");
        truth.kind = TruthSpec::Kind::kGamma;
        truth.gamma_shape = get_number(obj, "shape", "truth");
        if (!(truth.gamma_shape > 0.0)) {
            throw config_error("field 'truth.shape' must be positive");
        }
    } else {
        throw config_error("field 'truth.kind' must be exponential or gamma");
    }
    return truth;
}

PolicySpec parse_policy(const json& entry) {
    PolicySpec spec;
    if (entry.is_string()) {
        spec.kind = policy_kind_from_name(entry.get<std::string>());
        if (spec.kind == PolicyKind::kDroWasserstein || spec.kind == PolicyKind::kDroKl) {
            throw config_error("policy " + policy_kind_name(spec.kind) +
                               " requires a 'radius' field");
        }
        return spec;
    }
    if (!entry.is_object() || !entry.contains("kind")) {
        throw config_error("each 'policies' entry must be a kind string or an object "
                           "with a 'kind'");
    }
    reject_unknown_keys(entry, {"kind", "radius", "shrink"}, "policies entry");
    spec.kind = policy_kind_from_name(entry.at("kind").get<std::string>());

    const bool is_radius_dro =
        spec.kind == PolicyKind::kDroWasserstein || spec.kind == PolicyKind::kDroKl;
    if (entry.contains("radius")) {
        if (!is_radius_dro) {
            throw config_error("field 'radius' applies only to DRO_WASSERSTEIN and DRO_KL");
        }
        spec.radius = get_number(entry, "radius", "policies entry");
        if (spec.radius < 0.0) {
            throw config_error("field 'radius' must be nonnegative");
        }
    } else if (is_radius_dro) {
        throw config_error("policy " + policy_kind_name(spec.kind) +
                           " requires a 'radius' field");
    }

    if (entry.contains("shrink")) {
        if (spec.kind != PolicyKind::kRo) {
            throw config_error("field 'shrink' applies only to RO");
        }
        spec.shrink = get_number(entry, "shrink", "policies entry");
        if (!(spec.shrink > 0.0) || !(spec.shrink <= 1.0)) {
            throw config_error("field 'shrink' must lie in (0, 1]");
        }
    }
    return spec;
}

std::vector<double> make_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi >= lo) || (points > 1 && !(hi > lo))) {
        throw config_error("calibration grid needs 0 < grid_min <= grid_max "
                           "(strict for more than one point)");
    }
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = lo;
        return grid;
    }
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        grid[i] = std::exp(log_lo + t * (log_hi - log_lo));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

json localization_to_json(const Localization& loc) {
    return std::visit(
        [](const auto& l) -> json {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, NormalLocalization>) {
                return json{{"kind", "normal"}, {"mu", l.mu}, {"sigma", l.sigma}};
            } else if constexpr (std::is_same_v<T, UniformLocalization>) {
                return json{{"kind", "uniform"}, {"a", l.a}, {"b", l.b}};
            } else {
                return json{{"kind", "dirac"}, {"theta_bar", l.theta_bar}};
            }
        },
        loc);
}

json truth_to_json(const TruthSpec& truth) {
    if (truth.kind == TruthSpec::Kind::kExponential) {
        return json{{"kind", "exponential"}};
    }
    return json{{"kind", "gamma"}, {"shape", truth.gamma_shape}};
}

} // namespace

FigureSet figure_set_from_name(const std::string& name) {
    if (name == "os-oqd") return FigureSet::kOsOqd;
    if (name == "localizations") return FigureSet::kLocalizations;
    if (name == "misspecification") return FigureSet::kMisspecification;
    throw config_error("field 'figures.set' must be os-oqd, localizations, or "
                       "misspecification");
}

std::string figure_set_name(FigureSet set) {
    switch (set) {
    case FigureSet::kOsOqd: return "os-oqd";
    case FigureSet::kLocalizations: return "localizations";
    case FigureSet::kMisspecification: return "misspecification";
    }
    return "localizations";
}

ToolConfig parse_tool_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw config_error("config root must be a JSON object");
    }
    reject_unknown_keys(root,
                        {"prices", "n", "m", "n_bar", "localization", "truth", "policies",
                         "master_seed", "ovp", "calibration", "figures"},
                        "config root");

    ToolConfig cfg;
    ExperimentConfig& exp = cfg.experiment;

    if (root.contains("prices")) {
        const json& prices = root.at("prices");
        reject_unknown_keys(prices, {"p", "c"}, "prices");
        const double p = get_number(prices, "p", "prices");
        const double c = get_number(prices, "c", "prices");
        if (!(c > 0.0) || !(p > c)) {
            throw config_error("field 'prices' must satisfy p > c > 0");
        }
        exp.prices = Prices(p, c);
    }

    exp.n = get_count(root, "n", "config root", exp.n);
    exp.m = get_count(root, "m", "config root", exp.m);
    exp.n_bar = get_count(root, "n_bar", "config root", exp.n_bar);

    if (!root.contains("localization")) {
        throw config_error("field 'localization' is required");
    }
    exp.localization = parse_localization(root.at("localization"));

    if (root.contains("truth")) {
        exp.truth = parse_truth(root.at("truth"));
    }

    if (!root.contains("policies") || !root.at("policies").is_array() ||
        root.at("policies").empty()) {
        throw config_error("field 'policies' must be a nonempty array");
    }
    std::set<PolicyKind> seen;
    for (const json& entry : root.at("policies")) {
        const PolicySpec spec = parse_policy(entry);
        if (!seen.insert(spec.kind).second) {
            throw config_error("duplicate policy kind " + policy_kind_name(spec.kind) +
                               " in 'policies'");
        }
        exp.policies.push_back(spec);
    }

    if (root.contains("master_seed")) {
        if (!root.at("master_seed").is_number_unsigned()) {
            throw config_error("field 'master_seed' must be an unsigned integer");
        }
        exp.master_seed = root.at("master_seed").get<std::uint64_t>();
    }

    if (root.contains("ovp")) {
        const json& solver = root.at("ovp");
        reject_unknown_keys(solver, {"tol", "max_expand", "b_init_factor"}, "ovp");
        if (solver.contains("tol")) {
            exp.ovp.tol = get_number(solver, "tol", "ovp");
        }
        if (solver.contains("max_expand")) {
            exp.ovp.max_expand =
                static_cast<int>(get_count(solver, "max_expand", "ovp", 60));
        }
        if (solver.contains("b_init_factor")) {
            exp.ovp.b_init_factor = get_number(solver, "b_init_factor", "ovp");
        }
        if (!(exp.ovp.tol > 0.0) || !(exp.ovp.b_init_factor > 1.0)) {
            throw config_error("field 'ovp' requires tol > 0 and b_init_factor > 1");
        }
    }

    // Calibration defaults mirror the experiment; the grid spans [0.0001, 5].
    cfg.cv.localization = exp.localization;
    cfg.cv.truth = exp.truth;
    cfg.cv.seed = exp.master_seed;
    if (root.contains("calibration")) {
        const json& cal = root.at("calibration");
        reject_unknown_keys(cal,
                            {"policy", "grid_min", "grid_max", "grid_points", "n_thetas",
                             "datasets_per_theta"},
                            "calibration");
        double grid_min = 0.0001;
        double grid_max = 5.0;
        std::size_t grid_points = 60;
        if (cal.contains("grid_min")) grid_min = get_number(cal, "grid_min", "calibration");
        if (cal.contains("grid_max")) grid_max = get_number(cal, "grid_max", "calibration");
        grid_points = get_count(cal, "grid_points", "calibration", grid_points);
        cfg.cv.grid = make_grid(grid_min, grid_max, grid_points);
        cfg.cv.n_thetas = get_count(cal, "n_thetas", "calibration", cfg.cv.n_thetas);
        cfg.cv.datasets_per_theta =
            get_count(cal, "datasets_per_theta", "calibration", cfg.cv.datasets_per_theta);
        if (cal.contains("policy")) {
            cfg.cv_policy = policy_kind_from_name(cal.at("policy").get<std::string>());
            if (cfg.cv_policy != PolicyKind::kDroWasserstein &&
                cfg.cv_policy != PolicyKind::kDroKl) {
                throw config_error("field 'calibration.policy' must be DRO_WASSERSTEIN "
                                   "or DRO_KL");
            }
        }
    }

    if (root.contains("figures")) {
        const json& figures = root.at("figures");
        reject_unknown_keys(figures, {"set"}, "figures");
        if (figures.contains("set")) {
            cfg.figures = figure_set_from_name(figures.at("set").get<std::string>());
        }
    }

    return cfg;
}

ToolConfig parse_tool_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw config_error("cannot read config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_tool_config_text(buffer.str());
}

std::string resolved_config_text(const ToolConfig& cfg) {
    const ExperimentConfig& exp = cfg.experiment;
    json policies = json::array();
    for (const PolicySpec& spec : exp.policies) {
        json entry{{"kind", policy_kind_name(spec.kind)}};
        if (spec.kind == PolicyKind::kDroWasserstein || spec.kind == PolicyKind::kDroKl) {
            entry["radius"] = spec.radius;
        }
        if (spec.kind == PolicyKind::kRo) {
            entry["shrink"] = spec.shrink;
        }
        policies.push_back(entry);
    }

    const json root{
        {"prices", {{"p", exp.prices.p}, {"c", exp.prices.c}}},
        {"n", exp.n},
        {"m", exp.m},
        {"n_bar", exp.n_bar},
        {"localization", localization_to_json(exp.localization)},
        {"truth", truth_to_json(exp.truth)},
        {"policies", policies},
        {"master_seed", exp.master_seed},
        {"ovp",
         {{"tol", exp.ovp.tol},
          {"max_expand", exp.ovp.max_expand},
          {"b_init_factor", exp.ovp.b_init_factor}}},
        {"calibration",
         {{"policy", policy_kind_name(cfg.cv_policy)},
          {"grid", cfg.cv.grid},
          {"n_thetas", cfg.cv.n_thetas},
          {"datasets_per_theta", cfg.cv.datasets_per_theta}}},
        {"figures", {{"set", figure_set_name(cfg.figures)}}},
    };
    return root.dump();
}

std::string config_digest(const ToolConfig& cfg) {
    const std::string text = resolved_config_text(cfg);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace ovp
