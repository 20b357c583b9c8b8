// SPDX-License-Identifier: Apache-2.0
//
// cranlearn - position-based learning-driven resource allocation for a TDD CRAN downlink
// Copyright (C) 2026 the cranlearn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cranlearn/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

namespace cranlearn {

using json = nlohmann::json;

double thermal_noise_w(double bandwidth_hz, double noise_figure_db) {
  constexpr double kBoltzmann = 1.380649e-23;
  constexpr double kTemperatureK = 290.0;
  return kBoltzmann * kTemperatureK * bandwidth_hz * std::pow(10.0, noise_figure_db / 10.0);
}

ExperimentConfig default_config() {
  ExperimentConfig cfg;
  // One knee-high wall per quadrant, across the RRH-to-quadrant diagonal.
  const double W = cfg.scenario.area_width_m, H = cfg.scenario.area_height_m;
  auto wall = [](double x1, double y1, double x2, double y2) {
    ShadowObject obj;
    obj.footprint = ShadowObject::Footprint::segment;
    obj.a = {x1, y1, 0.0};
    obj.b = {x2, y2, 0.0};
    obj.height_m = 1.5;
    return obj;
  };
  cfg.scenario.shadows = {
      wall(26.0, 10.0, 10.0, 26.0),
      wall(W - 26.0, 10.0, W - 10.0, 26.0),
      wall(26.0, H - 10.0, 10.0, H - 26.0),
      wall(W - 26.0, H - 10.0, W - 10.0, H - 26.0),
  };
  cfg.channel.pathloss.carrier_hz = cfg.carrier_hz;
  cfg.phy.tti_s = cfg.scenario.tti_s;
  cfg.phy.noise_power_w = thermal_noise_w(cfg.phy.bandwidth_hz, cfg.noise_figure_db);
  return cfg;
}

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& message) {
  throw ConfigError(key, message);
}

class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number()) fail(path_ + "." + key, "expected a number");
    return v.get<double>();
  }

  int integer(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number_integer()) fail(path_ + "." + key, "expected an integer");
    return v.get<int>();
  }

  const json* array(const std::string& key) {
    if (!has(key)) return nullptr;
    const auto& v = j_.at(key);
    if (!v.is_array()) fail(path_ + "." + key, "expected an array");
    return &v;
  }

  const json* object(const std::string& key) {
    if (!has(key)) return nullptr;
    const auto& v = j_.at(key);
    if (!v.is_object()) fail(path_ + "." + key, "expected an object");
    return &v;
  }

  std::string text(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_string()) fail(path_ + "." + key, "expected a string");
    return v.get<std::string>();
  }

  void reject_unknown() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.contains(key)) fail(path_ + "." + key, "unknown key");
  }

  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<double> number_list(const json& arr, const std::string& path) {
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) fail(path, "expected numbers");
    out.push_back(v.get<double>());
  }
  if (out.empty()) fail(path, "must not be empty");
  return out;
}

void parse_scenario(const json& j, ExperimentConfig& cfg) {
  Section s(j, "scenario");
  auto& sc = cfg.scenario;
  sc.area_width_m = s.number("area_width_m", sc.area_width_m);
  sc.area_height_m = s.number("area_height_m", sc.area_height_m);
  sc.num_rrhs = s.integer("num_rrhs", sc.num_rrhs);
  sc.rrh_height_m = s.number("rrh_height_m", sc.rrh_height_m);
  sc.rrh_num_antennas = s.integer("rrh_num_antennas", sc.rrh_num_antennas);
  sc.user_height_m = s.number("user_height_m", sc.user_height_m);
  sc.user_num_antennas = s.integer("user_num_antennas", sc.user_num_antennas);
  sc.user_speed_mps = s.number("user_speed_mps", sc.user_speed_mps);
  sc.scatterer_density_per_m2 = s.number("scatterer_density_per_m2", sc.scatterer_density_per_m2);
  sc.scatterer_gain_min = s.number("scatterer_gain_min", sc.scatterer_gain_min);
  sc.scatterer_gain_max = s.number("scatterer_gain_max", sc.scatterer_gain_max);
  sc.scatterer_max_height_m = s.number("scatterer_max_height_m", sc.scatterer_max_height_m);
  sc.tti_s = s.number("tti_s", sc.tti_s);
  if (const json* arr = s.array("shadows")) {
    sc.shadows.clear();
    int idx = 0;
    for (const auto& item : *arr) {
      const std::string path = "scenario.shadows[" + std::to_string(idx++) + "]";
      Section w(item, path);
      ShadowObject obj;
      const std::string kind = w.text("kind", "segment");
      if (kind == "segment")
        obj.footprint = ShadowObject::Footprint::segment;
      else if (kind == "rectangle")
        obj.footprint = ShadowObject::Footprint::rectangle;
      else
        fail(path + ".kind", "expected 'segment' or 'rectangle'");
      obj.a.x = w.number("x1", 0.0);
      obj.a.y = w.number("y1", 0.0);
      obj.b.x = w.number("x2", 0.0);
      obj.b.y = w.number("y2", 0.0);
      obj.height_m = w.number("height_m", 0.0);
      w.reject_unknown();
      sc.shadows.push_back(obj);
    }
  }
  s.reject_unknown();
}

void parse_codebook(const json& j, const std::string& path, CodebookConfig& cb) {
  Section s(j, path);
  cb.step_deg = s.number("step_deg", cb.step_deg);
  cb.min_deg = s.number("min_deg", cb.min_deg);
  cb.max_deg = s.number("max_deg", cb.max_deg);
  s.reject_unknown();
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json root;
  try {
    root = json::parse(in, nullptr, true, /*allow comments*/ true);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config parse error in " + path + ": " + e.what());
  }

  ExperimentConfig cfg = default_config();
  Section top(root, "config");

  if (const json* j = top.object("scenario")) parse_scenario(*j, cfg);

  if (const json* j = top.object("channel")) {
    Section s(*j, "channel");
    cfg.carrier_hz = s.number("carrier_hz", cfg.carrier_hz);
    cfg.channel.shadow.base_db = s.number("shadow_base_db", cfg.channel.shadow.base_db);
    cfg.channel.shadow.ref_height_m = s.number("shadow_ref_height_m", cfg.channel.shadow.ref_height_m);
    cfg.channel.shadow.slope_db_per_m =
        s.number("shadow_slope_db_per_m", cfg.channel.shadow.slope_db_per_m);
    cfg.channel.shadow.max_db = s.number("shadow_max_db", cfg.channel.shadow.max_db);
    s.reject_unknown();
  }

  bool explicit_noise = false;
  if (const json* j = top.object("phy")) {
    Section s(*j, "phy");
    cfg.phy.tx_power_w = s.number("tx_power_w", cfg.phy.tx_power_w);
    cfg.phy.bandwidth_hz = s.number("bandwidth_hz", cfg.phy.bandwidth_hz);
    cfg.noise_figure_db = s.number("noise_figure_db", cfg.noise_figure_db);
    if (s.has("noise_power_w")) {
      explicit_noise = true;
      const auto& v = j->at("noise_power_w");
      if (!v.is_number()) fail("phy.noise_power_w", "expected a number");
      cfg.phy.noise_power_w = v.get<double>();
    }
    s.reject_unknown();
  }

  if (const json* j = top.object("tx_codebook")) parse_codebook(*j, "tx_codebook", cfg.tx_codebook);
  if (const json* j = top.object("rx_codebook")) parse_codebook(*j, "rx_codebook", cfg.rx_codebook);

  if (const json* j = top.object("frame")) {
    Section s(*j, "frame");
    auto& f = cfg.frame;
    f.t_sym_total = s.number("t_sym_total", f.t_sym_total);
    f.f_sc_total = s.number("f_sc_total", f.f_sc_total);
    f.frame_duration_s = s.number("frame_duration_s", f.frame_duration_s);
    f.t_sym_pos = s.number("t_sym_pos", f.t_sym_pos);
    f.f_sc_pos = s.number("f_sc_pos", f.f_sc_pos);
    f.t_sym_csi = s.number("t_sym_csi", f.t_sym_csi);
    f.f_sc_csi = s.number("f_sc_csi", f.f_sc_csi);
    f.csi_pilot_spacing_sym = s.number("csi_pilot_spacing_sym", f.csi_pilot_spacing_sym);
    f.csi_nearby_users_per_rrh = s.number("csi_nearby_users_per_rrh", f.csi_nearby_users_per_rrh);
    s.reject_unknown();
  }

  if (const json* j = top.object("forest")) {
    Section s(*j, "forest");
    cfg.forest.num_trees = s.integer("num_trees", cfg.forest.num_trees);
    cfg.forest.max_depth = s.integer("max_depth", cfg.forest.max_depth);
    cfg.forest.features_per_split = s.integer("features_per_split", cfg.forest.features_per_split);
    if (const json* grid = s.array("grid")) {
      cfg.forest.grid.clear();
      for (const auto& entry : *grid) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
          fail("forest.grid", "expected [num_trees, max_depth] pairs");
        cfg.forest.grid.push_back({entry[0].get<int>(), entry[1].get<int>()});
      }
      if (cfg.forest.grid.empty()) fail("forest.grid", "must not be empty");
    }
    s.reject_unknown();
  }

  if (const json* j = top.object("genie")) {
    Section s(*j, "genie");
    cfg.genie.exact_enumeration_limit = static_cast<std::size_t>(
        s.integer("exact_enumeration_limit", static_cast<int>(cfg.genie.exact_enumeration_limit)));
    cfg.genie.restarts = s.integer("restarts", cfg.genie.restarts);
    cfg.genie.max_sweeps = s.integer("max_sweeps", cfg.genie.max_sweeps);
    s.reject_unknown();
  }

  if (const json* j = top.object("experiment")) {
    Section s(*j, "experiment");
    cfg.candidate_positions_per_user =
        s.integer("candidate_positions_per_user", cfg.candidate_positions_per_user);
    cfg.training_positions_per_user =
        s.integer("training_positions_per_user", cfg.training_positions_per_user);
    cfg.test_positions_per_user = s.integer("test_positions_per_user", cfg.test_positions_per_user);
    cfg.max_training_rows =
        static_cast<std::size_t>(s.integer("max_training_rows", static_cast<int>(cfg.max_training_rows)));
    if (const json* arr = s.array("seeds")) {
      cfg.seeds.clear();
      for (const auto& v : *arr) {
        if (!v.is_number_integer()) fail("experiment.seeds", "expected integers");
        cfg.seeds.push_back(v.get<std::uint64_t>());
      }
    }
    if (const json* arr = s.array("noise_variances"))
      cfg.noise_variances = number_list(*arr, "experiment.noise_variances");
    if (const json* arr = s.array("density_sweep"))
      cfg.density_sweep = number_list(*arr, "experiment.density_sweep");
    if (const json* arr = s.array("shadow_height_sweep"))
      cfg.shadow_height_sweep = number_list(*arr, "experiment.shadow_height_sweep");
    s.reject_unknown();
  }

  top.reject_unknown();

  cfg.channel.pathloss.carrier_hz = cfg.carrier_hz;
  cfg.phy.tti_s = cfg.scenario.tti_s;
  if (!explicit_noise)
    cfg.phy.noise_power_w = thermal_noise_w(cfg.phy.bandwidth_hz, cfg.noise_figure_db);

  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.scenario.area_width_m <= 0.0) fail("scenario.area_width_m", "must be positive");
  if (cfg.scenario.area_height_m <= 0.0) fail("scenario.area_height_m", "must be positive");
  if (cfg.scenario.num_rrhs < 1) fail("scenario.num_rrhs", "must be >= 1");
  if (cfg.scenario.rrh_num_antennas < 1) fail("scenario.rrh_num_antennas", "must be >= 1");
  if (cfg.scenario.user_num_antennas < 1) fail("scenario.user_num_antennas", "must be >= 1");
  if (cfg.scenario.scatterer_density_per_m2 < 0.0)
    fail("scenario.scatterer_density_per_m2", "must be >= 0");
  if (cfg.scenario.tti_s <= 0.0) fail("scenario.tti_s", "must be positive");
  if (cfg.carrier_hz <= 0.0) fail("channel.carrier_hz", "must be positive");
  if (cfg.phy.tx_power_w <= 0.0) fail("phy.tx_power_w", "must be positive");
  if (cfg.phy.noise_power_w <= 0.0) fail("phy.noise_power_w", "must be positive");
  if (cfg.phy.bandwidth_hz <= 0.0) fail("phy.bandwidth_hz", "must be positive");
  if (cfg.tx_codebook.step_deg <= 0.0) fail("tx_codebook.step_deg", "must be positive");
  if (cfg.rx_codebook.step_deg <= 0.0) fail("rx_codebook.step_deg", "must be positive");
  if (cfg.tx_codebook.max_deg - cfg.tx_codebook.min_deg < cfg.tx_codebook.step_deg)
    fail("tx_codebook", "coverage narrower than one step");
  if (cfg.rx_codebook.max_deg - cfg.rx_codebook.min_deg < cfg.rx_codebook.step_deg)
    fail("rx_codebook", "coverage narrower than one step");
  if (cfg.forest.num_trees < 1) fail("forest.num_trees", "must be >= 1");
  if (cfg.forest.max_depth < 1) fail("forest.max_depth", "must be >= 1");
  for (const auto& entry : cfg.forest.grid)
    if (entry.num_trees < 1 || entry.max_depth < 1)
      fail("forest.grid", "entries must be >= 1");
  if (cfg.candidate_positions_per_user < 1)
    fail("experiment.candidate_positions_per_user", "must be >= 1");
  if (cfg.training_positions_per_user < 1 ||
      cfg.training_positions_per_user > cfg.candidate_positions_per_user)
    fail("experiment.training_positions_per_user", "must be in [1, candidate_positions_per_user]");
  if (cfg.test_positions_per_user < 1 ||
      cfg.test_positions_per_user > cfg.training_positions_per_user)
    fail("experiment.test_positions_per_user", "must be in [1, training_positions_per_user]");
  if (cfg.seeds.empty()) fail("experiment.seeds", "need at least one seed");
  if (cfg.noise_variances.empty()) fail("experiment.noise_variances", "must not be empty");
  for (double v : cfg.noise_variances)
    if (v < 0.0) fail("experiment.noise_variances", "variances must be >= 0");
  if (cfg.density_sweep.empty()) fail("experiment.density_sweep", "must not be empty");
  if (cfg.shadow_height_sweep.empty()) fail("experiment.shadow_height_sweep", "must not be empty");
}

Codebook make_tx_codebook(const ExperimentConfig& cfg) {
  return build_codebook(CodebookSide::transmit, cfg.scenario.rrh_num_antennas,
                        cfg.tx_codebook.step_deg, cfg.tx_codebook.min_deg, cfg.tx_codebook.max_deg);
}

Codebook make_rx_codebook(const ExperimentConfig& cfg) {
  return build_codebook(CodebookSide::receive, cfg.scenario.user_num_antennas,
                        cfg.rx_codebook.step_deg, cfg.rx_codebook.min_deg, cfg.rx_codebook.max_deg);
}

}  // namespace cranlearn
