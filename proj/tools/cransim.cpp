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
//
// cransim - experiment runner. Subcommands:
//   train     offline phase only: genie search, packet sizes, forest grid
//   compare   scheme comparison across the configured noise variances
//   sweep     scatterer-density and shadow-height robustness sweeps
//   overhead  perfect-position comparison plus the frame-overhead study
//   all       everything above
//
// Every run writes results.csv, forest.model, summary.txt, plus the first
// seed's training_set.csv and genie_records.csv, into --out.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cranlearn/harness.hpp"

namespace {

cranlearn::RunMode parse_mode(const std::string& name) {
  using cranlearn::RunMode;
  if (name == "train") return RunMode::train;
  if (name == "compare") return RunMode::compare;
  if (name == "sweep") return RunMode::sweep;
  if (name == "overhead") return RunMode::overhead;
  return RunMode::all;
}

void write_file(const std::filesystem::path& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cransim - goodput studies for position-based learned resource allocation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::uint64_t> seed_override;
  app.add_option("--config", config_path,
                 "config file path, or 'default' for the built-in desk-scale defaults")
      ->required();
  app.add_option("--out", out_dir, "output directory (created if absent)");
  app.add_option("--seeds", seed_override, "override the config seed list")->delimiter(',');

  for (const char* name : {"train", "compare", "sweep", "overhead", "all"})
    app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::endl;
    return 2;
  }

  cranlearn::ExperimentConfig cfg;
  try {
    if (config_path == "default") {
      cfg = cranlearn::default_config();
    } else {
      if (!std::filesystem::exists(config_path)) {
        std::cerr << "config file not found: " << config_path << std::endl;
        return 2;
      }
      cfg = cranlearn::load_config(config_path);
    }
    if (!seed_override.empty()) cfg.seeds = seed_override;
    cranlearn::validate(cfg);
  } catch (const cranlearn::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invalid config: " << e.what() << std::endl;
    return 1;
  }

  const cranlearn::RunMode mode = parse_mode(app.get_subcommands().front()->get_name());

  try {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path out(out_dir);

    std::cout << "running " << app.get_subcommands().front()->get_name() << " over "
              << cfg.seeds.size() << " seed(s)..." << std::endl;
    const cranlearn::RunOutputs outputs = cranlearn::run_experiment(cfg, mode);

    write_file(out / "results.csv",
               [&](std::ostream& os) { cranlearn::write_results_csv(os, outputs.rows); });
    write_file(out / "forest.model",
               [&](std::ostream& os) { cranlearn::save_forest(os, outputs.forest); });
    write_file(out / "summary.txt", [&](std::ostream& os) { os << outputs.summary; });
    write_file(out / "training_set.csv",
               [&](std::ostream& os) { cranlearn::write_training_set(os, outputs.training_set); });
    write_file(out / "genie_records.csv",
               [&](std::ostream& os) { cranlearn::write_genie_records(os, outputs.records); });

    std::cout << outputs.summary;
    std::cout << "wrote " << (out / "results.csv").string() << " (" << outputs.rows.size()
              << " rows)" << std::endl;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
