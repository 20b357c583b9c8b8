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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(CRANSIM_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cransim_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Tiny config: coarse codebooks, one seed, a handful of placements.
fs::path write_tiny_config(const fs::path& dir) {
  const fs::path path = dir / "tiny.json";
  std::ofstream out(path);
  out << R"({
  // unit-test configuration: shrunk in every dimension
  "scenario": { "scatterer_density_per_m2": 0.002 },
  "tx_codebook": { "step_deg": 12.0 },
  "rx_codebook": { "step_deg": 30.0 },
  "experiment": {
    "candidate_positions_per_user": 100,
    "training_positions_per_user": 10,
    "test_positions_per_user": 5,
    "seeds": [1],
    "noise_variances": [0.0],
    "density_sweep": [0.002],
    "shadow_height_sweep": [1.5]
  }
})";
  return path;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);                                  // no subcommand
  EXPECT_EQ(run("bogus --config default"), 2);            // unknown subcommand
  EXPECT_EQ(run("train"), 2);                             // --config missing
  EXPECT_EQ(run("train --config /does/not/exist.json"), 2);
}

TEST(Cli, InvalidConfigExitsOneAndNamesTheKey) {
  const fs::path dir = temp_dir("badcfg");
  const fs::path cfg = dir / "bad.json";
  std::ofstream(cfg) << R"({ "scenario": { "num_rrhs": 0 } })";

  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(CRANSIM_BIN) + " train --config " + cfg.string() +
                          " >/dev/null 2>" + err.string();
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 1);
  EXPECT_NE(slurp(err).find("scenario.num_rrhs"), std::string::npos);

  std::ofstream(cfg) << R"({ "scenario": { "typo_key": 1 } })";
  EXPECT_EQ(run("train --config " + cfg.string()), 1);
}

TEST(Cli, AllRunWritesEveryArtifact) {
  const fs::path dir = temp_dir("smoke");
  const fs::path cfg = write_tiny_config(dir);
  const fs::path out = dir / "run1";
  ASSERT_EQ(run("all --config " + cfg.string() + " --out " + out.string()), 0);
  for (const char* artifact :
       {"results.csv", "forest.model", "summary.txt", "training_set.csv", "genie_records.csv"})
    EXPECT_TRUE(fs::exists(out / artifact)) << artifact;

  const std::string csv = slurp(out / "results.csv");
  EXPECT_NE(csv.find("experiment,seed,scheme"), std::string::npos);
  EXPECT_NE(csv.find("compare,1,genie"), std::string::npos);
  EXPECT_NE(csv.find("overhead,1,learned"), std::string::npos);
}

TEST(Cli, SameSeedRunsAreByteIdentical) {
  const fs::path dir = temp_dir("determinism");
  const fs::path cfg = write_tiny_config(dir);
  const fs::path out1 = dir / "a", out2 = dir / "b";
  ASSERT_EQ(run("all --config " + cfg.string() + " --out " + out1.string()), 0);
  ASSERT_EQ(run("all --config " + cfg.string() + " --out " + out2.string()), 0);
  EXPECT_EQ(slurp(out1 / "results.csv"), slurp(out2 / "results.csv"));
  EXPECT_EQ(slurp(out1 / "forest.model"), slurp(out2 / "forest.model"));
  EXPECT_EQ(slurp(out1 / "summary.txt"), slurp(out2 / "summary.txt"));
}

TEST(Cli, SeedOverrideChangesResults) {
  const fs::path dir = temp_dir("seeds");
  const fs::path cfg = write_tiny_config(dir);
  const fs::path out1 = dir / "s1", out2 = dir / "s2";
  ASSERT_EQ(run("compare --config " + cfg.string() + " --seeds 1 --out " + out1.string()), 0);
  ASSERT_EQ(run("compare --config " + cfg.string() + " --seeds 2 --out " + out2.string()), 0);
  EXPECT_NE(slurp(out1 / "results.csv"), slurp(out2 / "results.csv"));
}

}  // namespace
