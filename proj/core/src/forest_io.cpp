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

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cranlearn/forest.hpp"

namespace cranlearn {

namespace {
constexpr const char* kMagic = "cranlearn-forest";
constexpr int kVersion = 1;
}  // namespace

void save_forest(std::ostream& out, const RandomForest& rf) {
  out.precision(std::numeric_limits<double>::max_digits10);
  out << kMagic << " v" << kVersion << '\n';
  out << "params trees " << rf.num_trees << " max_depth " << rf.max_depth
      << " features_per_split " << rf.features_per_split << " num_features " << kNumFeatures
      << " seed " << rf.seed << '\n';
  for (int t = 0; t < rf.num_trees; ++t) {
    const auto& tree = rf.trees[static_cast<std::size_t>(t)];
    out << "tree " << t << " nodes " << tree.nodes.size() << '\n';
    for (const auto& node : tree.nodes) {
      if (node.is_leaf())
        out << "leaf " << node.leaf_class << '\n';
      else
        out << "split " << node.feature << ' ' << node.threshold << ' ' << node.left << ' '
            << node.right << '\n';
    }
  }
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::runtime_error("forest model parse error: " + what);
}

std::string expect_token(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) parse_fail(std::string("missing ") + what);
  return token;
}

void expect_keyword(std::istream& in, const std::string& keyword) {
  const std::string token = expect_token(in, keyword.c_str());
  if (token != keyword) parse_fail("expected '" + keyword + "', got '" + token + "'");
}

}  // namespace

RandomForest load_forest(std::istream& in) {
  expect_keyword(in, kMagic);
  const std::string version = expect_token(in, "version");
  if (version != "v1") parse_fail("unsupported version " + version);

  RandomForest rf;
  expect_keyword(in, "params");
  expect_keyword(in, "trees");
  if (!(in >> rf.num_trees)) parse_fail("tree count");
  expect_keyword(in, "max_depth");
  if (!(in >> rf.max_depth)) parse_fail("max_depth");
  expect_keyword(in, "features_per_split");
  if (!(in >> rf.features_per_split)) parse_fail("features_per_split");
  expect_keyword(in, "num_features");
  int num_features = 0;
  if (!(in >> num_features)) parse_fail("num_features");
  if (num_features != kNumFeatures) parse_fail("feature count mismatch");
  expect_keyword(in, "seed");
  if (!(in >> rf.seed)) parse_fail("seed");
  if (rf.num_trees < 1) parse_fail("non-positive tree count");

  rf.trees.resize(static_cast<std::size_t>(rf.num_trees));
  rf.oob_indices.resize(static_cast<std::size_t>(rf.num_trees));
  for (int t = 0; t < rf.num_trees; ++t) {
    expect_keyword(in, "tree");
    int index = 0;
    if (!(in >> index) || index != t) parse_fail("tree index");
    expect_keyword(in, "nodes");
    std::size_t count = 0;
    if (!(in >> count) || count == 0) parse_fail("node count");
    auto& tree = rf.trees[static_cast<std::size_t>(t)];
    tree.nodes.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      const std::string kind = expect_token(in, "node kind");
      TreeNode& node = tree.nodes[k];
      if (kind == "leaf") {
        node.feature = -1;
        if (!(in >> node.leaf_class)) parse_fail("leaf class");
      } else if (kind == "split") {
        if (!(in >> node.feature >> node.threshold >> node.left >> node.right))
          parse_fail("split node");
        if (node.feature < 0 || node.feature >= kNumFeatures) parse_fail("feature index");
        if (node.left < 0 || node.right < 0 || node.left >= static_cast<int>(count) ||
            node.right >= static_cast<int>(count))
          parse_fail("child index");
      } else {
        parse_fail("unknown node kind '" + kind + "'");
      }
    }
  }
  return rf;
}

}  // namespace cranlearn
