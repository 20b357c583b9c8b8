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

#include "cranlearn/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cranlearn {

int DecisionTree::predict(const std::array<double, kNumFeatures>& x) const {
  int idx = 0;
  while (!nodes[static_cast<std::size_t>(idx)].is_leaf()) {
    const TreeNode& node = nodes[static_cast<std::size_t>(idx)];
    idx = x[static_cast<std::size_t>(node.feature)] < node.threshold ? node.left : node.right;
  }
  return nodes[static_cast<std::size_t>(idx)].leaf_class;
}

namespace {

int subtree_depth(const std::vector<TreeNode>& nodes, int idx) {
  const TreeNode& node = nodes[static_cast<std::size_t>(idx)];
  if (node.is_leaf()) return 0;
  return 1 + std::max(subtree_depth(nodes, node.left), subtree_depth(nodes, node.right));
}

}  // namespace

int DecisionTree::depth() const { return nodes.empty() ? 0 : subtree_depth(nodes, 0); }

BootstrapSample bootstrap(std::size_t num_rows, Rng& rng) {
  if (num_rows == 0) throw std::invalid_argument("bootstrap: empty dataset");
  BootstrapSample sample;
  sample.in_bag.resize(num_rows);
  std::vector<bool> drawn(num_rows, false);
  std::uniform_int_distribution<std::size_t> pick(0, num_rows - 1);
  for (std::size_t i = 0; i < num_rows; ++i) {
    const std::size_t j = pick(rng);
    sample.in_bag[i] = j;
    drawn[j] = true;
  }
  for (std::size_t i = 0; i < num_rows; ++i)
    if (!drawn[i]) sample.oob.push_back(i);
  return sample;
}

double gini_impurity(const std::vector<FeatureVector>& rows,
                     const std::vector<std::size_t>& node_rows) {
  if (node_rows.empty()) return 0.0;
  std::size_t ones = 0;
  for (std::size_t i : node_rows) ones += rows[i].label == 1 ? 1u : 0u;
  const double p = static_cast<double>(ones) / static_cast<double>(node_rows.size());
  return 2.0 * p * (1.0 - p);
}

std::optional<Split> best_split(const std::vector<FeatureVector>& rows,
                                const std::vector<std::size_t>& node_rows,
                                const std::vector<int>& candidate_features) {
  if (node_rows.empty()) return std::nullopt;
  const double n = static_cast<double>(node_rows.size());
  const double parent = gini_impurity(rows, node_rows);
  if (parent == 0.0) return std::nullopt;  // pure node

  std::optional<Split> best;
  std::vector<std::pair<double, int>> values;  // (feature value, label)
  values.reserve(node_rows.size());

  for (int f : candidate_features) {
    values.clear();
    for (std::size_t i : node_rows) {
      const auto x = rows[i].features();
      values.emplace_back(x[static_cast<std::size_t>(f)], rows[i].label);
    }
    std::sort(values.begin(), values.end());

    // Sweep thresholds at midpoints between consecutive distinct values,
    // tracking class counts on the left incrementally.
    std::size_t total_ones = 0;
    for (const auto& [v, y] : values) total_ones += y == 1 ? 1u : 0u;
    std::size_t left_count = 0, left_ones = 0;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      left_count += 1;
      left_ones += values[k].second == 1 ? 1u : 0u;
      if (values[k].first == values[k + 1].first) continue;
      const double threshold = values[k].first + 0.5 * (values[k + 1].first - values[k].first);
      const double nl = static_cast<double>(left_count);
      const double nr = n - nl;
      const double pl = static_cast<double>(left_ones) / nl;
      const double pr = static_cast<double>(total_ones - left_ones) / nr;
      const double weighted = (nl * 2.0 * pl * (1.0 - pl) + nr * 2.0 * pr * (1.0 - pr)) / n;
      if (!best || weighted < best->weighted_impurity)
        best = Split{f, threshold, weighted};
    }
  }

  if (!best || best->weighted_impurity >= parent - 1e-12) return std::nullopt;
  return best;
}

namespace {

int majority_class(const std::vector<FeatureVector>& rows,
                   const std::vector<std::size_t>& node_rows) {
  std::size_t ones = 0;
  for (std::size_t i : node_rows) ones += rows[i].label == 1 ? 1u : 0u;
  return 2 * ones >= node_rows.size() ? 1 : 0;  // tie goes to class 1
}

void grow(DecisionTree& tree, const std::vector<FeatureVector>& rows,
          const std::vector<std::size_t>& node_rows, int depth, int max_depth,
          int features_per_split, Rng& rng) {
  const int node_index = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();

  const bool depth_exhausted = depth >= max_depth;
  std::optional<Split> split;
  if (!depth_exhausted) {
    std::vector<int> all(kNumFeatures);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> candidates;
    std::sample(all.begin(), all.end(), std::back_inserter(candidates),
                static_cast<std::size_t>(features_per_split), rng);
    split = best_split(rows, node_rows, candidates);
  }

  if (!split) {
    tree.nodes[static_cast<std::size_t>(node_index)].feature = -1;
    tree.nodes[static_cast<std::size_t>(node_index)].leaf_class = majority_class(rows, node_rows);
    return;
  }

  std::vector<std::size_t> left_rows, right_rows;
  for (std::size_t i : node_rows) {
    const auto x = rows[i].features();
    if (x[static_cast<std::size_t>(split->feature)] < split->threshold)
      left_rows.push_back(i);
    else
      right_rows.push_back(i);
  }

  tree.nodes[static_cast<std::size_t>(node_index)].feature = split->feature;
  tree.nodes[static_cast<std::size_t>(node_index)].threshold = split->threshold;
  const int left_index = static_cast<int>(tree.nodes.size());
  tree.nodes[static_cast<std::size_t>(node_index)].left = left_index;
  grow(tree, rows, left_rows, depth + 1, max_depth, features_per_split, rng);
  const int right_index = static_cast<int>(tree.nodes.size());
  tree.nodes[static_cast<std::size_t>(node_index)].right = right_index;
  grow(tree, rows, right_rows, depth + 1, max_depth, features_per_split, rng);
}

}  // namespace

RandomForest train(const TrainingSet& ts, int num_trees, int max_depth, int features_per_split,
                   std::uint64_t seed) {
  if (num_trees < 1) throw std::invalid_argument("train: num_trees must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("train: max_depth must be >= 1");
  if (ts.rows.empty()) throw std::invalid_argument("train: empty training set");
  if (features_per_split <= 0)
    features_per_split =
        static_cast<int>(std::ceil(std::sqrt(static_cast<double>(kNumFeatures))));
  features_per_split = std::min(features_per_split, kNumFeatures);

  RandomForest rf;
  rf.num_trees = num_trees;
  rf.max_depth = max_depth;
  rf.features_per_split = features_per_split;
  rf.seed = seed;
  rf.trees.resize(static_cast<std::size_t>(num_trees));
  rf.oob_indices.resize(static_cast<std::size_t>(num_trees));

  for (int t = 0; t < num_trees; ++t) {
    Rng rng = make_rng(derive_seed(seed, rng_stream::kTree, static_cast<std::uint64_t>(t)));
    BootstrapSample sample = bootstrap(ts.rows.size(), rng);
    rf.oob_indices[static_cast<std::size_t>(t)] = std::move(sample.oob);
    grow(rf.trees[static_cast<std::size_t>(t)], ts.rows, sample.in_bag, 0, max_depth,
         features_per_split, rng);
  }
  return rf;
}

int votes(const RandomForest& rf, const FeatureVector& fv) {
  const auto x = fv.features();
  int count = 0;
  for (const auto& tree : rf.trees) count += tree.predict(x);
  return count;
}

int predict(const RandomForest& rf, const FeatureVector& fv) {
  return 2 * votes(rf, fv) >= rf.num_trees ? 1 : 0;
}

double accuracy(const RandomForest& rf, const std::vector<FeatureVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("accuracy: empty dataset");
  std::size_t hits = 0;
  for (const auto& fv : rows) hits += predict(rf, fv) == fv.label ? 1u : 0u;
  return static_cast<double>(hits) / static_cast<double>(rows.size());
}

std::array<double, kNumFeatures> variable_importance(const RandomForest& rf,
                                                     const TrainingSet& ts) {
  std::array<double, kNumFeatures> importance{};
  std::array<int, kNumFeatures> tree_counts{};

  for (std::size_t t = 0; t < rf.trees.size(); ++t) {
    const auto& oob = rf.oob_indices[t];
    if (oob.empty()) continue;
    const auto& tree = rf.trees[t];

    std::size_t baseline_hits = 0;
    std::vector<std::array<double, kNumFeatures>> xs;
    xs.reserve(oob.size());
    for (std::size_t i : oob) {
      xs.push_back(ts.rows[i].features());
      baseline_hits += tree.predict(xs.back()) == ts.rows[i].label ? 1u : 0u;
    }
    const double baseline = static_cast<double>(baseline_hits) / static_cast<double>(oob.size());

    Rng rng = make_rng(derive_seed(rf.seed, rng_stream::kImportance, t));
    for (int f = 0; f < kNumFeatures; ++f) {
      std::vector<std::size_t> perm(oob.size());
      std::iota(perm.begin(), perm.end(), 0u);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::size_t hits = 0;
      for (std::size_t k = 0; k < oob.size(); ++k) {
        auto x = xs[k];
        x[static_cast<std::size_t>(f)] = xs[perm[k]][static_cast<std::size_t>(f)];
        hits += tree.predict(x) == ts.rows[oob[k]].label ? 1u : 0u;
      }
      const double permuted = static_cast<double>(hits) / static_cast<double>(oob.size());
      importance[static_cast<std::size_t>(f)] += baseline - permuted;
      tree_counts[static_cast<std::size_t>(f)] += 1;
    }
  }

  for (int f = 0; f < kNumFeatures; ++f)
    if (tree_counts[static_cast<std::size_t>(f)] > 0)
      importance[static_cast<std::size_t>(f)] /= tree_counts[static_cast<std::size_t>(f)];
  return importance;
}

}  // namespace cranlearn
