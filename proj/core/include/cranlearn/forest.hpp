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

#ifndef CRANLEARN_FOREST_HPP
#define CRANLEARN_FOREST_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cranlearn/geometry.hpp"
#include "cranlearn/rng.hpp"

namespace cranlearn {

/// Scalar features per instance: user id, x, y, z, beam, filter, packet size.
constexpr int kNumFeatures = 7;

constexpr int kNoLabel = -1;

/// One learning instance. The label is kNoLabel at prediction time.
struct FeatureVector {
  int user_id = 0;
  Vec3 pos;
  int beam_index = 0;
  int filter_index = 0;
  double packet_size_bits = 0.0;
  int label = kNoLabel;

  std::array<double, kNumFeatures> features() const {
    return {static_cast<double>(user_id), pos.x,
            pos.y,                        pos.z,
            static_cast<double>(beam_index), static_cast<double>(filter_index),
            packet_size_bits};
  }
};

struct TrainingSet {
  std::vector<FeatureVector> rows;
};

/// Binary decision tree over flattened nodes. An internal node routes
/// feature < threshold to `left`, otherwise to `right`.
struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int leaf_class = 0;
  bool is_leaf() const { return feature < 0; }
};

struct DecisionTree {
  std::vector<TreeNode> nodes;
  int predict(const std::array<double, kNumFeatures>& x) const;
  /// Longest root-to-leaf path, counted in internal decisions.
  int depth() const;
};

struct RandomForest {
  std::vector<DecisionTree> trees;
  int num_trees = 0;          // T_n
  int max_depth = 0;          // T_d
  int features_per_split = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::size_t>> oob_indices;  // per tree, sorted
};

struct BootstrapSample {
  std::vector<std::size_t> in_bag;  // |rows| draws with replacement
  std::vector<std::size_t> oob;     // rows never drawn, ascending
};

/// Uniform draw with replacement of |rows| = n indices; oob is the
/// complement of the drawn set.
/// Throws std::invalid_argument for n == 0.
BootstrapSample bootstrap(std::size_t num_rows, Rng& rng);

struct Split {
  int feature = 0;
  double threshold = 0.0;
  double weighted_impurity = 0.0;
};

/// Best (feature, threshold) over the candidate features, thresholds taken
/// as midpoints between consecutive distinct sorted values, minimizing the
/// weighted Gini impurity of the children. Returns nullopt when the node is
/// pure or no candidate split reduces the impurity.
std::optional<Split> best_split(const std::vector<FeatureVector>& rows,
                                const std::vector<std::size_t>& node_rows,
                                const std::vector<int>& candidate_features);

/// Gini impurity of a set of labeled rows (by index).
double gini_impurity(const std::vector<FeatureVector>& rows,
                     const std::vector<std::size_t>& node_rows);

/// Grows T_n trees on independent bootstraps; each node draws a fresh random
/// feature subset of size features_per_split. Deterministic in the seed;
/// per-tree RNG streams are derived from it, so tree order never matters.
/// features_per_split <= 0 selects the ceil(sqrt(I)) default.
/// Throws std::invalid_argument for num_trees < 1 or max_depth < 1.
RandomForest train(const TrainingSet& ts, int num_trees, int max_depth, int features_per_split,
                   std::uint64_t seed);

/// Number of trees voting class 1; votes / T_n is the packet success rate.
int votes(const RandomForest& rf, const FeatureVector& fv);

/// Majority vote with the tie going to class 1: predicts 1 iff
/// votes >= T_n / 2.
int predict(const RandomForest& rf, const FeatureVector& fv);

/// Fraction of rows whose prediction matches the label.
/// Throws std::invalid_argument on an empty dataset.
double accuracy(const RandomForest& rf, const std::vector<FeatureVector>& rows);

/// Mean decrease in per-tree OOB accuracy when one feature's values are
/// permuted among the OOB rows, averaged over trees with a non-empty OOB
/// set. Higher means more important.
std::array<double, kNumFeatures> variable_importance(const RandomForest& rf,
                                                     const TrainingSet& ts);

/// Self-describing text serialization (version line, parameters, flattened
/// node arrays). Round-trips exactly.
void save_forest(std::ostream& out, const RandomForest& rf);
RandomForest load_forest(std::istream& in);

}  // namespace cranlearn

#endif  // CRANLEARN_FOREST_HPP
