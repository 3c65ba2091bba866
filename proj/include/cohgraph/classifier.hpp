// Decision-tree classifier over the seven-feature vectors.
//
// A greedy binary CART fit minimizes Gini impurity, with every tie broken
// deterministically (lowest feature index, then lowest threshold) so that
// identical inputs always produce identical trees and model files.
// Hyperparameters come from a grid search scored by leave-one-out
// cross-validation, and per-feature importances are the normalized
// sample-weighted impurity decreases of the tree's splits.

#ifndef COHGRAPH_CLASSIFIER_HPP
#define COHGRAPH_CLASSIFIER_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cohgraph/metrics.hpp"

namespace cohgraph {

struct TreeParams {
  int max_depth = 0;  // <= 0 means unlimited
  int min_samples_leaf = 1;
  int min_samples_split = 2;
};

// Candidate lists for the grid search. Ties on LOOCV accuracy prefer the
// smallest max_depth, then the largest min_samples_leaf, then the smallest
// min_samples_split — shallow, conservative trees win.
struct GridSpec {
  std::vector<int> max_depth = {2, 3, 4, 5, 6};
  std::vector<int> min_samples_leaf = {1, 2, 5};
  std::vector<int> min_samples_split = {2, 5};
};

// Either a split (feature_index >= 0, both children set) or a leaf
// (feature_index < 0, class_counts filled, prediction = majority label with
// lexicographic tie-break).
struct TreeNode {
  int feature_index = -1;
  double threshold = 0.0;
  std::unique_ptr<TreeNode> left;
  std::unique_ptr<TreeNode> right;
  std::map<std::string, int> class_counts;
  std::string prediction;

  bool is_leaf() const { return feature_index < 0; }
};

struct TrainedTree {
  std::unique_ptr<TreeNode> root;
  TreeParams params;
  std::array<double, 7> importances{};
  double loocv_accuracy = 0.0;
};

// Grows a tree on labeled vectors. Splits use midpoint thresholds between
// consecutive distinct feature values, value <= threshold goes left, and
// growth stops on max_depth, min_samples_split, min_samples_leaf, or a pure
// node. Vectors without labels are rejected; fewer than 2 vectors is a
// programming error. A single-class input yields a single leaf.
TrainedTree fit_tree(const std::vector<FeatureVector>& vectors,
                     const TreeParams& params);

// Routes one vector through the tree. Non-finite feature values are
// rejected as bad input.
std::string predict(const TrainedTree& tree, const FeatureVector& vector);

// Mean-decrease-impurity importances, recomputed by routing the given
// vectors through the tree: per feature, the sum of (node sample fraction x
// impurity decrease) over that feature's splits, normalized to sum 1.
// A tree without effective splits gets all zeros.
std::array<double, 7> gini_importance(const TrainedTree& tree,
                                      const std::vector<FeatureVector>& vectors);

// Grid search scored by leave-one-out cross-validation: each vector is
// predicted by a tree fit on the others, per grid point. The winner is
// refit on all vectors and carries its LOOCV accuracy and importances.
TrainedTree loocv(const std::vector<FeatureVector>& vectors,
                  const GridSpec& grid);

// JSON round-trip of a trained tree. save(load(save(t))) == save(t) byte
// for byte; malformed or truncated input raises a format error.
std::string save_model(const TrainedTree& tree);
TrainedTree load_model(const std::string& bytes);

}  // namespace cohgraph

#endif  // COHGRAPH_CLASSIFIER_HPP
