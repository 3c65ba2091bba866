#include "cohgraph/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "cohgraph/errors.hpp"
#include "json.hpp"

namespace cohgraph {

namespace {

using nlohmann::json;

struct Dataset {
  std::vector<std::array<double, 7>> x;
  std::vector<std::string> y;
};

Dataset dataset_from(const std::vector<FeatureVector>& vectors) {
  Dataset d;
  d.x.reserve(vectors.size());
  d.y.reserve(vectors.size());
  for (const auto& fv : vectors) {
    if (!fv.label) {
      throw InputError("document '" + fv.document_id +
                       "' has no label; training requires labeled vectors");
    }
    d.x.push_back(fv.values());
    d.y.push_back(*fv.label);
  }
  return d;
}

std::map<std::string, int> label_counts(const Dataset& d,
                                        const std::vector<int>& idx) {
  std::map<std::string, int> counts;
  for (int i : idx) ++counts[d.y[i]];
  return counts;
}

double gini(const std::map<std::string, int>& counts, int total) {
  double impurity = 1.0;
  for (const auto& [label, count] : counts) {
    const double p = static_cast<double>(count) / total;
    impurity -= p * p;
  }
  return impurity;
}

std::unique_ptr<TreeNode> make_leaf(std::map<std::string, int> counts) {
  auto node = std::make_unique<TreeNode>();
  int best = 0;
  for (const auto& [label, count] : counts) {
    // Strictly-greater keeps the lexicographically smallest label on ties,
    // since the map iterates in ascending label order.
    if (count > best) {
      best = count;
      node->prediction = label;
    }
  }
  node->class_counts = std::move(counts);
  return node;
}

struct SplitChoice {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  double gain = -1.0;
};

// Best (feature, midpoint threshold) by Gini decrease. Candidates leaving
// either side under min_samples_leaf are skipped. Strictly-greater
// comparison keeps the first of tied candidates, and the scan runs features
// ascending with thresholds ascending within each, which is the tie-break.
SplitChoice best_split(const Dataset& d, const std::vector<int>& idx,
                       const TreeParams& params) {
  const int m = static_cast<int>(idx.size());
  const auto parent_counts = label_counts(d, idx);
  const double parent_gini = gini(parent_counts, m);

  SplitChoice best;
  std::vector<int> order;
  for (int f = 0; f < 7; ++f) {
    order = idx;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d.x[a][f] < d.x[b][f]; });
    std::map<std::string, int> left;
    auto right = parent_counts;
    for (int k = 0; k + 1 < m; ++k) {
      const int i = order[k];
      ++left[d.y[i]];
      if (--right[d.y[i]] == 0) right.erase(d.y[i]);
      const double value = d.x[i][f];
      const double next = d.x[order[k + 1]][f];
      if (value == next) continue;  // threshold sits between distinct values
      const int nl = k + 1;
      const int nr = m - nl;
      if (nl < params.min_samples_leaf || nr < params.min_samples_leaf)
        continue;
      const double gain = parent_gini -
                          (static_cast<double>(nl) / m) * gini(left, nl) -
                          (static_cast<double>(nr) / m) * gini(right, nr);
      if (gain > best.gain) {
        best = SplitChoice{true, f, (value + next) / 2.0, gain};
      }
    }
  }
  return best;
}

std::unique_ptr<TreeNode> grow(const Dataset& d, const std::vector<int>& idx,
                               int depth, const TreeParams& params) {
  auto counts = label_counts(d, idx);
  const bool pure = counts.size() <= 1;
  const bool depth_capped = params.max_depth > 0 && depth >= params.max_depth;
  if (pure || depth_capped ||
      static_cast<int>(idx.size()) < params.min_samples_split) {
    return make_leaf(std::move(counts));
  }
  const SplitChoice split = best_split(d, idx, params);
  if (!split.found) return make_leaf(std::move(counts));

  std::vector<int> left_idx, right_idx;
  for (int i : idx) {
    (d.x[i][split.feature] <= split.threshold ? left_idx : right_idx)
        .push_back(i);
  }
  auto node = std::make_unique<TreeNode>();
  node->feature_index = split.feature;
  node->threshold = split.threshold;
  node->left = grow(d, left_idx, depth + 1, params);
  node->right = grow(d, right_idx, depth + 1, params);
  return node;
}

void accumulate_importance(const TreeNode& node, const Dataset& d,
                           const std::vector<int>& idx, int total,
                           std::array<double, 7>& raw) {
  if (node.is_leaf() || idx.empty()) return;
  const int m = static_cast<int>(idx.size());
  const double parent_gini = gini(label_counts(d, idx), m);
  std::vector<int> left_idx, right_idx;
  for (int i : idx) {
    (d.x[i][node.feature_index] <= node.threshold ? left_idx : right_idx)
        .push_back(i);
  }
  const int nl = static_cast<int>(left_idx.size());
  const int nr = static_cast<int>(right_idx.size());
  double weighted_child = 0.0;
  if (nl > 0)
    weighted_child +=
        (static_cast<double>(nl) / m) * gini(label_counts(d, left_idx), nl);
  if (nr > 0)
    weighted_child +=
        (static_cast<double>(nr) / m) * gini(label_counts(d, right_idx), nr);
  raw[node.feature_index] +=
      (static_cast<double>(m) / total) * (parent_gini - weighted_child);
  accumulate_importance(*node.left, d, left_idx, total, raw);
  accumulate_importance(*node.right, d, right_idx, total, raw);
}

json node_to_json(const TreeNode& node) {
  json j;
  if (node.is_leaf()) {
    j["class_counts"] = json::object();
    for (const auto& [label, count] : node.class_counts)
      j["class_counts"][label] = count;
    j["prediction"] = node.prediction;
  } else {
    j["feature_index"] = node.feature_index;
    j["threshold"] = node.threshold;
    j["left"] = node_to_json(*node.left);
    j["right"] = node_to_json(*node.right);
  }
  return j;
}

std::unique_ptr<TreeNode> node_from_json(const json& j) {
  if (!j.is_object())
    throw FormatError("model file: tree node is not an object");
  auto node = std::make_unique<TreeNode>();
  if (j.contains("feature_index")) {
    if (!j["feature_index"].is_number_integer() || !j.contains("threshold") ||
        !j["threshold"].is_number() || !j.contains("left") ||
        !j.contains("right")) {
      throw FormatError(
          "model file: split node needs feature_index, threshold, left, "
          "right");
    }
    node->feature_index = j["feature_index"].get<int>();
    if (node->feature_index < 0 ||
        node->feature_index >= static_cast<int>(kFeatureNames.size())) {
      throw FormatError("model file: feature_index " +
                        std::to_string(node->feature_index) +
                        " out of range");
    }
    node->threshold = j["threshold"].get<double>();
    node->left = node_from_json(j["left"]);
    node->right = node_from_json(j["right"]);
    return node;
  }
  if (!j.contains("class_counts") || !j["class_counts"].is_object() ||
      j["class_counts"].empty() || !j.contains("prediction") ||
      !j["prediction"].is_string()) {
    throw FormatError(
        "model file: leaf needs non-empty class_counts and a prediction");
  }
  for (const auto& [label, count] : j["class_counts"].items()) {
    if (!count.is_number_integer())
      throw FormatError("model file: class count for '" + label +
                        "' is not an integer");
    node->class_counts[label] = count.get<int>();
  }
  node->prediction = j["prediction"].get<std::string>();
  return node;
}

}  // namespace

TrainedTree fit_tree(const std::vector<FeatureVector>& vectors,
                     const TreeParams& params) {
  if (vectors.size() < 2) {
    throw ContractViolation("fit_tree needs at least 2 vectors, got " +
                            std::to_string(vectors.size()));
  }
  const Dataset d = dataset_from(vectors);
  std::vector<int> idx(vectors.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);

  TrainedTree tree;
  tree.params = params;
  tree.root = grow(d, idx, 0, params);
  tree.importances = gini_importance(tree, vectors);
  return tree;
}

std::string predict(const TrainedTree& tree, const FeatureVector& vector) {
  const auto values = vector.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InputError("document '" + vector.document_id + "': feature '" +
                       kFeatureNames[i] + "' is not finite");
    }
  }
  const TreeNode* node = tree.root.get();
  while (!node->is_leaf()) {
    node = values[node->feature_index] <= node->threshold ? node->left.get()
                                                          : node->right.get();
  }
  return node->prediction;
}

std::array<double, 7> gini_importance(
    const TrainedTree& tree, const std::vector<FeatureVector>& vectors) {
  std::array<double, 7> raw{};
  if (vectors.empty()) return raw;
  const Dataset d = dataset_from(vectors);
  std::vector<int> idx(vectors.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  accumulate_importance(*tree.root, d, idx, static_cast<int>(vectors.size()),
                        raw);
  double total = 0.0;
  for (double v : raw) total += v;
  if (total <= 0.0) return {};  // leaf-only tree, or no effective splits
  for (double& v : raw) v /= total;
  return raw;
}

TrainedTree loocv(const std::vector<FeatureVector>& vectors,
                  const GridSpec& grid) {
  if (vectors.size() < 3) {
    throw ContractViolation(
        "leave-one-out validation needs at least 3 vectors, got " +
        std::to_string(vectors.size()));
  }
  if (grid.max_depth.empty() || grid.min_samples_leaf.empty() ||
      grid.min_samples_split.empty()) {
    throw ContractViolation("grid search over an empty candidate list");
  }
  dataset_from(vectors);  // reject unlabeled vectors before any fold runs

  const int n = static_cast<int>(vectors.size());
  bool have_best = false;
  TreeParams best_params;
  int best_correct = -1;
  for (int md : grid.max_depth) {
    for (int msl : grid.min_samples_leaf) {
      for (int mss : grid.min_samples_split) {
        const TreeParams params{md, msl, mss};
        int correct = 0;
        for (int held_out = 0; held_out < n; ++held_out) {
          std::vector<FeatureVector> fold;
          fold.reserve(vectors.size() - 1);
          for (int i = 0; i < n; ++i) {
            if (i != held_out) fold.push_back(vectors[i]);
          }
          const TrainedTree tree = fit_tree(fold, params);
          if (predict(tree, vectors[held_out]) == *vectors[held_out].label)
            ++correct;
        }
        bool better = correct > best_correct;
        if (have_best && correct == best_correct) {
          if (params.max_depth != best_params.max_depth) {
            better = params.max_depth < best_params.max_depth;
          } else if (params.min_samples_leaf != best_params.min_samples_leaf) {
            better = params.min_samples_leaf > best_params.min_samples_leaf;
          } else {
            better = params.min_samples_split < best_params.min_samples_split;
          }
        }
        if (better) {
          have_best = true;
          best_params = params;
          best_correct = correct;
        }
      }
    }
  }

  TrainedTree tree = fit_tree(vectors, best_params);  // attaches importances
  tree.loocv_accuracy = static_cast<double>(best_correct) / n;
  return tree;
}

std::string save_model(const TrainedTree& tree) {
  json out;
  out["feature_names"] = kFeatureNames;
  out["hyperparameters"] = {{"max_depth", tree.params.max_depth},
                            {"min_samples_leaf", tree.params.min_samples_leaf},
                            {"min_samples_split",
                             tree.params.min_samples_split}};
  out["importances"] = tree.importances;
  out["loocv_accuracy"] = tree.loocv_accuracy;
  out["root"] = node_to_json(*tree.root);
  return out.dump(2) + "\n";
}

TrainedTree load_model(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("model file: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("model file: not a JSON object");

  if (!j.contains("feature_names") || !j["feature_names"].is_array() ||
      j["feature_names"].size() != kFeatureNames.size()) {
    throw FormatError("model file: feature_names must list " +
                      std::to_string(kFeatureNames.size()) + " names");
  }
  for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
    if (!j["feature_names"][i].is_string() ||
        j["feature_names"][i].get<std::string>() != kFeatureNames[i]) {
      throw FormatError("model file: feature_names[" + std::to_string(i) +
                        "] must be '" + kFeatureNames[i] + "'");
    }
  }

  TrainedTree tree;
  if (!j.contains("hyperparameters") || !j["hyperparameters"].is_object())
    throw FormatError("model file: missing hyperparameters object");
  const auto& hp = j["hyperparameters"];
  for (const char* key : {"max_depth", "min_samples_leaf",
                          "min_samples_split"}) {
    if (!hp.contains(key) || !hp[key].is_number_integer())
      throw FormatError(std::string("model file: hyperparameter '") + key +
                        "' missing or not an integer");
  }
  tree.params.max_depth = hp["max_depth"].get<int>();
  tree.params.min_samples_leaf = hp["min_samples_leaf"].get<int>();
  tree.params.min_samples_split = hp["min_samples_split"].get<int>();

  if (!j.contains("importances") || !j["importances"].is_array() ||
      j["importances"].size() != kFeatureNames.size()) {
    throw FormatError("model file: importances must list " +
                      std::to_string(kFeatureNames.size()) + " values");
  }
  for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
    if (!j["importances"][i].is_number())
      throw FormatError("model file: importances[" + std::to_string(i) +
                        "] is not a number");
    tree.importances[i] = j["importances"][i].get<double>();
  }

  if (!j.contains("loocv_accuracy") || !j["loocv_accuracy"].is_number())
    throw FormatError("model file: missing numeric loocv_accuracy");
  tree.loocv_accuracy = j["loocv_accuracy"].get<double>();

  if (!j.contains("root"))
    throw FormatError("model file: missing root node");
  tree.root = node_from_json(j["root"]);
  return tree;
}

}  // namespace cohgraph
