// Feature-file serialization.
//
// Feature vectors travel between the featurize and train/predict commands
// as CSV (fixed header `id,label,foc,sem_coh,cohesion,func_w,phrase_w,
// mattr,bi`) or as JSON lines with the same fields. Reals are printed with
// 9 significant digits so repeated runs produce byte-identical files.

#ifndef COHGRAPH_FEATURE_IO_HPP
#define COHGRAPH_FEATURE_IO_HPP

#include <string>
#include <vector>

#include "cohgraph/metrics.hpp"

namespace cohgraph {

// %.9g rendering used for every real in CSV output.
std::string format_real(double value);

std::string write_features_csv(const std::vector<FeatureVector>& vectors);
std::vector<FeatureVector> parse_features_csv(const std::string& bytes);

std::string write_features_jsonl(const std::vector<FeatureVector>& vectors);
std::vector<FeatureVector> parse_features_jsonl(const std::string& bytes);

}  // namespace cohgraph

#endif  // COHGRAPH_FEATURE_IO_HPP
