// Corpus-level orchestration shared by the CLI and the tests.
//
// Runs featurization across a corpus (optionally on several threads, with
// output fixed to input order), renders the sidecar diagnostics report and
// the pair-graph debug dump, and produces the prediction/importance output
// files. Everything here is deterministic: the same inputs and flags give
// byte-identical files regardless of thread count.

#ifndef COHGRAPH_PIPELINE_HPP
#define COHGRAPH_PIPELINE_HPP

#include <string>
#include <vector>

#include "cohgraph/classifier.hpp"
#include "cohgraph/corpus.hpp"
#include "cohgraph/embeddings.hpp"
#include "cohgraph/metrics.hpp"

namespace cohgraph {

// Whole-file read/write; failures surface as input errors naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

struct DocumentReport {
  std::string id;
  DocumentDiagnostics diagnostics;
};

struct FeaturizeResult {
  std::vector<FeatureVector> vectors;     // successful documents, input order
  std::vector<DocumentReport> reports;    // parallel to vectors
  std::vector<std::string> errors;        // skipped documents (keep_going)
};

// Featurizes every document. With keep_going, documents that fail input
// validation are skipped and their errors collected; otherwise the first
// failing document (by input order, independent of thread scheduling)
// aborts the run. jobs < 1 is a programming error.
FeaturizeResult featurize_corpus(const std::vector<Document>& documents,
                                 const EmbeddingStore& store,
                                 const MetricsConfig& config, int jobs,
                                 bool keep_going);

// JSON sidecar report: per-document pair/coverage/cataphora counters plus
// the collected errors.
std::string diagnostics_report_json(const FeaturizeResult& result);

// JSON dump of every ordered sentence pair's graphs for every document.
std::string corpus_pair_graphs_json(const std::vector<Document>& documents,
                                    const EmbeddingStore& store);

// `id,predicted_label` rows in input order.
std::string predictions_csv(const TrainedTree& tree,
                            const std::vector<FeatureVector>& vectors);

// `feature,importance` rows, descending by importance (ties keep the fixed
// feature order). Values use the 9-significant-digit rendering.
std::string importances_csv(const std::array<double, 7>& importances);

// Self-contained SVG bar chart of the seven importances, one bar per
// feature in fixed order, annotated with names and values.
std::string importances_svg(const std::array<double, 7>& importances);

// Plain-text training report: LOOCV accuracy, then importances descending.
std::string training_report(const TrainedTree& tree);

}  // namespace cohgraph

#endif  // COHGRAPH_PIPELINE_HPP
