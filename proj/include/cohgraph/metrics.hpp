// Document-level metrics.
//
// Three graph metrics come from sentence-pair similarities arranged as a
// complete directed graph over sentences, with edges damped by sentence
// distance: FOC (weakest adjacent link), SemCoh and Cohesion (edge-weight
// totals per vertex). Four lexical metrics are computed directly from the
// tokens: content-word ratio, phrase-term coverage, moving-average
// type-token ratio, and Brunet's vocabulary-richness index. Together these
// form the fixed seven-slot feature vector used by the classifier.

#ifndef COHGRAPH_METRICS_HPP
#define COHGRAPH_METRICS_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "cohgraph/consistency_graph.hpp"
#include "cohgraph/corpus.hpp"
#include "cohgraph/embeddings.hpp"

namespace cohgraph {

struct MetricsConfig {
  int mattr_window = 50;
  // Token POS tags that count as content words.
  std::set<std::string> content_pos = {"NOUN", "PROPN", "VERB",
                                       "ADJ",  "ADV",   "PRON"};
};

// Complete directed graph over sentences: one edge per ordered pair (i,j),
// i != j, weighted by the pair similarity divided by |i - j|.
struct DocumentGraph {
  int vertex_count = 0;
  std::map<std::pair<int, int>, double> sem_weights;
  std::map<std::pair<int, int>, double> coh_weights;
};

inline constexpr std::array<const char*, 7> kFeatureNames = {
    "foc", "sem_coh", "cohesion", "func_w", "phrase_w", "mattr", "bi"};

struct FeatureVector {
  std::string document_id;
  std::optional<std::string> label;
  double foc = 0.0;
  double sem_coh = 0.0;
  double cohesion = 0.0;
  double func_w = 0.0;
  double phrase_w = 0.0;
  double mattr = 0.0;
  double bi = 0.0;

  // The metrics in kFeatureNames order.
  std::array<double, 7> values() const;
};

// Counts surfaced in the diagnostics report; none of them are features.
struct DocumentDiagnostics {
  int total_pairs = 0;       // ordered sentence pairs
  int degenerate_pairs = 0;  // pairs with an empty graph side
  int phrase_terms = 0;      // term occurrences across all phrases
  int oov_phrase_terms = 0;  // of those, how many missed the vocabulary
  int cataphora_count = 0;   // forward-pointing pronoun mentions
};

DocumentGraph build_document_graph(const Document& document,
                                   const EmbeddingStore& store);

// Edge-weight total divided by the number of vertices. (Not the per-edge
// mean: a two-sentence document with both edges at w scores w, not w/2.)
double sem_coh(const DocumentGraph& graph);
double cohesion(const DocumentGraph& graph);

// Minimum forward pair similarity over adjacent sentences; 0 for documents
// with fewer than two sentences. Degenerate adjacent pairs contribute 0.
double foc(const Document& document, const EmbeddingStore& store);

// Fraction of tokens with a content part of speech.
double func_w(const Document& document, const MetricsConfig& config = {});

// Distinct normalized phrase terms over total token count.
double phrase_w(const Document& document);

// Mean type-token ratio over all sliding windows of the given length; plain
// TTR when the document is shorter than one window.
double mattr(const Document& document, int window);

// N^(V^-0.165) over total tokens N and distinct normalized terms V. Richer
// vocabulary gives a lower value.
double brunet_index(const Document& document);

// All seven metrics in one pass; phrase extraction and pair similarities are
// computed once and shared. Optionally fills the diagnostics counters.
FeatureVector featurize(const Document& document, const EmbeddingStore& store,
                        const MetricsConfig& config = {},
                        DocumentDiagnostics* diagnostics = nullptr);

}  // namespace cohgraph

#endif  // COHGRAPH_METRICS_HPP
