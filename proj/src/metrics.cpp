#include "cohgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "cohgraph/errors.hpp"
#include "cohgraph/phrases.hpp"

namespace cohgraph {

namespace {

void require_tokens(const Document& document) {
  if (document.token_count() == 0) {
    throw InputError("document '" + document.id +
                     "' has no tokens; lexical metrics are undefined");
  }
}

// Normalized form of every token in reading order.
std::vector<std::string> document_terms(const Document& document) {
  std::vector<std::string> terms;
  for (const auto& sent : document.sentences)
    for (const auto& tok : sent.tokens) terms.push_back(normalize_term(tok));
  return terms;
}

std::vector<std::vector<Phrase>> phrases_per_sentence(const Document& doc) {
  std::vector<std::vector<Phrase>> out;
  out.reserve(doc.sentences.size());
  for (const auto& sent : doc.sentences) out.push_back(sentence_phrases(sent));
  return out;
}

// Pair similarities for every ordered sentence pair, computed once.
std::map<std::pair<int, int>, PairSimilarity> pair_matrix(
    const Document& doc, const std::vector<std::vector<Phrase>>& phrases,
    const EmbeddingStore& store, DocumentDiagnostics* diagnostics) {
  std::map<std::pair<int, int>, PairSimilarity> sims;
  const int n = static_cast<int>(doc.sentences.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const PairGraphs graphs =
          build_pair_graphs(phrases[i], phrases[j], store, doc);
      const PairSimilarity sim = pair_similarity(graphs.sem, graphs.coh);
      if (diagnostics) {
        ++diagnostics->total_pairs;
        if (sim.degenerate) ++diagnostics->degenerate_pairs;
      }
      sims.emplace(std::make_pair(i, j), sim);
    }
  }
  return sims;
}

DocumentGraph graph_from_pairs(
    int vertex_count,
    const std::map<std::pair<int, int>, PairSimilarity>& sims) {
  DocumentGraph graph;
  graph.vertex_count = vertex_count;
  for (const auto& [pair, sim] : sims) {
    const double distance = std::abs(pair.first - pair.second);
    graph.sem_weights[pair] = sim.sem / distance;
    graph.coh_weights[pair] = sim.coh / distance;
  }
  return graph;
}

double foc_from_pairs(
    int vertex_count,
    const std::map<std::pair<int, int>, PairSimilarity>& sims) {
  if (vertex_count < 2) return 0.0;
  double weakest = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < vertex_count; ++i) {
    weakest = std::min(weakest, sims.at({i, i + 1}).sem);
  }
  return weakest;
}

double edge_total_per_vertex(const std::map<std::pair<int, int>, double>& edges,
                             int vertex_count) {
  if (vertex_count < 2) return 0.0;
  double total = 0.0;
  for (const auto& [pair, w] : edges) total += w;
  return total / vertex_count;
}

double mattr_over_terms(const std::vector<std::string>& terms, int window) {
  if (window < 1)
    throw ContractViolation("mattr window must be positive, got " +
                            std::to_string(window));
  const int n = static_cast<int>(terms.size());
  const int w = std::min(window, n);
  std::map<std::string, int> counts;
  int distinct = 0;
  for (int i = 0; i < w; ++i) {
    if (++counts[terms[i]] == 1) ++distinct;
  }
  double total_ttr = static_cast<double>(distinct) / w;
  int windows = 1;
  for (int start = 1; start + w <= n; ++start) {
    if (--counts[terms[start - 1]] == 0) --distinct;
    if (++counts[terms[start + w - 1]] == 1) ++distinct;
    total_ttr += static_cast<double>(distinct) / w;
    ++windows;
  }
  return total_ttr / windows;
}

}  // namespace

std::array<double, 7> FeatureVector::values() const {
  return {foc, sem_coh, cohesion, func_w, phrase_w, mattr, bi};
}

DocumentGraph build_document_graph(const Document& document,
                                   const EmbeddingStore& store) {
  const auto phrases = phrases_per_sentence(document);
  const auto sims = pair_matrix(document, phrases, store, nullptr);
  return graph_from_pairs(static_cast<int>(document.sentences.size()), sims);
}

double sem_coh(const DocumentGraph& graph) {
  return edge_total_per_vertex(graph.sem_weights, graph.vertex_count);
}

double cohesion(const DocumentGraph& graph) {
  return edge_total_per_vertex(graph.coh_weights, graph.vertex_count);
}

double foc(const Document& document, const EmbeddingStore& store) {
  const int n = static_cast<int>(document.sentences.size());
  if (n < 2) return 0.0;
  const auto phrases = phrases_per_sentence(document);
  double weakest = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < n; ++i) {
    const PairGraphs graphs =
        build_pair_graphs(phrases[i], phrases[i + 1], store, document);
    weakest = std::min(weakest, pair_similarity(graphs.sem, graphs.coh).sem);
  }
  return weakest;
}

double func_w(const Document& document, const MetricsConfig& config) {
  require_tokens(document);
  int content = 0;
  for (const auto& sent : document.sentences)
    for (const auto& tok : sent.tokens)
      if (config.content_pos.count(tok.pos)) ++content;
  return static_cast<double>(content) / document.token_count();
}

double phrase_w(const Document& document) {
  require_tokens(document);
  std::set<std::string> phrase_terms;
  for (const auto& sent : document.sentences) {
    for (const auto& phrase : sentence_phrases(sent)) {
      phrase_terms.insert(phrase.terms.begin(), phrase.terms.end());
    }
  }
  return static_cast<double>(phrase_terms.size()) / document.token_count();
}

double mattr(const Document& document, int window) {
  require_tokens(document);
  return mattr_over_terms(document_terms(document), window);
}

double brunet_index(const Document& document) {
  require_tokens(document);
  const auto terms = document_terms(document);
  const std::set<std::string> distinct(terms.begin(), terms.end());
  const double n = static_cast<double>(terms.size());
  const double v = static_cast<double>(distinct.size());
  return std::pow(n, std::pow(v, -0.165));
}

FeatureVector featurize(const Document& document, const EmbeddingStore& store,
                        const MetricsConfig& config,
                        DocumentDiagnostics* diagnostics) {
  require_tokens(document);
  FeatureVector fv;
  fv.document_id = document.id;
  fv.label = document.label;

  const auto phrases = phrases_per_sentence(document);
  const int n = static_cast<int>(document.sentences.size());
  const auto sims = pair_matrix(document, phrases, store, diagnostics);
  const DocumentGraph graph = graph_from_pairs(n, sims);

  fv.foc = foc_from_pairs(n, sims);
  fv.sem_coh = sem_coh(graph);
  fv.cohesion = cohesion(graph);
  fv.func_w = func_w(document, config);

  std::set<std::string> distinct_phrase_terms;
  for (int i = 0; i < n; ++i) {
    for (const auto& phrase : phrases[i]) {
      distinct_phrase_terms.insert(phrase.terms.begin(), phrase.terms.end());
      if (diagnostics) {
        for (const auto& term : phrase.terms) {
          ++diagnostics->phrase_terms;
          if (!store.lookup(term)) ++diagnostics->oov_phrase_terms;
        }
      }
    }
  }
  fv.phrase_w = static_cast<double>(distinct_phrase_terms.size()) /
                document.token_count();
  fv.mattr = mattr(document, config.mattr_window);
  fv.bi = brunet_index(document);
  if (diagnostics)
    diagnostics->cataphora_count = count_cataphoric_mentions(document);
  return fv;
}

}  // namespace cohgraph
