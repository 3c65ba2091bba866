#include "cohgraph/consistency_graph.hpp"

#include <map>
#include <set>
#include <string>

#include "json.hpp"

namespace cohgraph {

namespace {

// Deduplicate by term multiset, keeping first-appearance order. The first
// copy becomes the representative; repeat_count counts all copies.
std::vector<PhraseNode> unique_nodes(const std::vector<Phrase>& phrases) {
  std::vector<PhraseNode> nodes;
  std::map<std::string, std::size_t> position;
  for (const auto& phrase : phrases) {
    const std::string key = phrase.multiset_key();
    auto hit = position.find(key);
    if (hit == position.end()) {
      position.emplace(key, nodes.size());
      nodes.push_back(PhraseNode{phrase, 1, {}});
    } else {
      ++nodes[hit->second].repeat_count;
    }
  }
  return nodes;
}

std::set<std::string> unique_terms(const Phrase& phrase) {
  return {phrase.terms.begin(), phrase.terms.end()};
}

double mean_outdegree(const ConsistencyGraph& graph) {
  double sum = 0.0;
  for (const auto& row : graph.weights)
    for (double w : row) sum += w;
  const auto vertices = graph.side_a.size() + graph.side_b.size();
  // Every cross-pair weight appears once on each vertex it touches, so the
  // outdegree total is twice the weight total.
  return 2.0 * sum / static_cast<double>(vertices);
}

}  // namespace

std::pair<std::vector<PhraseNode>, std::vector<PhraseNode>> build_sides(
    const std::vector<Phrase>& phrases_i,
    const std::vector<Phrase>& phrases_j) {
  std::vector<PhraseNode> side_a = unique_nodes(phrases_i);

  std::set<std::string> seen_in_i;
  for (const auto& phrase : phrases_i) seen_in_i.insert(phrase.multiset_key());

  // Relative complement: every copy of a phrase that also occurs in S_i is
  // removed, so the surviving counts are the plain S_j occurrence counts.
  std::vector<Phrase> complement;
  for (const auto& phrase : phrases_j) {
    if (!seen_in_i.count(phrase.multiset_key())) complement.push_back(phrase);
  }
  return {std::move(side_a), unique_nodes(complement)};
}

double semantic_weight(const PhraseNode& a, const PhraseNode& b) {
  return cosine(a.vector.values, b.vector.values) /
         (static_cast<double>(a.repeat_count) * b.repeat_count);
}

double cohesion_weight(const PhraseNode& a, const PhraseNode& b,
                       CorefRelation coref) {
  const std::set<std::string> ta = unique_terms(a.phrase);
  const std::set<std::string> tb = unique_terms(b.phrase);
  std::size_t common = 0;
  for (const auto& t : ta) common += tb.count(t);
  const std::size_t unique = ta.size() + tb.size() - common;
  if (unique == 0) return 0.0;
  if (coref == CorefRelation::Anaphoric) common = unique;
  return static_cast<double>(common) /
         (static_cast<double>(unique) * a.repeat_count * b.repeat_count);
}

PairGraphs build_pair_graphs(const std::vector<Phrase>& phrases_i,
                             const std::vector<Phrase>& phrases_j,
                             const EmbeddingStore& store,
                             const Document& doc) {
  auto [side_a, side_b] = build_sides(phrases_i, phrases_j);
  for (auto& node : side_a) node.vector = phrase_vector(node.phrase, store);
  for (auto& node : side_b) node.vector = phrase_vector(node.phrase, store);

  PairGraphs graphs;
  graphs.sem.side_a = side_a;
  graphs.sem.side_b = side_b;
  graphs.coh.side_a = side_a;
  graphs.coh.side_b = side_b;
  graphs.sem.weights.assign(side_a.size(),
                            std::vector<double>(side_b.size(), 0.0));
  graphs.coh.weights = graphs.sem.weights;
  for (std::size_t ai = 0; ai < side_a.size(); ++ai) {
    for (std::size_t bi = 0; bi < side_b.size(); ++bi) {
      const auto& a = side_a[ai];
      const auto& b = side_b[bi];
      graphs.sem.weights[ai][bi] = semantic_weight(a, b);
      graphs.coh.weights[ai][bi] =
          cohesion_weight(a, b, coreferent(a.phrase, b.phrase, doc));
    }
  }
  return graphs;
}

PairSimilarity pair_similarity(const ConsistencyGraph& graph_sem,
                               const ConsistencyGraph& graph_coh) {
  PairSimilarity result;
  if (graph_sem.side_a.empty() || graph_sem.side_b.empty()) {
    result.degenerate = true;
    return result;
  }
  result.sem = mean_outdegree(graph_sem);
  result.coh = mean_outdegree(graph_coh);
  return result;
}

std::string pair_graphs_json(const PairGraphs& graphs) {
  using nlohmann::json;
  auto side_json = [](const std::vector<PhraseNode>& side) {
    json arr = json::array();
    for (const auto& node : side) {
      json jn;
      jn["terms"] = node.phrase.terms;
      jn["sentence"] = node.phrase.sentence_index;
      jn["token_indices"] = node.phrase.token_indices;
      jn["repeat_count"] = node.repeat_count;
      jn["coverage"] = node.vector.coverage;
      arr.push_back(std::move(jn));
    }
    return arr;
  };
  json out;
  out["side_a"] = side_json(graphs.sem.side_a);
  out["side_b"] = side_json(graphs.sem.side_b);
  out["sem_weights"] = graphs.sem.weights;
  out["coh_weights"] = graphs.coh.weights;
  return out.dump();
}

}  // namespace cohgraph
