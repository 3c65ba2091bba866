// Sentence-pair graphs.
//
// For a sentence pair (S_i, S_j) the phrases of S_i and the phrases of S_j
// that do not already occur in S_i form the two sides of a complete
// bipartite graph, with edges in both directions carrying mirrored weights.
// Two such graphs are built per pair — one weighted by embedding cosine,
// one by term overlap — and each is reduced to the mean weighted outdegree
// over all of its vertices.

#ifndef COHGRAPH_CONSISTENCY_GRAPH_HPP
#define COHGRAPH_CONSISTENCY_GRAPH_HPP

#include <utility>
#include <vector>

#include "cohgraph/embeddings.hpp"
#include "cohgraph/phrases.hpp"

namespace cohgraph {

// One deduplicated phrase: the first occurrence stands for the group, and
// repeat_count remembers how often the term multiset occurred in its
// sentence. Repeats weaken every edge weight the node takes part in.
struct PhraseNode {
  Phrase phrase;
  int repeat_count = 1;
  PhraseVector vector;
};

// weights[a][b] is the weight of both directed edges between side_a[a] and
// side_b[b]; the matrix is stored once since the directions mirror.
struct ConsistencyGraph {
  std::vector<PhraseNode> side_a;
  std::vector<PhraseNode> side_b;
  std::vector<std::vector<double>> weights;
};

struct PairGraphs {
  ConsistencyGraph sem;
  ConsistencyGraph coh;
};

// Mean weighted outdegrees of the two pair graphs. A pair where either side
// ends up empty (no phrases, or S_j fully contained in S_i) carries no
// signal and is flagged degenerate with both values 0.
struct PairSimilarity {
  double sem = 0.0;
  double coh = 0.0;
  bool degenerate = false;
};

// Side A = unique phrases of S_i; side B = unique phrases of S_j after
// removing every phrase whose term multiset also occurs in S_i. Counts are
// occurrences within the owning sentence; nodes keep first-appearance order.
// Vectors are left empty — build_pair_graphs fills them.
std::pair<std::vector<PhraseNode>, std::vector<PhraseNode>> build_sides(
    const std::vector<Phrase>& phrases_i, const std::vector<Phrase>& phrases_j);

// Embedding-similarity edge weight: cosine of the phrase vectors, diluted by
// how often either phrase repeats in its sentence.
double semantic_weight(const PhraseNode& a, const PhraseNode& b);

// Term-overlap edge weight: |shared unique terms| / |all unique terms|,
// diluted by the repeat counts. An anaphoric coreference link counts as full
// overlap; a cataphoric one (forward-pointing pronoun) earns no credit.
double cohesion_weight(const PhraseNode& a, const PhraseNode& b,
                       CorefRelation coref);

// Builds both graphs for a sentence pair. The document supplies coreference
// chains and part-of-speech tags for the overlap weights.
PairGraphs build_pair_graphs(const std::vector<Phrase>& phrases_i,
                             const std::vector<Phrase>& phrases_j,
                             const EmbeddingStore& store, const Document& doc);

PairSimilarity pair_similarity(const ConsistencyGraph& graph_sem,
                               const ConsistencyGraph& graph_coh);

// JSON rendering of a pair's graphs (nodes, counts, weight matrices) for
// the --dump-pair-graphs diagnostic.
std::string pair_graphs_json(const PairGraphs& graphs);

}  // namespace cohgraph

#endif  // COHGRAPH_CONSISTENCY_GRAPH_HPP
