// Word-embedding store and phrase vectors.
//
// Loads a word2vec model (text or binary layout), represents a phrase as
// the arithmetic mean of its in-vocabulary term vectors, and provides the
// cosine similarity those vectors are compared with. Lookup is exact-match
// first with a lowercased fallback, since pre-trained vocabularies are
// case-sensitive while transcript casing is noisy.

#ifndef COHGRAPH_EMBEDDINGS_HPP
#define COHGRAPH_EMBEDDINGS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "cohgraph/phrases.hpp"

namespace cohgraph {

enum class EmbeddingFormat { Text, Binary };

class EmbeddingStore {
 public:
  // Parses word2vec content: header "count dim", then one entry per term.
  // Text entries are whitespace-separated floats; binary entries are the
  // term, one space, then dim little-endian float32 values.
  static EmbeddingStore load(const std::string& bytes, EmbeddingFormat format);

  int dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

  // Vector for a term, trying the exact spelling first and the lowercased
  // spelling second. Returns nullptr when both miss.
  const std::vector<double>* lookup(const std::string& term) const;

  void insert(const std::string& term, std::vector<double> values);

 private:
  int dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Mean of the in-vocabulary term vectors of a phrase, with the fraction of
// terms that were found. Terms repeat in the mean as often as they repeat
// in the phrase. An all-out-of-vocabulary phrase gets the zero vector and
// coverage 0.
struct PhraseVector {
  std::vector<double> values;
  double coverage = 0.0;
};

PhraseVector phrase_vector(const Phrase& phrase, const EmbeddingStore& store);

// Cosine similarity; 0 when either vector has zero norm. Vectors of unequal
// length indicate a programming error, not bad input.
double cosine(const std::vector<double>& u, const std::vector<double>& v);

}  // namespace cohgraph

#endif  // COHGRAPH_EMBEDDINGS_HPP
