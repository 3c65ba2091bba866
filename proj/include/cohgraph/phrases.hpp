// Phrase extraction and normalization.
//
// A phrase is the flat multiset of normalized terms taken from one
// (object, relation, subject) token-index tuple, kept in sentence order.
// Sentences that carry no pre-extracted tuples go through a deterministic
// dependency-rule fallback: every verb with both a subject dependent and an
// object/oblique dependent yields one tuple per (subject, object) pair,
// with adpositions and particles lifted into the relation slot.

#ifndef COHGRAPH_PHRASES_HPP
#define COHGRAPH_PHRASES_HPP

#include <string>
#include <vector>

#include "cohgraph/corpus.hpp"

namespace cohgraph {

// One extracted phrase with enough provenance to test whether a coreference
// mention falls inside it.
struct Phrase {
  std::vector<std::string> terms;  // normalized, in token-index order
  std::vector<int> token_indices;  // source token indices, ascending
  int sentence_index = 0;

  // Canonical identity key: the terms sorted and joined. Two phrases are
  // "the same phrase" exactly when their term multisets are equal.
  std::string multiset_key() const;
};

bool same_term_multiset(const Phrase& a, const Phrase& b);

// Comparison form of a token: lowercased lemma, or lowercased surface text
// when no lemma is annotated. Lowercasing is ASCII-only.
std::string normalize_term(const Token& token);

// Flattens a tuple into a phrase: object + relation + subject indices are
// pooled, sorted ascending (duplicates kept), and normalized.
Phrase tuple_to_phrase(const Sentence& sentence, const PhraseTuple& tuple);

// Dependency-rule extractor for sentences without pre-extracted tuples.
// Requires head/deprel annotations on every token; throws InputError when
// they are missing. Output is ordered by (verb, subject, object) index.
std::vector<PhraseTuple> extract_phrases_fallback(const Sentence& sentence);

// Phrases of one sentence: the annotated tuples when present (an empty list
// means "no phrases", not "unannotated"), the fallback extractor otherwise.
std::vector<Phrase> sentence_phrases(const Sentence& sentence);

enum class CorefRelation { None, Anaphoric, Cataphoric };

// How two phrases are linked by the document's coreference chains.
//
// A chain links the phrases when it has one mention inside each (span
// tokens contained in the phrase, same sentence; the two mentions must be
// distinct). A linking is cataphoric when either linking mention is a
// pronoun that precedes its chain's first non-pronoun mention in document
// order; otherwise it is anaphoric. Anaphoric wins when several chains
// disagree, since only it strengthens the cohesion weight.
CorefRelation coreferent(const Phrase& a, const Phrase& b,
                         const Document& doc);

// Diagnostic: mentions that are pronouns placed before their chain's first
// non-pronoun mention (forward-pointing pronouns).
int count_cataphoric_mentions(const Document& doc);

}  // namespace cohgraph

#endif  // COHGRAPH_PHRASES_HPP
