#pragma once

// Annotated-document data model and the JSON interchange format.
//
// A corpus file is a single UTF-8 JSON document:
//
//   {"documents":[{"id":str,"label":str|null,
//     "sentences":[{"tokens":[{"text":str,"lemma":str|null,"pos":str,
//                              "head":int|null,"deprel":str|null}],
//                   "tuples":[{"object":[int],"relation":[int],
//                              "subject":[int]}]|null}],
//     "coref_chains":[[{"sentence":int,"start":int,"end":int}]]}]}
//
// Token indices are positional; "head" of -1 marks the dependency root.
// A null "tuples" entry means no extraction was run upstream and the
// fallback extractor applies at analysis time; an empty list means the
// sentence genuinely has no phrases.

#include <optional>
#include <string>
#include <vector>

namespace cohgraph {

struct Token {
  int index = 0;  // position within the sentence
  std::string text;
  std::optional<std::string> lemma;
  std::string pos;                   // universal POS tag
  std::optional<int> head;           // -1 = root, absent = unannotated
  std::optional<std::string> deprel;
};

// Open-IE style (object, relation, subject) triple over token indices.
struct PhraseTuple {
  std::vector<int> object;
  std::vector<int> relation;
  std::vector<int> subject;
};

struct Sentence {
  int index = 0;  // position within the document
  std::vector<Token> tokens;
  std::optional<std::vector<PhraseTuple>> tuples;
};

// One occurrence of a coreferent entity: token span [start, end).
struct Mention {
  int sentence = 0;
  int start = 0;
  int end = 0;
};

using CorefChain = std::vector<Mention>;

struct Document {
  std::string id;
  std::optional<std::string> label;
  std::vector<Sentence> sentences;
  std::vector<CorefChain> coref_chains;

  int token_count() const;
};

// Parses and validates a corpus file. Malformed JSON raises ParseError
// with line/offset; an invariant violation raises ValidationError naming
// the document and field.
std::vector<Document> parse_corpus(const std::string& bytes);

// Lenient variant for --keep-going runs: well-formed JSON is required,
// but per-document validation failures are collected instead of thrown.
struct CorpusLoad {
  std::vector<Document> documents;          // the valid ones, input order
  std::vector<std::string> errors;          // one message per rejected doc
};
CorpusLoad parse_corpus_lenient(const std::string& bytes);

// Canonical serialization; parse_corpus(serialize_corpus(docs)) == docs
// and the bytes are stable across runs.
std::string serialize_corpus(const std::vector<Document>& documents);

// Validates one document against all model invariants.
// Returns an error message, or nullopt when valid.
std::optional<std::string> validate_document(const Document& doc);

}  // namespace cohgraph
