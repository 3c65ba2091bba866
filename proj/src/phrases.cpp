#include "cohgraph/phrases.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cohgraph/errors.hpp"

namespace cohgraph {

namespace {

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Dependency relation without its subtype, e.g. "nsubj:pass" -> "nsubj".
std::string deprel_base(const std::string& deprel) {
  auto colon = deprel.find(':');
  return colon == std::string::npos ? deprel : deprel.substr(0, colon);
}

bool is_subject_relation(const std::string& deprel) {
  const std::string base = deprel_base(deprel);
  return base == "nsubj" || base == "csubj";
}

bool is_object_relation(const std::string& deprel) {
  const std::string base = deprel_base(deprel);
  return base == "obj" || base == "iobj" || base == "obl";
}

bool is_adposition_relation(const std::string& deprel) {
  const std::string base = deprel_base(deprel);
  return base == "case" || base == "mark";
}

bool is_particle_relation(const std::string& deprel) {
  return deprel == "compound:prt" || deprel_base(deprel) == "prt";
}

// All token indices reachable from `root` through head links, root included.
// A visited set guards against accidental cycles in the annotations.
std::vector<int> subtree_indices(const Sentence& sentence, int root) {
  const int n = static_cast<int>(sentence.tokens.size());
  std::vector<bool> in_subtree(n, false);
  std::vector<int> stack{root};
  in_subtree[root] = true;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (const auto& tok : sentence.tokens) {
      if (tok.head && *tok.head == cur && !in_subtree[tok.index]) {
        in_subtree[tok.index] = true;
        stack.push_back(tok.index);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (in_subtree[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> direct_children(const Sentence& sentence, int head) {
  std::vector<int> out;
  for (const auto& tok : sentence.tokens) {
    if (tok.head && *tok.head == head) out.push_back(tok.index);
  }
  return out;
}

bool mention_inside(const Mention& m, const Phrase& p) {
  if (m.sentence != p.sentence_index) return false;
  for (int t = m.start; t < m.end; ++t) {
    if (!std::binary_search(p.token_indices.begin(), p.token_indices.end(), t))
      return false;
  }
  return true;
}

bool is_pronoun_mention(const Mention& m, const Document& doc) {
  const auto& tokens = doc.sentences[m.sentence].tokens;
  for (int t = m.start; t < m.end; ++t) {
    if (tokens[t].pos != "PRON") return false;
  }
  return true;
}

bool mention_precedes(const Mention& a, const Mention& b) {
  if (a.sentence != b.sentence) return a.sentence < b.sentence;
  return a.start < b.start;
}

// Forward-pointing pronoun: a pronominal mention placed before the chain's
// first non-pronoun mention. Chains with no non-pronoun mention have no
// antecedent to point at, so none of their mentions qualify.
bool is_cataphoric_mention(const Mention& m, const CorefChain& chain,
                           const Document& doc) {
  if (!is_pronoun_mention(m, doc)) return false;
  for (const auto& other : chain) {
    if (!is_pronoun_mention(other, doc)) {
      return mention_precedes(m, other);
    }
  }
  return false;
}

}  // namespace

std::string Phrase::multiset_key() const {
  std::vector<std::string> sorted = terms;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& t : sorted) {
    key += t;
    key += '\x1f';
  }
  return key;
}

bool same_term_multiset(const Phrase& a, const Phrase& b) {
  return a.terms.size() == b.terms.size() && a.multiset_key() == b.multiset_key();
}

std::string normalize_term(const Token& token) {
  return ascii_lower(token.lemma ? *token.lemma : token.text);
}

Phrase tuple_to_phrase(const Sentence& sentence, const PhraseTuple& tuple) {
  Phrase phrase;
  phrase.sentence_index = sentence.index;
  phrase.token_indices.reserve(tuple.object.size() + tuple.relation.size() +
                               tuple.subject.size());
  phrase.token_indices.insert(phrase.token_indices.end(), tuple.object.begin(),
                              tuple.object.end());
  phrase.token_indices.insert(phrase.token_indices.end(),
                              tuple.relation.begin(), tuple.relation.end());
  phrase.token_indices.insert(phrase.token_indices.end(),
                              tuple.subject.begin(), tuple.subject.end());
  std::sort(phrase.token_indices.begin(), phrase.token_indices.end());
  phrase.terms.reserve(phrase.token_indices.size());
  for (int idx : phrase.token_indices) {
    phrase.terms.push_back(normalize_term(sentence.tokens[idx]));
  }
  return phrase;
}

std::vector<PhraseTuple> extract_phrases_fallback(const Sentence& sentence) {
  for (const auto& tok : sentence.tokens) {
    if (!tok.head || !tok.deprel) {
      throw InputError("sentence " + std::to_string(sentence.index) +
                       " token " + std::to_string(tok.index) +
                       ": dependency annotations (head/deprel) required for "
                       "phrase extraction");
    }
  }

  std::vector<PhraseTuple> tuples;
  for (const auto& verb : sentence.tokens) {
    if (verb.pos != "VERB") continue;

    std::vector<int> subjects;
    std::vector<int> objects;
    std::vector<int> particles;
    for (int child : direct_children(sentence, verb.index)) {
      const std::string& deprel = *sentence.tokens[child].deprel;
      if (is_subject_relation(deprel)) subjects.push_back(child);
      if (is_object_relation(deprel)) objects.push_back(child);
      if (is_particle_relation(deprel)) particles.push_back(child);
    }

    for (int subj : subjects) {
      for (int obj : objects) {
        PhraseTuple tuple;
        tuple.object = subtree_indices(sentence, subj);

        // Adpositions and subordinators hanging off the object head move
        // into the relation slot ("with Kyle" -> relation {sits, with}).
        std::vector<int> lifted;
        for (int child : direct_children(sentence, obj)) {
          if (is_adposition_relation(*sentence.tokens[child].deprel))
            lifted.push_back(child);
        }

        tuple.relation.push_back(verb.index);
        tuple.relation.insert(tuple.relation.end(), particles.begin(),
                              particles.end());
        tuple.relation.insert(tuple.relation.end(), lifted.begin(),
                              lifted.end());
        std::sort(tuple.relation.begin(), tuple.relation.end());

        for (int idx : subtree_indices(sentence, obj)) {
          if (std::find(lifted.begin(), lifted.end(), idx) == lifted.end())
            tuple.subject.push_back(idx);
        }
        tuples.push_back(std::move(tuple));
      }
    }
  }
  return tuples;
}

std::vector<Phrase> sentence_phrases(const Sentence& sentence) {
  std::vector<Phrase> phrases;
  if (sentence.tuples) {
    for (const auto& tup : *sentence.tuples)
      phrases.push_back(tuple_to_phrase(sentence, tup));
  } else {
    for (const auto& tup : extract_phrases_fallback(sentence))
      phrases.push_back(tuple_to_phrase(sentence, tup));
  }
  return phrases;
}

CorefRelation coreferent(const Phrase& a, const Phrase& b,
                         const Document& doc) {
  bool any_cataphoric = false;
  for (const auto& chain : doc.coref_chains) {
    std::vector<const Mention*> in_a;
    std::vector<const Mention*> in_b;
    for (const auto& m : chain) {
      if (mention_inside(m, a)) in_a.push_back(&m);
      if (mention_inside(m, b)) in_b.push_back(&m);
    }
    for (const Mention* ma : in_a) {
      for (const Mention* mb : in_b) {
        if (ma == mb) continue;
        if (is_cataphoric_mention(*ma, chain, doc) ||
            is_cataphoric_mention(*mb, chain, doc)) {
          any_cataphoric = true;
        } else {
          return CorefRelation::Anaphoric;
        }
      }
    }
  }
  return any_cataphoric ? CorefRelation::Cataphoric : CorefRelation::None;
}

int count_cataphoric_mentions(const Document& doc) {
  int count = 0;
  for (const auto& chain : doc.coref_chains) {
    for (const auto& m : chain) {
      if (is_cataphoric_mention(m, chain, doc)) ++count;
    }
  }
  return count;
}

}  // namespace cohgraph
