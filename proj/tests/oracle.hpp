// Independent reference computations for the graph and lexical metrics.
//
// Everything here is written straight from the definitions as plain loops
// over string lists, on purpose sharing no helper code with the library:
// the suites compare library output against these values. Documents must
// carry explicit tuples and no coreference chains (the generators comply).

#ifndef COHGRAPH_TESTS_ORACLE_HPP
#define COHGRAPH_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cohgraph/corpus.hpp"

namespace testsupport {

using Vocab = std::map<std::string, std::vector<double>>;

inline std::string ref_lower(std::string s) {
  for (char& c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::string ref_norm(const cohgraph::Token& t) {
  return ref_lower(t.lemma ? *t.lemma : t.text);
}

// Terms of one tuple: all three index lists pooled, sorted by token index,
// duplicates kept.
inline std::vector<std::string> ref_tuple_terms(
    const cohgraph::Sentence& sent, const cohgraph::PhraseTuple& tup) {
  std::vector<int> idx;
  idx.insert(idx.end(), tup.object.begin(), tup.object.end());
  idx.insert(idx.end(), tup.relation.begin(), tup.relation.end());
  idx.insert(idx.end(), tup.subject.begin(), tup.subject.end());
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> terms;
  for (int i : idx) terms.push_back(ref_norm(sent.tokens[i]));
  return terms;
}

inline std::vector<std::vector<std::string>> ref_phrases(
    const cohgraph::Sentence& sent) {
  std::vector<std::vector<std::string>> out;
  for (const auto& tup : *sent.tuples) out.push_back(ref_tuple_terms(sent, tup));
  return out;
}

inline bool ref_same_multiset(std::vector<std::string> a,
                              std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

struct RefSidePhrase {
  std::vector<std::string> terms;
  int count = 0;
};

// unique() with occurrence counts, first-appearance order.
inline std::vector<RefSidePhrase> ref_unique(
    const std::vector<std::vector<std::string>>& phrases) {
  std::vector<RefSidePhrase> out;
  for (const auto& p : phrases) {
    bool found = false;
    for (auto& u : out) {
      if (ref_same_multiset(u.terms, p)) {
        ++u.count;
        found = true;
        break;
      }
    }
    if (!found) out.push_back(RefSidePhrase{p, 1});
  }
  return out;
}

// X^j \ X^i: drop every phrase of j whose multiset occurs anywhere in i.
inline std::vector<std::vector<std::string>> ref_complement(
    const std::vector<std::vector<std::string>>& xi,
    const std::vector<std::vector<std::string>>& xj) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : xj) {
    bool in_i = false;
    for (const auto& q : xi) {
      if (ref_same_multiset(p, q)) {
        in_i = true;
        break;
      }
    }
    if (!in_i) out.push_back(p);
  }
  return out;
}

inline std::vector<double> ref_phrase_mean(const std::vector<std::string>& terms,
                                           const Vocab& vocab, int dim) {
  std::vector<double> mean(dim, 0.0);
  int found = 0;
  for (const auto& t : terms) {
    auto hit = vocab.find(t);
    if (hit == vocab.end()) continue;
    for (int d = 0; d < dim; ++d) mean[d] += hit->second[d];
    ++found;
  }
  if (found == 0) return std::vector<double>(dim, 0.0);
  for (double& v : mean) v /= found;
  return mean;
}

inline double ref_cosine(const std::vector<double>& u,
                         const std::vector<double>& v) {
  double dot = 0, nu = 0, nv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0 || nv == 0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

// Mean weighted outdegree of one pair graph given per-cross-pair weights.
inline double ref_mean_outdegree(const std::vector<std::vector<double>>& w,
                                 std::size_t na, std::size_t nb) {
  // Outdegree of an A node is its row sum; of a B node its column sum.
  double degrees = 0.0;
  for (std::size_t a = 0; a < na; ++a) {
    double row = 0.0;
    for (std::size_t b = 0; b < nb; ++b) row += w[a][b];
    degrees += row;
  }
  for (std::size_t b = 0; b < nb; ++b) {
    double col = 0.0;
    for (std::size_t a = 0; a < na; ++a) col += w[a][b];
    degrees += col;
  }
  return degrees / static_cast<double>(na + nb);
}

// sem(S_i, S_j): cosine of phrase means over counts, averaged as outdegree.
inline double ref_pair_sem(const cohgraph::Sentence& si,
                           const cohgraph::Sentence& sj, const Vocab& vocab,
                           int dim) {
  const auto xi = ref_phrases(si);
  const auto xj = ref_phrases(sj);
  const auto a = ref_unique(xi);
  const auto b = ref_unique(ref_complement(xi, xj));
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::vector<double>> w(a.size(),
                                     std::vector<double>(b.size(), 0.0));
  for (std::size_t l = 0; l < a.size(); ++l) {
    for (std::size_t m = 0; m < b.size(); ++m) {
      const double c = ref_cosine(ref_phrase_mean(a[l].terms, vocab, dim),
                                  ref_phrase_mean(b[m].terms, vocab, dim));
      w[l][m] = c / (a[l].count * b[m].count);
    }
  }
  return ref_mean_outdegree(w, a.size(), b.size());
}

// coh(S_i, S_j): shared/total unique terms over counts (no coref chains).
inline double ref_pair_coh(const cohgraph::Sentence& si,
                           const cohgraph::Sentence& sj) {
  const auto xi = ref_phrases(si);
  const auto xj = ref_phrases(sj);
  const auto a = ref_unique(xi);
  const auto b = ref_unique(ref_complement(xi, xj));
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::vector<double>> w(a.size(),
                                     std::vector<double>(b.size(), 0.0));
  for (std::size_t l = 0; l < a.size(); ++l) {
    for (std::size_t m = 0; m < b.size(); ++m) {
      const std::set<std::string> ta(a[l].terms.begin(), a[l].terms.end());
      const std::set<std::string> tb(b[m].terms.begin(), b[m].terms.end());
      int common = 0;
      for (const auto& t : ta) common += tb.count(t) ? 1 : 0;
      const int unique = static_cast<int>(ta.size() + tb.size()) - common;
      w[l][m] = unique == 0 ? 0.0
                            : static_cast<double>(common) /
                                  (unique * a[l].count * b[m].count);
    }
  }
  return ref_mean_outdegree(w, a.size(), b.size());
}

inline double ref_doc_foc(const cohgraph::Document& doc, const Vocab& vocab,
                          int dim) {
  const int n = static_cast<int>(doc.sentences.size());
  if (n < 2) return 0.0;
  double weakest = 1e300;
  for (int i = 0; i + 1 < n; ++i) {
    weakest = std::min(
        weakest, ref_pair_sem(doc.sentences[i], doc.sentences[i + 1], vocab, dim));
  }
  return weakest;
}

inline double ref_doc_semcoh(const cohgraph::Document& doc, const Vocab& vocab,
                             int dim) {
  const int n = static_cast<int>(doc.sentences.size());
  if (n < 2) return 0.0;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      total += ref_pair_sem(doc.sentences[i], doc.sentences[j], vocab, dim) /
               std::abs(i - j);
    }
  }
  return total / n;
}

inline double ref_doc_cohesion(const cohgraph::Document& doc) {
  const int n = static_cast<int>(doc.sentences.size());
  if (n < 2) return 0.0;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      total += ref_pair_coh(doc.sentences[i], doc.sentences[j]) /
               std::abs(i - j);
    }
  }
  return total / n;
}

// Naive sliding-window type-token ratio: recollect the window set each step.
inline double ref_mattr(const std::vector<std::string>& terms, int window) {
  const int n = static_cast<int>(terms.size());
  const int w = std::min(window, n);
  double total = 0.0;
  int windows = 0;
  for (int start = 0; start + w <= n; ++start) {
    std::set<std::string> types(terms.begin() + start,
                                terms.begin() + start + w);
    total += static_cast<double>(types.size()) / w;
    ++windows;
  }
  return total / windows;
}

inline double ref_brunet(double n_tokens, double n_types) {
  return std::pow(n_tokens, std::pow(n_types, -0.165));
}

}  // namespace testsupport

#endif  // COHGRAPH_TESTS_ORACLE_HPP
