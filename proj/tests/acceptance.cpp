// Acceptance checks for the full pipeline: one line per criterion, nonzero
// exit if any of them fails. Each criterion states an end-to-end guarantee
// (metric fidelity against independent references, invariance properties,
// classifier behavior, reproducibility) and is verified with pinned
// tolerances and fixed seeds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cohgraph/classifier.hpp"
#include "cohgraph/corpus.hpp"
#include "cohgraph/embeddings.hpp"
#include "cohgraph/feature_io.hpp"
#include "cohgraph/metrics.hpp"
#include "cohgraph/phrases.hpp"
#include "cohgraph/pipeline.hpp"
#include "cli_harness.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace cohgraph;
using testsupport::make_token;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& note) {
    if (!condition) {
      ok = false;
      notes.push_back(note);
    }
  }
};

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// ---------------------------------------------------------------------------
// 1. The three graph metrics agree with an independent straight-line
//    reference on hundreds of random documents.
Criterion graph_metrics_vs_reference() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(101);
  for (int trial = 0; trial < 250; ++trial) {
    const auto mc = testsupport::random_micro_doc(rng, false);
    const FeatureVector fv = featurize(mc.doc, mc.store);
    const double ref_foc =
        testsupport::ref_doc_foc(mc.doc, mc.vocab, mc.dim);
    const double ref_sem =
        testsupport::ref_doc_semcoh(mc.doc, mc.vocab, mc.dim);
    const double ref_coh = testsupport::ref_doc_cohesion(mc.doc);
    c.require(close(fv.foc, ref_foc, 1e-9),
              "trial " + std::to_string(trial) + ": foc " +
                  std::to_string(fv.foc) + " != " + std::to_string(ref_foc));
    c.require(close(fv.sem_coh, ref_sem, 1e-9),
              "trial " + std::to_string(trial) + ": sem_coh " +
                  std::to_string(fv.sem_coh) + " != " +
                  std::to_string(ref_sem));
    c.require(close(fv.cohesion, ref_coh, 1e-9),
              "trial " + std::to_string(trial) + ": cohesion " +
                  std::to_string(fv.cohesion) + " != " +
                  std::to_string(ref_coh));
    if (!c.ok) break;
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 10.0,
            "took " + std::to_string(elapsed) + "s, limit is 10s");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Tuple flattening: the phrase of a tuple is all three index lists
//    pooled in token order, duplicates preserved, terms lowercased.
Criterion tuple_flattening() {
  Criterion c;
  const std::string corpus_json = R"({"documents":[{
    "id":"kyle","label":null,
    "sentences":[{"tokens":[
      {"text":"He","lemma":null,"pos":"PRON"},
      {"text":"sits","lemma":null,"pos":"VERB"},
      {"text":"with","lemma":null,"pos":"ADP"},
      {"text":"Kyle","lemma":null,"pos":"PROPN"},
      {"text":"while","lemma":null,"pos":"SCONJ"},
      {"text":"he","lemma":null,"pos":"PRON"},
      {"text":"eats","lemma":null,"pos":"VERB"}],
      "tuples":[
        {"object":[0,1],"relation":[2],"subject":[3]},
        {"object":[0,1],"relation":[],"subject":[5,6]}]}],
    "coref_chains":[]}]})";

  const auto docs = parse_corpus(corpus_json);
  c.require(docs.size() == 1, "expected one document");
  if (!c.ok) return c;

  const auto phrases = sentence_phrases(docs[0].sentences[0]);
  c.require(phrases.size() == 2, "expected two phrases");
  if (!c.ok) return c;

  const std::vector<std::string> first = {"he", "sits", "with", "kyle"};
  const std::vector<std::string> second = {"he", "sits", "he", "eats"};
  c.require(phrases[0].terms == first,
            "first phrase should pool object+relation+subject in token order");
  c.require(phrases[1].terms == second,
            "second phrase should keep the duplicated pronoun");
  return c;
}

// ---------------------------------------------------------------------------
// 3. Repetition is penalized: duplicating an existing phrase, or repeating
//    the final sentence, never raises SemCoh (nor Cohesion for phrase
//    duplication) when all embedding components are non-negative.
Criterion repetition_penalty() {
  Criterion c;
  std::mt19937 rng(303);

  int trials = 0;
  while (trials < 500) {
    auto mc = testsupport::random_micro_doc(rng, true);
    std::uniform_int_distribution<int> sent_pick(
        0, static_cast<int>(mc.doc.sentences.size()) - 1);
    auto& sentence = mc.doc.sentences[sent_pick(rng)];
    if (!sentence.tuples || sentence.tuples->empty()) continue;
    ++trials;

    const FeatureVector before = featurize(mc.doc, mc.store);
    std::uniform_int_distribution<int> tuple_pick(
        0, static_cast<int>(sentence.tuples->size()) - 1);
    sentence.tuples->push_back((*sentence.tuples)[tuple_pick(rng)]);
    const FeatureVector after = featurize(mc.doc, mc.store);

    c.require(after.sem_coh <= before.sem_coh + 1e-12,
              "phrase duplication raised sem_coh from " +
                  std::to_string(before.sem_coh) + " to " +
                  std::to_string(after.sem_coh));
    c.require(after.cohesion <= before.cohesion + 1e-12,
              "phrase duplication raised cohesion from " +
                  std::to_string(before.cohesion) + " to " +
                  std::to_string(after.cohesion));
    if (!c.ok) return c;
  }

  for (int trial = 0; trial < 200; ++trial) {
    const auto mc = testsupport::drift_doc(rng);
    const Document repeated =
        testsupport::with_last_sentence_duplicated(mc.doc);
    const double before = featurize(mc.doc, mc.store).sem_coh;
    const double after = featurize(repeated, mc.store).sem_coh;
    c.require(after <= before + 1e-12,
              "sentence repetition raised sem_coh from " +
                  std::to_string(before) + " to " + std::to_string(after));
    if (!c.ok) return c;
  }
  return c;
}

// ---------------------------------------------------------------------------
// 4. Coreference direction: a backward pronoun link raises Cohesion, a
//    forward one leaves it unchanged.
Criterion coreference_direction() {
  Criterion c;

  const auto build = [](bool pronoun_first) {
    Document doc;
    doc.id = pronoun_first ? "forward" : "backward";
    Sentence kyle;
    kyle.tokens = {make_token(0, "Kyle", "PROPN", "kyle"),
                   make_token(1, "runs", "VERB", "run")};
    PhraseTuple t;
    t.object = {0};
    t.subject = {1};
    kyle.tuples = std::vector<PhraseTuple>{t};
    Sentence he;
    he.tokens = {make_token(0, "He", "PRON", "he"),
                 make_token(1, "eats", "VERB", "eat")};
    he.tuples = std::vector<PhraseTuple>{t};
    if (pronoun_first) {
      he.index = 0;
      kyle.index = 1;
      doc.sentences = {he, kyle};
    } else {
      kyle.index = 0;
      he.index = 1;
      doc.sentences = {kyle, he};
    }
    doc.coref_chains.push_back({{0, 0, 1}, {1, 0, 1}});
    return doc;
  };

  EmbeddingStore store;
  store.insert("kyle", {1.0, 0.0});
  store.insert("run", {0.0, 1.0});
  store.insert("he", {0.5, 0.5});
  store.insert("eat", {1.0, 1.0});

  Document backward = build(false);
  Document backward_plain = backward;
  backward_plain.coref_chains.clear();
  const double linked = featurize(backward, store).cohesion;
  const double plain = featurize(backward_plain, store).cohesion;
  c.require(linked > plain,
            "backward link should raise cohesion (" + std::to_string(linked) +
                " vs " + std::to_string(plain) + ")");

  Document forward = build(true);
  Document forward_plain = forward;
  forward_plain.coref_chains.clear();
  const double forward_linked = featurize(forward, store).cohesion;
  const double forward_base = featurize(forward_plain, store).cohesion;
  c.require(forward_linked == forward_base,
            "forward link should leave cohesion unchanged (" +
                std::to_string(forward_linked) + " vs " +
                std::to_string(forward_base) + ")");
  return c;
}

// ---------------------------------------------------------------------------
// 5. End-to-end classification of synthetic coherent vs incoherent
//    documents: high LOOCV accuracy, the semantic-coherence feature leads
//    the importances, and no lexical feature dominates.
struct SyntheticCorpus {
  std::vector<Document> documents;
  EmbeddingStore store;
};

SyntheticCorpus synthetic_corpus(int per_class) {
  SyntheticCorpus sc;
  // Two topic vocabularies in the xy quarter-plane plus an out-of-plane
  // sign-off vocabulary: every document ends with the same farewell
  // sentence, whose phrase is orthogonal to all content phrases. The
  // weakest adjacent link is therefore 0 for every document, which keeps
  // the weakest-link feature out of play.
  const double degree = 3.14159265358979323846 / 180.0;
  const auto angle_vec = [&](double degrees) {
    return std::vector<double>{std::cos(degrees * degree),
                               std::sin(degrees * degree), 0.0};
  };
  for (int m = 0; m < 12; ++m) {
    sc.store.insert("a" + std::to_string(m), angle_vec(5.0 + m * 5.0 / 11.0));
    sc.store.insert("b" + std::to_string(m), angle_vec(80.0 + m * 5.0 / 11.0));
  }
  for (int m = 0; m < 3; ++m)
    sc.store.insert("bye" + std::to_string(m), {0.0, 0.0, 1.0});

  std::mt19937 rng(505);
  std::uniform_int_distribution<int> offset_pick(0, 3);

  const auto content_sentence = [](int index,
                                   const std::vector<std::string>& terms,
                                   bool duplicate_tuple) {
    Sentence s;
    s.index = index;
    PhraseTuple t;
    for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
      s.tokens.push_back(make_token(i, terms[i], "NOUN"));
      if (i == 0)
        t.object.push_back(i);
      else
        t.subject.push_back(i);
    }
    s.tuples = std::vector<PhraseTuple>{t};
    if (duplicate_tuple) s.tuples->push_back(t);
    return s;
  };

  for (int d = 0; d < 2 * per_class; ++d) {
    const bool coherent = d < per_class;
    Document doc;
    doc.id = (coherent ? "coherent" : "incoherent") + std::to_string(d);
    doc.label = coherent ? "coherent" : "incoherent";

    if (coherent) {
      // one topic throughout, every sentence anchored on the same term
      const std::string topic = d % 2 ? "a" : "b";
      const std::string anchor = topic + "11";
      const int offset = offset_pick(rng);
      for (int k = 0; k < 7; ++k) {
        doc.sentences.push_back(content_sentence(
            k,
            {anchor, topic + std::to_string(k + offset),
             topic + std::to_string(k + offset + 1)},
            false));
      }
    } else {
      // topics alternate sentence by sentence, term slices never overlap,
      // and every tuple is stated twice
      int used_a = 0, used_b = 0;
      for (int k = 0; k < 7; ++k) {
        const bool is_a = k % 2 == 0;
        const std::string topic = is_a ? "a" : "b";
        int& used = is_a ? used_a : used_b;
        doc.sentences.push_back(content_sentence(
            k,
            {topic + std::to_string(used), topic + std::to_string(used + 1),
             topic + std::to_string(used + 2)},
            true));
        used += 3;
      }
    }
    doc.sentences.push_back(
        content_sentence(7, {"bye0", "bye1", "bye2"}, false));
    sc.documents.push_back(std::move(doc));
  }
  return sc;
}

Criterion classifier_end_to_end() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const auto sc = synthetic_corpus(60);

  const auto result = featurize_corpus(sc.documents, sc.store, {}, 4, false);
  c.require(result.vectors.size() == 120, "expected 120 feature vectors");
  if (!c.ok) return c;

  // sanity: the construction really separates the classes on sem_coh, and
  // the weakest-link feature is identically zero
  double min_coherent = 1e300, max_incoherent = -1e300;
  for (const auto& fv : result.vectors) {
    c.require(fv.foc == 0.0, "foc should be 0 for '" + fv.document_id + "'");
    if (*fv.label == "coherent")
      min_coherent = std::min(min_coherent, fv.sem_coh);
    else
      max_incoherent = std::max(max_incoherent, fv.sem_coh);
  }
  c.require(min_coherent > max_incoherent,
            "class margin collapsed: min coherent " +
                std::to_string(min_coherent) + " <= max incoherent " +
                std::to_string(max_incoherent));
  if (!c.ok) return c;

  const TrainedTree tree = loocv(result.vectors, GridSpec{});
  c.require(tree.loocv_accuracy >= 0.9,
            "LOOCV accuracy " + std::to_string(tree.loocv_accuracy) +
                " below 0.9");

  int top_feature = 0;
  for (int k = 1; k < 7; ++k)
    if (tree.importances[k] > tree.importances[top_feature]) top_feature = k;
  c.require(top_feature == 1,
            std::string("top importance should be sem_coh, got ") +
                kFeatureNames[top_feature]);
  for (int k = 3; k < 7; ++k) {
    c.require(tree.importances[k] <= 0.15,
              std::string("lexical feature ") + kFeatureNames[k] +
                  " importance " + std::to_string(tree.importances[k]) +
                  " exceeds 0.15");
  }

  const double elapsed = seconds_since(start);
  c.require(elapsed < 120.0,
            "took " + std::to_string(elapsed) + "s, limit is 120s");
  return c;
}

// ---------------------------------------------------------------------------
// 6. Decision-tree hand traces: exact split placement, zero-gain growth,
//    two-split importances, and the leave-one-out base rate on
//    uninformative features.
Criterion tree_hand_traces() {
  Criterion c;
  const auto fv7 = [](std::array<double, 7> values, const char* label) {
    FeatureVector fv;
    static int n = 0;
    fv.document_id = "h" + std::to_string(n++);
    fv.label = label;
    fv.foc = values[0];
    fv.sem_coh = values[1];
    fv.cohesion = values[2];
    fv.func_w = values[3];
    fv.phrase_w = values[4];
    fv.mattr = values[5];
    fv.bi = values[6];
    return fv;
  };

  {
    const std::vector<FeatureVector> data = {
        fv7({0, 0, 0, 0, 0, 0, 0}, "a"), fv7({0, 0, 0, 0, 0, 0, 0}, "a"),
        fv7({1, 0, 0, 0, 0, 0, 0}, "b"), fv7({1, 0, 0, 0, 0, 0, 0}, "b")};
    const auto tree = fit_tree(data, {});
    c.require(!tree.root->is_leaf() && tree.root->feature_index == 0,
              "separable data should split on the only varying feature");
    c.require(std::abs(tree.root->threshold - 0.5) < 1e-15,
              "midpoint threshold should be 0.5");
    FeatureVector probe = fv7({0.5, 0, 0, 0, 0, 0, 0}, "");
    c.require(predict(tree, probe) == "a", "boundary value should go left");
  }

  {
    const std::vector<FeatureVector> data = {
        fv7({0, 0, 0, 0, 0, 0, 0}, "a"), fv7({0, 1, 0, 0, 0, 0, 0}, "b"),
        fv7({1, 0, 0, 0, 0, 0, 0}, "b"), fv7({1, 1, 0, 0, 0, 0, 0}, "a")};
    TreeParams params;
    params.max_depth = 2;
    const auto tree = fit_tree(data, params);
    bool all_correct = true;
    for (const auto& sample : data)
      all_correct =
          all_correct && predict(tree, sample) == sample.label.value();
    c.require(all_correct,
              "depth-2 tree should classify the XOR layout perfectly");
  }

  {
    const std::vector<FeatureVector> data = {
        fv7({0, 0, 0, 0, 0, 0, 0}, "c"), fv7({0, 0, 0, 0, 0, 0, 0}, "c"),
        fv7({0, 1, 0, 0, 0, 0, 0}, "a"), fv7({0, 1, 0, 0, 0, 0, 0}, "a"),
        fv7({0, 1, 0, 1, 0, 0, 0}, "b"), fv7({0, 1, 0, 1, 0, 0, 0}, "b")};
    const auto tree = fit_tree(data, {});
    c.require(std::abs(tree.importances[1] - 0.5) < 1e-12 &&
                  std::abs(tree.importances[3] - 0.5) < 1e-12,
              "two equal splits should each carry importance 0.5");
  }

  {
    std::vector<FeatureVector> data = {
        fv7({0, 0, 0, 0, 0, 0, 0}, "a"), fv7({0, 0, 0, 0, 0, 0, 0}, "a"),
        fv7({0, 0, 0, 0, 0, 0, 0}, "a"), fv7({0, 0, 0, 0, 0, 0, 0}, "b"),
        fv7({0, 0, 0, 0, 0, 0, 0}, "b")};
    const auto tree = loocv(data, GridSpec{});
    c.require(std::abs(tree.loocv_accuracy - 0.6) < 1e-12,
              "constant features should score the base rate 3/5, got " +
                  std::to_string(tree.loocv_accuracy));
  }
  return c;
}

// ---------------------------------------------------------------------------
// 7. Lexical metrics: sliding-window MATTR, the vocabulary-richness power
//    law, and the two ratio features agree with direct computation.
Criterion lexical_metrics() {
  Criterion c;
  const auto words = [](const std::vector<std::string>& texts,
                        const std::vector<std::string>& tags = {}) {
    Document doc;
    doc.id = "w";
    Sentence s;
    for (int i = 0; i < static_cast<int>(texts.size()); ++i)
      s.tokens.push_back(make_token(
          i, texts[i], tags.empty() ? std::string("NOUN") : tags[i]));
    doc.sentences.push_back(std::move(s));
    return doc;
  };

  c.require(std::abs(mattr(words({"a", "b", "a", "b"}), 2) - 1.0) < 1e-12,
            "alternating bigram windows are all distinct");
  c.require(std::abs(mattr(words({"a", "a", "a"}), 2) - 0.5) < 1e-12,
            "constant bigram windows score 1/2");
  c.require(std::abs(mattr(words({"a", "b", "a"}), 50) - 2.0 / 3.0) < 1e-12,
            "short documents fall back to the plain ratio");

  std::mt19937 rng(707);
  std::uniform_int_distribution<int> len(1, 200);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> window(1, 80);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> terms;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      terms.push_back("w" + std::to_string(pick(rng)));
    const int w = window(rng);
    c.require(
        close(mattr(words(terms), w), testsupport::ref_mattr(terms, w), 1e-12),
        "sliding window disagrees with the naive recomputation");
    if (!c.ok) return c;
  }

  std::vector<std::string> hundred;
  for (int i = 0; i < 100; ++i) hundred.push_back("t" + std::to_string(i));
  c.require(close(brunet_index(words(hundred)), 8.61926597721697, 1e-12),
            "richness index off for 100 tokens / 100 types");
  std::vector<std::string> halved;
  for (int i = 0; i < 100; ++i) halved.push_back("t" + std::to_string(i / 2));
  c.require(close(brunet_index(words(halved)), 11.189676933375944, 1e-12),
            "richness index off for 100 tokens / 50 types");

  std::uniform_int_distribution<int> n_pick(1, 400);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = n_pick(rng);
    std::uniform_int_distribution<int> v_pick(1, n);
    const int v = v_pick(rng);
    std::vector<std::string> terms;
    for (int i = 0; i < n; ++i)
      terms.push_back("t" + std::to_string(i % v));
    c.require(close(brunet_index(words(terms)),
                    testsupport::ref_brunet(n, v), 1e-9),
              "richness index disagrees at N=" + std::to_string(n) +
                  " V=" + std::to_string(v));
    if (!c.ok) return c;
  }

  const auto tagged = words({"w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7",
                             "w8", "w9"},
                            {"NOUN", "PROPN", "VERB", "ADJ", "ADV", "PRON",
                             "DET", "ADP", "PUNCT", "NOUN"});
  c.require(std::abs(func_w(tagged) - 0.7) < 1e-12,
            "7 of these 10 tags are content tags");

  // phrase coverage: 4 distinct phrase terms over 5 tokens
  Document kyle;
  kyle.id = "kyle";
  Sentence s0;
  s0.index = 0;
  s0.tokens = {make_token(0, "Kyle", "PROPN", "kyle"),
               make_token(1, "runs", "VERB", "run"),
               make_token(2, "fast", "ADV", "fast")};
  PhraseTuple t0;
  t0.object = {0};
  t0.relation = {1};
  t0.subject = {2};
  s0.tuples = std::vector<PhraseTuple>{t0};
  Sentence s1;
  s1.index = 1;
  s1.tokens = {make_token(0, "Kyle", "PROPN", "kyle"),
               make_token(1, "eats", "VERB", "eat")};
  PhraseTuple t1;
  t1.object = {0};
  t1.subject = {1};
  s1.tuples = std::vector<PhraseTuple>{t1};
  kyle.sentences = {s0, s1};
  c.require(std::abs(phrase_w(kyle) - 0.8) < 1e-12,
            "phrase coverage should be 4/5");
  return c;
}

// ---------------------------------------------------------------------------
// 8. Reproducibility: canonical corpus bytes, model round-trips, and
//    byte-identical CLI runs regardless of thread count.
Criterion reproducibility() {
  Criterion c;
  namespace fs = std::filesystem;

  std::mt19937 rng(808);
  std::vector<Document> docs;
  for (int i = 0; i < 10; ++i) {
    auto mc = testsupport::random_micro_doc(rng, false);
    mc.doc.id = "doc" + std::to_string(i);
    if (i % 3) mc.doc.label = i % 2 ? "x" : "y";
    docs.push_back(std::move(mc.doc));
  }
  const std::string once = serialize_corpus(docs);
  const std::string twice = serialize_corpus(parse_corpus(once));
  c.require(once == twice, "corpus serialization is not canonical");

  {
    std::vector<FeatureVector> data;
    for (int i = 0; i < 12; ++i) {
      FeatureVector fv;
      fv.document_id = "m" + std::to_string(i);
      fv.label = i % 2 ? "p" : "q";
      fv.foc = i * 0.125;
      fv.sem_coh = (i * 37 % 12) * 0.25;
      data.push_back(std::move(fv));
    }
    const auto tree = loocv(data, GridSpec{});
    const auto bytes = save_model(tree);
    c.require(save_model(load_model(bytes)) == bytes,
              "model JSON is not a byte-exact round trip");
  }

  // CLI determinism on a real corpus file
  const auto dir = testsupport::scratch_dir("cohgraph_acceptance_cli");
  const auto corpus_path = (dir / "corpus.json").string();
  testsupport::spit(corpus_path, once);
  std::string embeddings = "10 3\n";
  for (int t = 0; t < 10; ++t)
    embeddings += "t" + std::to_string(t) + " 0." + std::to_string(t) +
                  " 0.5 1\n";
  const auto embeddings_path = (dir / "vectors.txt").string();
  testsupport::spit(embeddings_path, embeddings);

  const auto serial_out = (dir / "serial.csv").string();
  const auto repeat_out = (dir / "repeat.csv").string();
  const auto threaded_out = (dir / "threaded.csv").string();
  const std::string base_args = "featurize --corpus " + corpus_path +
                                " --embeddings " + embeddings_path +
                                " --out ";
  c.require(testsupport::run_cli(base_args + serial_out).code == 0,
            "serial featurize run failed");
  c.require(testsupport::run_cli(base_args + repeat_out).code == 0,
            "repeat featurize run failed");
  c.require(
      testsupport::run_cli(base_args + threaded_out + " --jobs 4").code == 0,
      "threaded featurize run failed");
  if (!c.ok) return c;

  const auto serial_bytes = testsupport::slurp(serial_out);
  c.require(!serial_bytes.empty(), "serial run produced no output");
  c.require(testsupport::slurp(repeat_out) == serial_bytes,
            "two identical runs produced different feature files");
  c.require(testsupport::slurp(threaded_out) == serial_bytes,
            "thread count changed the feature file");
  c.require(testsupport::slurp(repeat_out + ".report.json") ==
                testsupport::slurp(serial_out + ".report.json"),
            "two identical runs produced different reports");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*check)();
  };
  const Entry entries[] = {
      {"graph metrics match an independent reference implementation",
       graph_metrics_vs_reference},
      {"tuples flatten to ordered multisets of normalized terms",
       tuple_flattening},
      {"repetition is penalized, never rewarded", repetition_penalty},
      {"backward coreference boosts cohesion, forward does not",
       coreference_direction},
      {"classifier separates coherent from incoherent documents",
       classifier_end_to_end},
      {"decision-tree hand traces are exact", tree_hand_traces},
      {"lexical metrics match direct computation", lexical_metrics},
      {"all outputs are reproducible byte for byte", reproducibility},
  };

  bool all_ok = true;
  int index = 1;
  for (const auto& entry : entries) {
    Criterion result;
    try {
      result = entry.check();
    } catch (const std::exception& e) {
      result.ok = false;
      result.notes.push_back(std::string("unexpected exception: ") + e.what());
    }
    for (const auto& note : result.notes)
      std::fprintf(stderr, "    criterion %d: %s\n", index, note.c_str());
    std::printf("[%s] %d. %s\n", result.ok ? "PASS" : "FAIL", index,
                entry.name);
    all_ok = all_ok && result.ok;
    ++index;
  }
  return all_ok ? 0 : 1;
}
