#include "cohgraph/corpus.hpp"

#include <sstream>

#include "cohgraph/errors.hpp"
#include "json.hpp"

namespace cohgraph {

using nlohmann::json;

int Document::token_count() const {
  int n = 0;
  for (const auto& s : sentences) n += static_cast<int>(s.tokens.size());
  return n;
}

namespace {

// Line number for a byte offset, for parse diagnostics.
int line_of_offset(const std::string& bytes, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < bytes.size(); ++i) {
    if (bytes[i] == '\n') ++line;
  }
  return line;
}

std::string require_string(const json& j, const char* field,
                           const std::string& ctx) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw ValidationError(ctx + ": field '" + field +
                          "' missing or not a string");
  }
  return j[field].get<std::string>();
}

Token token_from_json(const json& j, int index, const std::string& ctx) {
  if (!j.is_object()) throw ValidationError(ctx + ": token is not an object");
  Token t;
  t.index = index;
  t.text = require_string(j, "text", ctx);
  t.pos = require_string(j, "pos", ctx);
  if (j.contains("lemma") && !j["lemma"].is_null()) {
    if (!j["lemma"].is_string())
      throw ValidationError(ctx + ": field 'lemma' not a string");
    t.lemma = j["lemma"].get<std::string>();
  }
  if (j.contains("head") && !j["head"].is_null()) {
    if (!j["head"].is_number_integer())
      throw ValidationError(ctx + ": field 'head' not an integer");
    t.head = j["head"].get<int>();
  }
  if (j.contains("deprel") && !j["deprel"].is_null()) {
    if (!j["deprel"].is_string())
      throw ValidationError(ctx + ": field 'deprel' not a string");
    t.deprel = j["deprel"].get<std::string>();
  }
  return t;
}

std::vector<int> index_list(const json& j, const char* field,
                            const std::string& ctx) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw ValidationError(ctx + ": field '" + field +
                          "' missing or not an array");
  }
  std::vector<int> out;
  for (const auto& v : j[field]) {
    if (!v.is_number_integer())
      throw ValidationError(ctx + ": field '" + field +
                            "' holds a non-integer index");
    out.push_back(v.get<int>());
  }
  return out;
}

Document document_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("document entry is not an object");
  Document doc;
  doc.id = require_string(j, "id", "document");
  const std::string ctx = "document '" + doc.id + "'";
  if (j.contains("label") && !j["label"].is_null()) {
    if (!j["label"].is_string())
      throw ValidationError(ctx + ": field 'label' not a string");
    doc.label = j["label"].get<std::string>();
  }
  if (!j.contains("sentences") || !j["sentences"].is_array())
    throw ValidationError(ctx + ": field 'sentences' missing or not an array");

  int sent_index = 0;
  for (const auto& js : j["sentences"]) {
    Sentence sent;
    sent.index = sent_index;
    const std::string sctx = ctx + " sentence " + std::to_string(sent_index);
    if (!js.is_object())
      throw ValidationError(sctx + ": sentence is not an object");
    if (!js.contains("tokens") || !js["tokens"].is_array())
      throw ValidationError(sctx + ": field 'tokens' missing or not an array");
    int tok_index = 0;
    for (const auto& jt : js["tokens"]) {
      sent.tokens.push_back(token_from_json(
          jt, tok_index, sctx + " token " + std::to_string(tok_index)));
      ++tok_index;
    }
    if (js.contains("tuples") && !js["tuples"].is_null()) {
      if (!js["tuples"].is_array())
        throw ValidationError(sctx + ": field 'tuples' not an array");
      std::vector<PhraseTuple> tuples;
      int tup_index = 0;
      for (const auto& jtu : js["tuples"]) {
        const std::string tctx = sctx + " tuple " + std::to_string(tup_index);
        PhraseTuple tup;
        tup.object = index_list(jtu, "object", tctx);
        tup.relation = index_list(jtu, "relation", tctx);
        tup.subject = index_list(jtu, "subject", tctx);
        tuples.push_back(std::move(tup));
        ++tup_index;
      }
      sent.tuples = std::move(tuples);
    }
    doc.sentences.push_back(std::move(sent));
    ++sent_index;
  }

  if (j.contains("coref_chains") && !j["coref_chains"].is_null()) {
    if (!j["coref_chains"].is_array())
      throw ValidationError(ctx + ": field 'coref_chains' not an array");
    for (const auto& jc : j["coref_chains"]) {
      if (!jc.is_array())
        throw ValidationError(ctx + ": coref chain is not an array");
      CorefChain chain;
      for (const auto& jm : jc) {
        Mention m;
        if (!jm.is_object() || !jm.contains("sentence") ||
            !jm.contains("start") || !jm.contains("end") ||
            !jm["sentence"].is_number_integer() ||
            !jm["start"].is_number_integer() ||
            !jm["end"].is_number_integer()) {
          throw ValidationError(ctx +
                                ": mention needs integer sentence/start/end");
        }
        m.sentence = jm["sentence"].get<int>();
        m.start = jm["start"].get<int>();
        m.end = jm["end"].get<int>();
        chain.push_back(m);
      }
      doc.coref_chains.push_back(std::move(chain));
    }
  }
  return doc;
}

std::optional<std::string> check_index_list(const std::vector<int>& indices,
                                            int token_count,
                                            const std::string& field,
                                            const std::string& ctx) {
  for (int idx : indices) {
    if (idx < 0 || idx >= token_count) {
      return ctx + ": field '" + field + "' references token index " +
             std::to_string(idx) + " in a " + std::to_string(token_count) +
             "-token sentence";
    }
  }
  return std::nullopt;
}

json token_to_json(const Token& t) {
  json j;
  j["text"] = t.text;
  j["lemma"] = t.lemma ? json(*t.lemma) : json(nullptr);
  j["pos"] = t.pos;
  j["head"] = t.head ? json(*t.head) : json(nullptr);
  j["deprel"] = t.deprel ? json(*t.deprel) : json(nullptr);
  return j;
}

}  // namespace

std::optional<std::string> validate_document(const Document& doc) {
  const std::string ctx = "document '" + doc.id + "'";
  for (const auto& sent : doc.sentences) {
    const std::string sctx = ctx + " sentence " + std::to_string(sent.index);
    const int n = static_cast<int>(sent.tokens.size());
    for (const auto& tok : sent.tokens) {
      if (tok.head && *tok.head != -1 && (*tok.head < 0 || *tok.head >= n)) {
        return sctx + " token " + std::to_string(tok.index) +
               ": field 'head' references invalid index " +
               std::to_string(*tok.head);
      }
    }
    if (sent.tuples) {
      int ti = 0;
      for (const auto& tup : *sent.tuples) {
        const std::string tctx = sctx + " tuple " + std::to_string(ti);
        if (tup.object.empty() && tup.relation.empty() && tup.subject.empty())
          return tctx + ": all three index lists are empty";
        if (auto err = check_index_list(tup.object, n, "object", tctx))
          return err;
        if (auto err = check_index_list(tup.relation, n, "relation", tctx))
          return err;
        if (auto err = check_index_list(tup.subject, n, "subject", tctx))
          return err;
        ++ti;
      }
    }
  }
  int ci = 0;
  for (const auto& chain : doc.coref_chains) {
    const std::string cctx = ctx + " coref chain " + std::to_string(ci);
    if (chain.size() < 2) return cctx + ": chain has fewer than 2 mentions";
    const Mention* prev = nullptr;
    for (const auto& m : chain) {
      if (m.sentence < 0 ||
          m.sentence >= static_cast<int>(doc.sentences.size())) {
        return cctx + ": mention has invalid sentence index " +
               std::to_string(m.sentence);
      }
      const int n = static_cast<int>(doc.sentences[m.sentence].tokens.size());
      if (m.start < 0 || m.end > n || m.start >= m.end) {
        return cctx + ": mention span [" + std::to_string(m.start) + "," +
               std::to_string(m.end) + ") invalid for sentence " +
               std::to_string(m.sentence);
      }
      if (prev && (m.sentence < prev->sentence ||
                   (m.sentence == prev->sentence && m.start < prev->start))) {
        return cctx + ": mentions not in document order";
      }
      prev = &m;
    }
    ++ci;
  }
  return std::nullopt;
}

static std::vector<Document> documents_from_json(const std::string& bytes,
                                                 std::vector<std::string>* errs) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("corpus parse error at line " +
                     std::to_string(line_of_offset(bytes, e.byte)) +
                     " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
  if (!root.is_object() || !root.contains("documents") ||
      !root["documents"].is_array()) {
    throw ValidationError("corpus: top-level 'documents' array missing");
  }
  std::vector<Document> docs;
  for (const auto& jd : root["documents"]) {
    Document doc;
    try {
      doc = document_from_json(jd);
    } catch (const ValidationError& e) {
      if (errs) {
        errs->push_back(e.what());
        continue;
      }
      throw;
    }
    if (auto err = validate_document(doc)) {
      if (errs) {
        errs->push_back(*err);
        continue;
      }
      throw ValidationError(*err);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> parse_corpus(const std::string& bytes) {
  return documents_from_json(bytes, nullptr);
}

CorpusLoad parse_corpus_lenient(const std::string& bytes) {
  CorpusLoad load;
  load.documents = documents_from_json(bytes, &load.errors);
  return load;
}

std::string serialize_corpus(const std::vector<Document>& documents) {
  json root;
  root["documents"] = json::array();
  for (const auto& doc : documents) {
    json jd;
    jd["id"] = doc.id;
    jd["label"] = doc.label ? json(*doc.label) : json(nullptr);
    jd["sentences"] = json::array();
    for (const auto& sent : doc.sentences) {
      json js;
      js["tokens"] = json::array();
      for (const auto& tok : sent.tokens) js["tokens"].push_back(token_to_json(tok));
      if (sent.tuples) {
        js["tuples"] = json::array();
        for (const auto& tup : *sent.tuples) {
          json jt;
          jt["object"] = tup.object;
          jt["relation"] = tup.relation;
          jt["subject"] = tup.subject;
          js["tuples"].push_back(std::move(jt));
        }
      } else {
        js["tuples"] = nullptr;
      }
      jd["sentences"].push_back(std::move(js));
    }
    jd["coref_chains"] = json::array();
    for (const auto& chain : doc.coref_chains) {
      json jc = json::array();
      for (const auto& m : chain) {
        json jm;
        jm["sentence"] = m.sentence;
        jm["start"] = m.start;
        jm["end"] = m.end;
        jc.push_back(std::move(jm));
      }
      jd["coref_chains"].push_back(std::move(jc));
    }
    root["documents"].push_back(std::move(jd));
  }
  return root.dump(2) + "\n";
}

}  // namespace cohgraph
