#include "cohgraph/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "cohgraph/errors.hpp"
#include "cohgraph/feature_io.hpp"
#include "cohgraph/phrases.hpp"
#include "json.hpp"

namespace cohgraph {

namespace {

// Outcome slot for one document; workers fill these independently and the
// results are read back in input order.
struct DocOutcome {
  std::optional<FeatureVector> vector;
  DocumentDiagnostics diagnostics;
  std::string error;          // recoverable input problem
  std::exception_ptr fatal;   // anything else; rethrown after the join
};

// Importances ordered for reporting: descending value, fixed feature order
// on ties.
std::vector<std::size_t> importance_order(
    const std::array<double, 7>& importances) {
  std::vector<std::size_t> order(importances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return importances[a] > importances[b];
  });
  return order;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError(path + ": read failed");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw InputError(path + ": write failed");
}

FeaturizeResult featurize_corpus(const std::vector<Document>& documents,
                                 const EmbeddingStore& store,
                                 const MetricsConfig& config, int jobs,
                                 bool keep_going) {
  if (jobs < 1)
    throw ContractViolation("featurize_corpus jobs must be >= 1, got " +
                            std::to_string(jobs));
  const std::size_t n = documents.size();
  std::vector<DocOutcome> outcomes(n);

  auto process = [&](std::size_t index) {
    DocOutcome& slot = outcomes[index];
    try {
      DocumentDiagnostics diagnostics;
      slot.vector = featurize(documents[index], store, config, &diagnostics);
      slot.diagnostics = diagnostics;
    } catch (const std::runtime_error& e) {
      slot.error = e.what();
    } catch (...) {
      slot.fatal = std::current_exception();
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) process(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) process(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Input order decides which failure surfaces, not thread scheduling.
  for (const auto& slot : outcomes) {
    if (slot.fatal) std::rethrow_exception(slot.fatal);
  }
  FeaturizeResult result;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& slot = outcomes[i];
    if (slot.vector) {
      result.vectors.push_back(*slot.vector);
      result.reports.push_back(DocumentReport{documents[i].id, slot.diagnostics});
    } else if (keep_going) {
      result.errors.push_back(slot.error);
    } else {
      throw InputError(slot.error);
    }
  }
  return result;
}

std::string diagnostics_report_json(const FeaturizeResult& result) {
  nlohmann::json out;
  out["documents"] = nlohmann::json::array();
  for (const auto& report : result.reports) {
    nlohmann::json jd;
    jd["id"] = report.id;
    jd["total_pairs"] = report.diagnostics.total_pairs;
    jd["degenerate_pairs"] = report.diagnostics.degenerate_pairs;
    jd["phrase_terms"] = report.diagnostics.phrase_terms;
    jd["oov_phrase_terms"] = report.diagnostics.oov_phrase_terms;
    jd["cataphora_count"] = report.diagnostics.cataphora_count;
    out["documents"].push_back(std::move(jd));
  }
  out["errors"] = result.errors;
  return out.dump(2) + "\n";
}

std::string corpus_pair_graphs_json(const std::vector<Document>& documents,
                                    const EmbeddingStore& store) {
  nlohmann::json out;
  out["documents"] = nlohmann::json::array();
  for (const auto& doc : documents) {
    nlohmann::json jd;
    jd["id"] = doc.id;
    jd["pairs"] = nlohmann::json::array();
    std::vector<std::vector<Phrase>> phrases;
    for (const auto& sent : doc.sentences)
      phrases.push_back(sentence_phrases(sent));
    const int n = static_cast<int>(doc.sentences.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const PairGraphs graphs =
            build_pair_graphs(phrases[i], phrases[j], store, doc);
        nlohmann::json jp;
        jp["i"] = i;
        jp["j"] = j;
        jp["graphs"] = nlohmann::json::parse(pair_graphs_json(graphs));
        jd["pairs"].push_back(std::move(jp));
      }
    }
    out["documents"].push_back(std::move(jd));
  }
  return out.dump(2) + "\n";
}

std::string predictions_csv(const TrainedTree& tree,
                            const std::vector<FeatureVector>& vectors) {
  std::string out = "id,predicted_label\n";
  for (const auto& fv : vectors) {
    out += fv.document_id;
    out += ',';
    out += predict(tree, fv);
    out += '\n';
  }
  return out;
}

std::string importances_csv(const std::array<double, 7>& importances) {
  std::string out = "feature,importance\n";
  for (std::size_t i : importance_order(importances)) {
    out += kFeatureNames[i];
    out += ',';
    out += format_real(importances[i]);
    out += '\n';
  }
  return out;
}

std::string importances_svg(const std::array<double, 7>& importances) {
  // Fixed layout: one bar per feature in feature order, scaled to the
  // tallest bar (or to 1 when everything is zero).
  constexpr double width = 640.0, height = 400.0;
  constexpr double left = 60.0, bottom = 340.0, top = 40.0;
  constexpr double bar_width = 60.0, gap = 20.0;
  double peak = 0.0;
  for (double v : importances) peak = std::max(peak, v);
  if (peak <= 0.0) peak = 1.0;

  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
      "height=\"400\" viewBox=\"0 0 640 400\">\n"
      "  <rect width=\"640\" height=\"400\" fill=\"white\"/>\n"
      "  <text x=\"320\" y=\"24\" text-anchor=\"middle\" "
      "font-family=\"sans-serif\" font-size=\"16\">Feature importances"
      "</text>\n";
  for (std::size_t i = 0; i < importances.size(); ++i) {
    const double h = (bottom - top) * (importances[i] / peak);
    const double x = left + static_cast<double>(i) * (bar_width + gap);
    const double y = bottom - h;
    svg += "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
           num(bar_width) + "\" height=\"" + num(h) +
           "\" fill=\"#4878a8\"/>\n";
    svg += "  <text x=\"" + num(x + bar_width / 2) + "\" y=\"" +
           num(y - 6.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           format_real(importances[i]) + "</text>\n";
    svg += "  <text x=\"" + num(x + bar_width / 2) +
           "\" y=\"360\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"12\">" +
           kFeatureNames[i] + "</text>\n";
  }
  svg += "  <line x1=\"" + num(left - 10.0) + "\" y1=\"" + num(bottom) +
         "\" x2=\"" + num(width - 20.0) + "\" y2=\"" + num(bottom) +
         "\" stroke=\"black\"/>\n";
  (void)height;
  svg += "</svg>\n";
  return svg;
}

std::string training_report(const TrainedTree& tree) {
  std::string out =
      "loocv_accuracy " + format_real(tree.loocv_accuracy) + "\n";
  out += "importances (descending):\n";
  for (std::size_t i : importance_order(tree.importances)) {
    out += "  ";
    out += kFeatureNames[i];
    out += ' ';
    out += format_real(tree.importances[i]);
    out += '\n';
  }
  return out;
}

}  // namespace cohgraph
