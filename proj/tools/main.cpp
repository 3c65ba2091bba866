// cohgraph — coherence metrics from phrase graphs, with a decision-tree
// classifier on top.
//
// Subcommands:
//   featurize    corpus + embeddings -> feature file (+ diagnostics report)
//   train        feature file -> model JSON, LOOCV report on stdout
//   predict      model + feature file -> predictions CSV
//   importances  model -> importance CSV + SVG bar chart
//
// Exit codes: 0 success, 1 usage, 2 bad input, 3 internal error.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohgraph/classifier.hpp"
#include "cohgraph/corpus.hpp"
#include "cohgraph/embeddings.hpp"
#include "cohgraph/errors.hpp"
#include "cohgraph/feature_io.hpp"
#include "cohgraph/metrics.hpp"
#include "cohgraph/pipeline.hpp"

namespace {

using namespace cohgraph;

struct FeaturizeOptions {
  std::string corpus_path;
  std::string embeddings_path;
  std::string embedding_format = "text";
  int mattr_window = 50;
  std::string foc_mode = "phrase-graph";
  std::string out_path;
  int jobs = 1;
  bool keep_going = false;
  std::string dump_pair_graphs_path;
};

struct TrainOptions {
  std::string features_path;
  std::string model_path;
};

struct PredictOptions {
  std::string features_path;
  std::string model_path;
  std::string out_path;
};

struct ImportancesOptions {
  std::string model_path;
  std::string out_path;
};

// Feature files use CSV unless the path says JSON lines.
bool is_jsonl_path(const std::string& path) {
  return path.ends_with(".jsonl") || path.ends_with(".ndjson");
}

std::vector<FeatureVector> read_features(const std::string& path) {
  const std::string bytes = read_file(path);
  return is_jsonl_path(path) ? parse_features_jsonl(bytes)
                             : parse_features_csv(bytes);
}

// Importance chart lands next to the CSV, same name with an .svg extension.
std::string svg_sibling(const std::string& out_path) {
  const auto slash = out_path.find_last_of("/\\");
  const auto dot = out_path.find_last_of('.');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return out_path + ".svg";
  }
  return out_path.substr(0, dot) + ".svg";
}

int run_featurize(const FeaturizeOptions& opt) {
  const std::string corpus_bytes = read_file(opt.corpus_path);
  std::vector<Document> documents;
  std::vector<std::string> parse_errors;
  if (opt.keep_going) {
    CorpusLoad load = parse_corpus_lenient(corpus_bytes);
    documents = std::move(load.documents);
    parse_errors = std::move(load.errors);
  } else {
    documents = parse_corpus(corpus_bytes);
  }

  const EmbeddingStore store =
      EmbeddingStore::load(read_file(opt.embeddings_path),
                           opt.embedding_format == "binary"
                               ? EmbeddingFormat::Binary
                               : EmbeddingFormat::Text);
  MetricsConfig config;
  config.mattr_window = opt.mattr_window;

  FeaturizeResult result =
      featurize_corpus(documents, store, config, opt.jobs, opt.keep_going);
  result.errors.insert(result.errors.begin(), parse_errors.begin(),
                       parse_errors.end());

  write_file(opt.out_path, is_jsonl_path(opt.out_path)
                               ? write_features_jsonl(result.vectors)
                               : write_features_csv(result.vectors));
  write_file(opt.out_path + ".report.json", diagnostics_report_json(result));
  if (!opt.dump_pair_graphs_path.empty()) {
    write_file(opt.dump_pair_graphs_path,
               corpus_pair_graphs_json(documents, store));
  }
  for (const auto& err : result.errors) {
    std::cerr << "skipped: " << err << '\n';
  }
  return 0;
}

int run_train(const TrainOptions& opt) {
  const std::vector<FeatureVector> vectors = read_features(opt.features_path);

  std::string unlabeled;
  std::set<std::string> classes;
  for (const auto& fv : vectors) {
    if (fv.label) {
      classes.insert(*fv.label);
    } else {
      if (!unlabeled.empty()) unlabeled += ", ";
      unlabeled += "'" + fv.document_id + "'";
    }
  }
  if (!unlabeled.empty())
    throw InputError("unlabeled rows: " + unlabeled);
  if (classes.size() < 2) {
    throw InputError("training needs at least 2 classes, found " +
                     std::to_string(classes.size()));
  }

  const TrainedTree tree = loocv(vectors, GridSpec{});
  write_file(opt.model_path, save_model(tree));
  std::cout << training_report(tree);
  return 0;
}

int run_predict(const PredictOptions& opt) {
  const TrainedTree tree = load_model(read_file(opt.model_path));
  const std::vector<FeatureVector> vectors = read_features(opt.features_path);
  write_file(opt.out_path, predictions_csv(tree, vectors));
  return 0;
}

int run_importances(const ImportancesOptions& opt) {
  const TrainedTree tree = load_model(read_file(opt.model_path));
  write_file(opt.out_path, importances_csv(tree.importances));
  write_file(svg_sibling(opt.out_path), importances_svg(tree.importances));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coherence metrics from phrase graphs, with a decision-tree "
      "classifier"};
  app.require_subcommand(1);

  FeaturizeOptions feat;
  auto* featurize_cmd = app.add_subcommand(
      "featurize", "Compute the seven-feature vector for every document");
  featurize_cmd->add_option("--corpus", feat.corpus_path, "Corpus JSON file")
      ->envname("COHGRAPH_CORPUS")
      ->required();
  featurize_cmd
      ->add_option("--embeddings", feat.embeddings_path,
                   "Word-embedding file")
      ->envname("COHGRAPH_EMBEDDINGS")
      ->required();
  featurize_cmd
      ->add_option("--embedding-format", feat.embedding_format,
                   "Embedding file layout")
      ->check(CLI::IsMember({"text", "binary"}))
      ->envname("COHGRAPH_EMBEDDING_FORMAT")
      ->capture_default_str();
  featurize_cmd
      ->add_option("--mattr-window", feat.mattr_window,
                   "Sliding-window length for MATTR")
      ->check(CLI::PositiveNumber)
      ->envname("COHGRAPH_MATTR_WINDOW")
      ->capture_default_str();
  featurize_cmd
      ->add_option("--foc-mode", feat.foc_mode,
                   "How the weakest-link metric is computed")
      ->check(CLI::IsMember({"phrase-graph"}))
      ->envname("COHGRAPH_FOC_MODE")
      ->capture_default_str();
  featurize_cmd
      ->add_option("--out", feat.out_path,
                   "Feature file to write (.jsonl for JSON lines, else CSV)")
      ->envname("COHGRAPH_OUT")
      ->required();
  featurize_cmd->add_option("--jobs", feat.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->envname("COHGRAPH_JOBS")
      ->capture_default_str();
  featurize_cmd
      ->add_flag("--keep-going", feat.keep_going,
                 "Skip documents that fail validation instead of aborting")
      ->envname("COHGRAPH_KEEP_GOING");
  featurize_cmd
      ->add_option("--dump-pair-graphs", feat.dump_pair_graphs_path,
                   "Also write every sentence pair's graphs as JSON here")
      ->envname("COHGRAPH_DUMP_PAIR_GRAPHS");

  TrainOptions train;
  auto* train_cmd = app.add_subcommand(
      "train", "Grid-search, cross-validate and fit the decision tree");
  train_cmd->add_option("--features", train.features_path, "Feature file")
      ->envname("COHGRAPH_FEATURES")
      ->required();
  train_cmd->add_option("--model", train.model_path, "Model JSON to write")
      ->envname("COHGRAPH_MODEL")
      ->required();

  PredictOptions pred;
  auto* predict_cmd =
      app.add_subcommand("predict", "Classify feature vectors with a model");
  predict_cmd->add_option("--features", pred.features_path, "Feature file")
      ->envname("COHGRAPH_FEATURES")
      ->required();
  predict_cmd->add_option("--model", pred.model_path, "Model JSON to read")
      ->envname("COHGRAPH_MODEL")
      ->required();
  predict_cmd->add_option("--out", pred.out_path, "Predictions CSV to write")
      ->envname("COHGRAPH_OUT")
      ->required();

  ImportancesOptions imp;
  auto* importances_cmd = app.add_subcommand(
      "importances", "Report a model's feature importances (CSV + SVG)");
  importances_cmd->add_option("--model", imp.model_path, "Model JSON to read")
      ->envname("COHGRAPH_MODEL")
      ->required();
  importances_cmd
      ->add_option("--out", imp.out_path,
                   "Importance CSV to write (SVG lands beside it)")
      ->envname("COHGRAPH_OUT")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(featurize_cmd)) return run_featurize(feat);
    if (app.got_subcommand(train_cmd)) return run_train(train);
    if (app.got_subcommand(predict_cmd)) return run_predict(pred);
    return run_importances(imp);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
