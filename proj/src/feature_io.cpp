#include "cohgraph/feature_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cohgraph/errors.hpp"
#include "json.hpp"

namespace cohgraph {

namespace {

constexpr const char* kCsvHeader =
    "id,label,foc,sem_coh,cohesion,func_w,phrase_w,mattr,bi";

void check_csv_safe(const std::string& value, const std::string& what) {
  if (value.find_first_of(",\"\n\r") != std::string::npos) {
    throw ValidationError(what + " '" + value +
                          "' contains CSV delimiter characters");
  }
}

double parse_real(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError("feature file line " + std::to_string(line_no) +
                     ": '" + field + "' is not a number");
  }
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

void assign_values(FeatureVector& fv, const std::array<double, 7>& values) {
  fv.foc = values[0];
  fv.sem_coh = values[1];
  fv.cohesion = values[2];
  fv.func_w = values[3];
  fv.phrase_w = values[4];
  fv.mattr = values[5];
  fv.bi = values[6];
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string write_features_csv(const std::vector<FeatureVector>& vectors) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& fv : vectors) {
    check_csv_safe(fv.document_id, "document id");
    if (fv.label) check_csv_safe(*fv.label, "label");
    out += fv.document_id;
    out += ',';
    out += fv.label.value_or("");
    for (double v : fv.values()) {
      out += ',';
      out += format_real(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<FeatureVector> parse_features_csv(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("feature file is empty, expected header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw ParseError("feature file header is '" + line + "', expected '" +
                     kCsvHeader + "'");
  }
  std::vector<FeatureVector> vectors;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_fields(line);
    if (fields.size() != 9) {
      throw ParseError("feature file line " + std::to_string(line_no) +
                       ": expected 9 fields, got " +
                       std::to_string(fields.size()));
    }
    FeatureVector fv;
    fv.document_id = fields[0];
    if (!fields[1].empty()) fv.label = fields[1];
    std::array<double, 7> values{};
    for (int i = 0; i < 7; ++i) values[i] = parse_real(fields[2 + i], line_no);
    assign_values(fv, values);
    vectors.push_back(std::move(fv));
  }
  return vectors;
}

std::string write_features_jsonl(const std::vector<FeatureVector>& vectors) {
  std::string out;
  for (const auto& fv : vectors) {
    nlohmann::json j;
    j["id"] = fv.document_id;
    j["label"] = fv.label ? nlohmann::json(*fv.label) : nlohmann::json(nullptr);
    const auto values = fv.values();
    for (std::size_t i = 0; i < kFeatureNames.size(); ++i)
      j[kFeatureNames[i]] = values[i];
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<FeatureVector> parse_features_jsonl(const std::string& bytes) {
  std::vector<FeatureVector> vectors;
  std::istringstream in(bytes);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("feature file line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    FeatureVector fv;
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
      throw ParseError("feature file line " + std::to_string(line_no) +
                       ": missing string field 'id'");
    }
    fv.document_id = j["id"].get<std::string>();
    if (j.contains("label") && !j["label"].is_null()) {
      if (!j["label"].is_string())
        throw ParseError("feature file line " + std::to_string(line_no) +
                         ": field 'label' not a string");
      fv.label = j["label"].get<std::string>();
    }
    std::array<double, 7> values{};
    for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
      const char* name = kFeatureNames[i];
      if (!j.contains(name) || !j[name].is_number()) {
        throw ParseError("feature file line " + std::to_string(line_no) +
                         ": missing numeric field '" + std::string(name) +
                         "'");
      }
      values[i] = j[name].get<double>();
    }
    assign_values(fv, values);
    vectors.push_back(std::move(fv));
  }
  return vectors;
}

}  // namespace cohgraph
