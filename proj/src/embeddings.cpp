#include "cohgraph/embeddings.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "cohgraph/errors.hpp"

namespace cohgraph {

namespace {

struct Header {
  long count = 0;
  int dimension = 0;
};

Header parse_header(const std::string& line) {
  std::istringstream in(line);
  Header h;
  if (!(in >> h.count >> h.dimension) || h.count < 0 || h.dimension <= 0) {
    throw FormatError(
        "embeddings: header must be \"<count> <dimension>\", got '" + line +
        "'");
  }
  std::string extra;
  if (in >> extra)
    throw FormatError("embeddings: trailing content after header: '" + extra +
                      "'");
  return h;
}

EmbeddingStore load_text(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  if (!std::getline(in, line))
    throw FormatError("embeddings: empty file, expected header row");
  const Header header = parse_header(line);
  if (header.count == 0)
    throw FormatError("embeddings: vocabulary is empty (count 0)");

  EmbeddingStore store;
  for (long row = 0; row < header.count; ++row) {
    const int line_no = static_cast<int>(row) + 2;  // header is line 1
    if (!std::getline(in, line)) {
      throw FormatError("embeddings: file ends at row " +
                        std::to_string(line_no) + ", header declared " +
                        std::to_string(header.count) + " entries");
    }
    std::istringstream fields(line);
    std::string term;
    if (!(fields >> term))
      throw FormatError("embeddings: row " + std::to_string(line_no) +
                        " is blank");
    std::vector<double> values(header.dimension);
    for (int d = 0; d < header.dimension; ++d) {
      if (!(fields >> values[d])) {
        throw FormatError("embeddings: row " + std::to_string(line_no) +
                          " has fewer than " +
                          std::to_string(header.dimension) + " values");
      }
    }
    std::string extra;
    if (fields >> extra) {
      throw FormatError("embeddings: row " + std::to_string(line_no) +
                        " has more than " + std::to_string(header.dimension) +
                        " values");
    }
    store.insert(term, std::move(values));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw FormatError("embeddings: more rows than the header declared");
  }
  return store;
}

EmbeddingStore load_binary(const std::string& bytes) {
  const auto newline = bytes.find('\n');
  if (newline == std::string::npos)
    throw FormatError("embeddings: missing header row");
  const Header header = parse_header(bytes.substr(0, newline));
  if (header.count == 0)
    throw FormatError("embeddings: vocabulary is empty (count 0)");

  EmbeddingStore store;
  std::size_t pos = newline + 1;
  for (long row = 0; row < header.count; ++row) {
    while (pos < bytes.size() && (bytes[pos] == '\n' || bytes[pos] == ' '))
      ++pos;  // word2vec writes a newline between entries
    const auto space = bytes.find(' ', pos);
    if (space == std::string::npos) {
      throw FormatError("embeddings: truncated entry " +
                        std::to_string(row + 1) + " of " +
                        std::to_string(header.count));
    }
    std::string term = bytes.substr(pos, space - pos);
    pos = space + 1;
    const std::size_t need = static_cast<std::size_t>(header.dimension) * 4;
    if (pos + need > bytes.size()) {
      throw FormatError("embeddings: entry " + std::to_string(row + 1) +
                        " ('" + term + "') is missing vector bytes");
    }
    std::vector<double> values(header.dimension);
    for (int d = 0; d < header.dimension; ++d) {
      std::uint32_t bits = 0;
      for (int b = 3; b >= 0; --b) {
        bits = (bits << 8) |
               static_cast<unsigned char>(bytes[pos + d * 4 + b]);
      }
      values[d] = static_cast<double>(std::bit_cast<float>(bits));
    }
    pos += need;
    store.insert(term, std::move(values));
  }
  return store;
}

}  // namespace

EmbeddingStore EmbeddingStore::load(const std::string& bytes,
                                    EmbeddingFormat format) {
  return format == EmbeddingFormat::Text ? load_text(bytes)
                                         : load_binary(bytes);
}

const std::vector<double>* EmbeddingStore::lookup(
    const std::string& term) const {
  auto hit = vectors_.find(term);
  if (hit != vectors_.end()) return &hit->second;
  std::string lower = term;
  for (char& c : lower)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower != term) {
    hit = vectors_.find(lower);
    if (hit != vectors_.end()) return &hit->second;
  }
  return nullptr;
}

void EmbeddingStore::insert(const std::string& term,
                            std::vector<double> values) {
  if (dimension_ == 0) {
    dimension_ = static_cast<int>(values.size());
  } else if (static_cast<int>(values.size()) != dimension_) {
    throw ContractViolation("embedding vector for '" + term + "' has length " +
                            std::to_string(values.size()) + ", store holds " +
                            std::to_string(dimension_));
  }
  vectors_[term] = std::move(values);
}

PhraseVector phrase_vector(const Phrase& phrase, const EmbeddingStore& store) {
  PhraseVector out;
  out.values.assign(store.dimension(), 0.0);
  if (phrase.terms.empty()) return out;
  int found = 0;
  for (const auto& term : phrase.terms) {
    if (const auto* vec = store.lookup(term)) {
      for (std::size_t d = 0; d < vec->size(); ++d) out.values[d] += (*vec)[d];
      ++found;
    }
  }
  if (found == 0) return out;  // zero vector, coverage 0
  for (double& v : out.values) v /= found;
  out.coverage = static_cast<double>(found) / phrase.terms.size();
  return out;
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) {
    throw ContractViolation("cosine of vectors with lengths " +
                            std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

}  // namespace cohgraph
