#include "readengine/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "readengine/error.hpp"
#include "readengine/text.hpp"

namespace readengine::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view field, const std::string& source, std::size_t line, std::string_view what) {
  const auto s = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError(source, line, std::string(what) + " is not a number: '" + std::string(field) + "'");
  }
  return value;
}

int parse_int(std::string_view field, const std::string& source, std::size_t line, std::string_view what) {
  const auto s = trim(field);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(source, line, std::string(what) + " is not an integer: '" + std::string(field) + "'");
  }
  return value;
}

bool parse_flag(std::string_view field, const std::string& source, std::size_t line, std::string_view what) {
  const auto s = trim(field);
  if (s == "1") return true;
  if (s == "0") return false;
  throw ParseError(source, line, std::string(what) + " must be 0 or 1, got '" + std::string(field) + "'");
}

std::vector<std::size_t> require_columns(const CsvTable& t, std::span<const std::string_view> names,
                                         const std::string& source) {
  std::vector<std::size_t> idx;
  for (auto name : names) {
    const auto c = t.column(name);
    if (c == std::string::npos) throw ParseError(source, 1, "missing column '" + std::string(name) + "'");
    idx.push_back(c);
  }
  return idx;
}

const json& member(const json& obj, const char* key, const std::string& source) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(source, 1, std::string("missing field '") + key + "'");
  return obj.at(key);
}

double number(const json& v, const char* key, const std::string& source) {
  if (!v.is_number()) throw ParseError(source, 1, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::array<double, kFeatureCount> feature_object(const json& obj, const char* key, const std::string& source) {
  if (!obj.is_object()) throw ParseError(source, 1, std::string("field '") + key + "' must be an object");
  std::array<double, kFeatureCount> out{};
  for (Feature f : kAllFeatures) {
    const std::string name(feature_name(f));
    out[static_cast<std::size_t>(f)] = number(member(obj, name.c_str(), source), name.c_str(), source);
  }
  return out;
}

json feature_json(const std::array<double, kFeatureCount>& values) {
  json obj = json::object();
  for (Feature f : kAllFeatures) obj[std::string(feature_name(f))] = values[static_cast<std::size_t>(f)];
  return obj;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ResourceError("write failed for " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<std::string> lines;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (!t.empty()) lines.emplace_back(t);
  }
  return lines;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::string::npos;
}

CsvTable parse_csv(std::string_view content, const std::string& source) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    const bool blank = record.size() == 1 && trim(record[0]).empty();
    if (!blank) {
      if (table.header.empty()) {
        for (auto& h : record) h = std::string(trim(h));
        table.header = std::move(record);
      } else {
        if (record.size() != table.header.size()) {
          throw ParseError(source, record_line,
                           "expected " + std::to_string(table.header.size()) + " fields, found " +
                               std::to_string(record.size()));
        }
        table.rows.push_back(std::move(record));
        table.line_numbers.push_back(record_line);
      }
    }
    record.clear();
    field_started = false;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = false;
    } else if (c == '\n') {
      end_record();
      record_line = ++line;
    } else if (c == '\r') {
      // tolerated before '\n'
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw ParseError(source, record_line, "unterminated quoted field");
  if (!field.empty() || !record.empty()) end_record();
  if (table.header.empty()) throw ParseError(source, 1, "empty CSV");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path), path.string()); }

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<ExperimentRecord> read_study1_csv(const std::filesystem::path& path) {
  static constexpr std::string_view kColumns[] = {"participant_id", "pair_id", "word", "selected", "ea", "ea_n",
                                                  "fa", "fa_n", "pu", "pu_n", "rw", "rw_n", "recalled"};
  const std::string source = path.string();
  const auto t = read_csv(path);
  const auto idx = require_columns(t, kColumns, source);
  std::vector<ExperimentRecord> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto line = t.line_numbers[r];
    ExperimentRecord rec;
    rec.participant_id = std::string(trim(row[idx[0]]));
    rec.pair_id = std::string(trim(row[idx[1]]));
    rec.word = text::to_lower(trim(row[idx[2]]));
    rec.selected = parse_flag(row[idx[3]], source, line, "selected");
    for (std::size_t k = 0; k < 8; ++k) {
      rec.ues_items[k] = parse_int(row[idx[4 + k]], source, line, kColumns[4 + k]);
      if (rec.ues_items[k] < 1 || rec.ues_items[k] > 5) {
        throw ParseError(source, line, std::string(kColumns[4 + k]) + " must be in 1..5");
      }
    }
    rec.recalled = parse_flag(row[idx[12]], source, line, "recalled");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<TitlePairRecord> read_study3_csv(const std::filesystem::path& path) {
  static constexpr std::string_view kColumns[] = {"pair_id", "variant", "selection_rate", "evaluation_avg",
                                                  "retention_rate"};
  const std::string source = path.string();
  const auto t = read_csv(path);
  const auto idx = require_columns(t, kColumns, source);
  std::vector<TitlePairRecord> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto line = t.line_numbers[r];
    TitlePairRecord rec;
    rec.pair_id = std::string(trim(row[idx[0]]));
    const auto variant = text::to_lower(trim(row[idx[1]]));
    if (variant == "original") {
      rec.variant = TitleVariant::original;
    } else if (variant == "modified") {
      rec.variant = TitleVariant::modified;
    } else {
      throw ParseError(source, line, "variant must be 'original' or 'modified'");
    }
    rec.selection_rate = parse_double(row[idx[2]], source, line, "selection_rate");
    rec.evaluation_avg = parse_double(row[idx[3]], source, line, "evaluation_avg");
    rec.retention_rate = parse_double(row[idx[4]], source, line, "retention_rate");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<LabeledWord> read_labeled_csv(const std::filesystem::path& path) {
  const std::string source = path.string();
  const auto t = read_csv(path);
  const std::string_view word_col[] = {"word"};
  const auto word_idx = require_columns(t, word_col, source)[0];

  std::vector<std::pair<Dimension, std::size_t>> label_cols;
  for (Dimension d : kAllDimensions) {
    const auto c = t.column(to_string(d));
    if (c != std::string::npos) label_cols.emplace_back(d, c);
  }
  if (label_cols.empty()) throw ParseError(source, 1, "no label columns");

  std::vector<std::pair<Feature, std::size_t>> feature_cols;
  for (Feature f : kAllFeatures) {
    const auto c = t.column(feature_name(f));
    if (c != std::string::npos) feature_cols.emplace_back(f, c);
  }
  if (!feature_cols.empty() && feature_cols.size() != kFeatureCount) {
    throw ParseError(source, 1, "feature columns must be all twelve or none");
  }

  std::vector<LabeledWord> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto line = t.line_numbers[r];
    LabeledWord w;
    w.word = std::string(trim(row[word_idx]));
    if (w.word.empty()) throw ParseError(source, line, "empty word");
    for (const auto& [d, c] : label_cols) w.labels[d] = parse_flag(row[c], source, line, to_string(d)) ? 1 : 0;
    if (!feature_cols.empty()) {
      ReadFeatures f;
      for (const auto& [feat, c] : feature_cols) f.set(feat, parse_double(row[c], source, line, feature_name(feat)));
      w.features = f;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string labeled_csv(std::span<const LabeledWord> rows) {
  bool with_features = !rows.empty();
  for (const auto& r : rows) with_features = with_features && r.features.has_value();

  std::string out = "word";
  for (Dimension d : kAllDimensions) out += "," + std::string(to_string(d));
  if (with_features) {
    for (Feature f : kAllFeatures) out += "," + std::string(feature_name(f));
  }
  out += "\n";
  for (const auto& r : rows) {
    out += csv_escape(r.word);
    for (Dimension d : kAllDimensions) {
      const auto it = r.labels.find(d);
      out += (it != r.labels.end() && it->second != 0) ? ",1" : ",0";
    }
    if (with_features) {
      for (Feature f : kAllFeatures) {
        char buf[32];
        std::snprintf(buf, sizeof buf, ",%.17g", r.features->get(f));
        out += buf;
      }
    }
    out += "\n";
  }
  return out;
}

std::string model_to_json(const TrainedModel& model) {
  json weights = json::object();
  for (const auto& [f, w] : model.coefficients.weights) weights[std::string(feature_name(f))] = w;
  const json doc = {
      {"kind", to_string(model.coefficients.kind)},
      {"intercept", model.coefficients.intercept},
      {"weights", weights},
      {"train_config",
       {{"learning_rate", model.config.learning_rate},
        {"iterations", model.config.iterations},
        {"l2_penalty", model.config.l2_penalty},
        {"standardize", model.config.standardize},
        {"seed", model.config.seed}}},
      {"feature_means", feature_json(model.feature_means)},
      {"feature_scales", feature_json(model.feature_scales)},
  };
  return canonical_json(doc) + "\n";
}

TrainedModel model_from_json(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, 1, e.what());
  }
  if (!doc.is_object()) throw ParseError(source, 1, "model artifact must be a JSON object");

  TrainedModel m;
  const auto& kind = member(doc, "kind", source);
  if (kind == "logistic") {
    m.coefficients.kind = ModelKind::logistic;
  } else if (kind == "linear") {
    m.coefficients.kind = ModelKind::linear;
  } else {
    throw ParseError(source, 1, "kind must be 'logistic' or 'linear'");
  }
  m.coefficients.intercept = number(member(doc, "intercept", source), "intercept", source);
  const auto& weights = member(doc, "weights", source);
  if (!weights.is_object()) throw ParseError(source, 1, "weights must be an object");
  for (auto it = weights.begin(); it != weights.end(); ++it) {
    const auto f = feature_from_name(it.key());
    if (!f) throw ParseError(source, 1, "unknown feature '" + it.key() + "' in weights");
    m.coefficients.weights[*f] = number(it.value(), "weights", source);
  }
  if (doc.contains("train_config")) {
    const auto& c = doc["train_config"];
    if (!c.is_object()) throw ParseError(source, 1, "train_config must be an object");
    if (c.contains("learning_rate")) m.config.learning_rate = number(c["learning_rate"], "learning_rate", source);
    if (c.contains("iterations")) m.config.iterations = static_cast<int>(number(c["iterations"], "iterations", source));
    if (c.contains("l2_penalty")) m.config.l2_penalty = number(c["l2_penalty"], "l2_penalty", source);
    if (c.contains("standardize")) {
      if (!c["standardize"].is_boolean()) throw ParseError(source, 1, "standardize must be a boolean");
      m.config.standardize = c["standardize"].get<bool>();
    }
    if (c.contains("seed")) {
      if (!c["seed"].is_number_unsigned()) throw ParseError(source, 1, "seed must be a non-negative integer");
      m.config.seed = c["seed"].get<std::uint64_t>();
    }
  }
  if (doc.contains("feature_means")) m.feature_means = feature_object(doc["feature_means"], "feature_means", source);
  if (doc.contains("feature_scales")) {
    m.feature_scales = feature_object(doc["feature_scales"], "feature_scales", source);
  }
  return m;
}

TrainedModel read_model(const std::filesystem::path& path) { return model_from_json(read_file(path), path.string()); }

}  // namespace readengine::io
