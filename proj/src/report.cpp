#include "readengine/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "json_util.hpp"
#include "readengine/error.hpp"

namespace readengine {

using nlohmann::json;

namespace {

void write_json(const json& value, std::string& out) {
  switch (value.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write_json(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ',';
        write_json(value[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double d = value.get<double>();
      out += std::isfinite(d) ? format_number(d) : "null";
      break;
    }
    default:
      out += value.dump();
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json test_fields(const std::optional<TestResult>& r) {
  if (!r) return {{"statistic", nullptr}, {"df", nullptr}, {"p", nullptr}};
  return {{"statistic", r->statistic}, {"df", r->df}, {"p", r->p_value}};
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string optional_csv(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

[[noreturn]] void unsupported(std::string_view kind, OutputFormat format) {
  static constexpr const char* kNames[] = {"json", "csv", "text"};
  throw ArgumentError(std::string(kind) + " reports cannot be rendered as " + kNames[static_cast<int>(format)]);
}

// ---- classification metrics ----

std::string render(const ClassificationMetrics& m, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return canonical_json({{"tp", m.tp}, {"fp", m.fp}, {"fn", m.fn}, {"tn", m.tn}, {"accuracy", m.accuracy},
                             {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1},
                             {"degenerate", m.degenerate}}) + "\n";
    case OutputFormat::csv:
      return "tp,fp,fn,tn,accuracy,precision,recall,f1\n" + std::to_string(m.tp) + "," + std::to_string(m.fp) + "," +
             std::to_string(m.fn) + "," + std::to_string(m.tn) + "," + format_number(m.accuracy) + "," +
             format_number(m.precision) + "," + format_number(m.recall) + "," + format_number(m.f1) + "\n";
    case OutputFormat::text: {
      char buf[512];
      std::snprintf(buf, sizeof buf,
                    "TP %llu  FP %llu  FN %llu  TN %llu\naccuracy  %.3f\nprecision %.3f\nrecall    %.3f\nf1        %.3f\n%s",
                    static_cast<unsigned long long>(m.tp), static_cast<unsigned long long>(m.fp),
                    static_cast<unsigned long long>(m.fn), static_cast<unsigned long long>(m.tn), m.accuracy,
                    m.precision, m.recall, m.f1, m.degenerate ? "(some ratios had a zero denominator)\n" : "");
      return buf;
    }
  }
  unsupported("metrics", format);
}

// ---- study 1 ----

std::string render(const Study1Report& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json tests = json::array();
      for (const auto& row : r.rows) {
        json item = test_fields(row.result);
        item["dimension"] = to_string(row.dimension);
        item["pair_id"] = row.pair_id;
        item["significant"] = row.significant;
        tests.push_back(std::move(item));
      }
      json fractions = json::object();
      for (const auto& [d, f] : r.fraction_significant) fractions[std::string(to_string(d))] = f;
      json correlations = json::array();
      for (const auto& c : r.correlations) {
        correlations.push_back({{"dimension_a", to_string(c.first)},
                                {"dimension_b", to_string(c.second)},
                                {"r", c.result ? json(c.result->statistic) : json(nullptr)},
                                {"df", c.result ? json(c.result->df) : json(nullptr)},
                                {"p", c.result ? json(c.result->p_value) : json(nullptr)}});
      }
      json associations = json::array();
      for (const auto& a : r.associations) {
        json item = test_fields(a.result);
        item["dimension_a"] = to_string(a.first);
        item["dimension_b"] = to_string(a.second);
        item["table"] = {a.table.a, a.table.b, a.table.c, a.table.d};
        item["significant"] = a.significant;
        associations.push_back(std::move(item));
      }
      return canonical_json({{"mode", "study1"},
                             {"alpha", r.alpha},
                             {"pairs", r.pair_count},
                             {"tests", tests},
                             {"fraction_significant", fractions},
                             {"correlations", correlations},
                             {"associations", associations},
                             {"cronbach_alpha", optional_number(r.ues_cronbach_alpha)}}) + "\n";
    }
    case OutputFormat::csv: {
      std::string out = "dimension,pair_id,statistic,df,p,significant\n";
      for (const auto& row : r.rows) {
        out += std::string(to_string(row.dimension)) + "," + csv_field(row.pair_id) + ",";
        out += row.result ? format_number(row.result->statistic) + "," + format_number(row.result->df) + "," +
                                format_number(row.result->p_value)
                          : std::string(",,");
        out += row.significant ? ",1\n" : ",0\n";
      }
      return out;
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "Study 1: " << r.pair_count << " word pairs, alpha " << format_number(r.alpha) << "\n";
      for (const auto& [d, f] : r.fraction_significant) {
        os << "  " << to_string(d) << ": " << format_number(100.0 * f) << "% of pairs significant\n";
      }
      if (r.ues_cronbach_alpha) os << "  UES Cronbach's alpha: " << format_number(*r.ues_cronbach_alpha) << "\n";
      os << "Correlations over per-word rates:\n";
      for (const auto& c : r.correlations) {
        os << "  " << to_string(c.first) << " ~ " << to_string(c.second) << ": ";
        if (c.result) {
          os << "r(" << format_number(c.result->df) << ") = " << format_number(c.result->statistic)
             << ", p = " << format_number(c.result->p_value) << "\n";
        } else {
          os << "undefined (zero variance)\n";
        }
      }
      os << "Associations between significance indicators:\n";
      for (const auto& a : r.associations) {
        os << "  " << to_string(a.first) << " x " << to_string(a.second) << ": ";
        if (a.result) {
          os << "chi2(1) = " << format_number(a.result->statistic) << ", p = " << format_number(a.result->p_value)
             << (a.significant ? " *" : "") << "\n";
        } else {
          os << "undefined (zero marginal)\n";
        }
      }
      return os.str();
    }
  }
  unsupported("study1", format);
}

// ---- study 3 ----

std::string render(const Study3Report& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json metrics = json::array();
      for (const auto& m : r.metrics) {
        metrics.push_back({{"metric", m.metric},
                           {"t", m.test ? json(m.test->statistic) : json(nullptr)},
                           {"df", m.test ? json(m.test->df) : json(nullptr)},
                           {"p", m.test ? json(m.test->p_value) : json(nullptr)},
                           {"mean_original", m.mean_original},
                           {"sd_original", m.sd_original},
                           {"mean_modified", m.mean_modified},
                           {"sd_modified", m.sd_modified},
                           {"significant", m.significant},
                           {"status", m.status}});
      }
      return canonical_json({{"mode", "study3"}, {"alpha", r.alpha}, {"metrics", metrics}}) + "\n";
    }
    case OutputFormat::csv: {
      std::string out = "metric,t,df,p,mean_original,sd_original,mean_modified,sd_modified,significant,status\n";
      for (const auto& m : r.metrics) {
        out += m.metric + ",";
        out += m.test ? format_number(m.test->statistic) + "," + format_number(m.test->df) + "," +
                            format_number(m.test->p_value)
                      : std::string(",,");
        out += "," + format_number(m.mean_original) + "," + format_number(m.sd_original) + "," +
               format_number(m.mean_modified) + "," + format_number(m.sd_modified) + "," +
               (m.significant ? "1" : "0") + "," + m.status + "\n";
      }
      return out;
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "Metric              T         P          Mean(O)  SD(O)    Mean(M)  SD(M)\n";
      for (const auto& m : r.metrics) {
        char buf[256];
        if (m.test) {
          std::snprintf(buf, sizeof buf, "%-18s  %-8.3f  %-9.3g  %-7.2f  %-7.2f  %-7.2f  %-7.2f %s\n", m.metric.c_str(),
                        m.test->statistic, m.test->p_value, m.mean_original, m.sd_original, m.mean_modified,
                        m.sd_modified, m.significant ? "*" : "");
        } else {
          std::snprintf(buf, sizeof buf, "%-18s  %-8s  %-9s  %-7.2f  %-7.2f  %-7.2f  %-7.2f %s\n", m.metric.c_str(), "-",
                        "-", m.mean_original, m.sd_original, m.mean_modified, m.sd_modified, m.status.c_str());
        }
        os << buf;
      }
      return os.str();
    }
  }
  unsupported("study3", format);
}

// ---- batch tables ----

std::string render(const FeatureTable& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "word";
      for (Feature f : kAllFeatures) out += "," + std::string(feature_name(f));
      out += "\n";
      for (std::size_t i = 0; i < t.words.size(); ++i) {
        out += csv_field(t.words[i]);
        for (Feature f : kAllFeatures) out += "," + format_number(t.features[i].get(f));
        out += "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      json rows = json::array();
      for (std::size_t i = 0; i < t.words.size(); ++i) {
        json row = {{"word", t.words[i]}};
        for (Feature f : kAllFeatures) row[std::string(feature_name(f))] = t.features[i].get(f);
        rows.push_back(std::move(row));
      }
      return canonical_json(rows) + "\n";
    }
    case OutputFormat::text:
      break;
  }
  unsupported("feature", format);
}

std::string render(const ScoreTable& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "word,score\n";
      for (std::size_t i = 0; i < t.words.size(); ++i) out += csv_field(t.words[i]) + "," + format_number(t.scores[i]) + "\n";
      return out;
    }
    case OutputFormat::json: {
      json rows = json::array();
      for (std::size_t i = 0; i < t.words.size(); ++i) rows.push_back({{"word", t.words[i]}, {"score", t.scores[i]}});
      return canonical_json(rows) + "\n";
    }
    case OutputFormat::text:
      break;
  }
  unsupported("score", format);
}

std::string render(const RewriteBatch& b, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = "original,modified,n_substitutions,original_mean_score,modified_mean_score\n";
      for (const auto& r : b.results) {
        out += csv_field(r.original_text) + "," + csv_field(r.modified_text) + "," +
               std::to_string(r.substitutions.size()) + "," + optional_csv(r.original_mean_score) + "," +
               optional_csv(r.modified_mean_score) + "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      json titles = json::array();
      for (std::size_t i = 0; i < b.results.size(); ++i) {
        json subs = json::array();
        for (const auto& s : b.results[i].substitutions) {
          subs.push_back({{"original", s.original},
                          {"replacement", s.replacement},
                          {"shared_synset", to_string(s.shared_synset)},
                          {"original_score", s.original_score},
                          {"replacement_score", s.replacement_score},
                          {"delta", s.delta}});
        }
        titles.push_back({{"index", i}, {"original", b.results[i].original_text}, {"substitutions", subs}});
      }
      return canonical_json(titles) + "\n";
    }
    case OutputFormat::text: {
      std::ostringstream os;
      for (const auto& r : b.results) {
        os << r.original_text << "\n  -> " << r.modified_text << "\n";
        for (const auto& s : r.substitutions) {
          os << "     " << s.original << " -> " << s.replacement << " (" << to_string(s.shared_synset) << ", +"
             << format_number(s.delta) << ")\n";
        }
      }
      return os.str();
    }
  }
  unsupported("rewrite", format);
}

std::vector<double> column(const std::vector<const WordExposure*>& words, double (WordExposure::*rate)() const) {
  std::vector<double> out;
  out.reserve(words.size());
  for (const auto* w : words) out.push_back((w->*rate)());
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string canonical_json(const nlohmann::json& value) {
  std::string out;
  write_json(value, out);
  return out;
}

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string emit_report(const Report& report, OutputFormat format) {
  return std::visit([format](const auto& r) { return render(r, format); }, report);
}

Study1Report study1_report(std::span<const ExperimentRecord> records, double alpha) {
  const auto pairs = derive_pairs(records);
  auto analyses = analyze_pairs(records, pairs, alpha);
  std::sort(analyses.begin(), analyses.end(),
            [](const PairAnalysis& a, const PairAnalysis& b) { return a.pair_id < b.pair_id; });

  Study1Report report;
  report.alpha = alpha;
  report.pair_count = analyses.size();
  std::map<Dimension, std::vector<int>> indicators;
  std::vector<const WordExposure*> words;
  for (const auto& pa : analyses) {
    for (const auto& test : pa.tests) {
      report.rows.push_back({test.dimension, pa.pair_id, test.result, test.significant});
      indicators[test.dimension].push_back(test.significant ? 1 : 0);
    }
    words.push_back(&pa.words[0]);
    words.push_back(&pa.words[1]);
  }
  for (Dimension d : kTestedDimensions) {
    const auto& flags = indicators[d];
    const double hits = static_cast<double>(std::count(flags.begin(), flags.end(), 1));
    report.fraction_significant[d] = flags.empty() ? 0.0 : hits / static_cast<double>(flags.size());
  }

  const std::map<Dimension, std::vector<double>> rates = {
      {Dimension::participation, column(words, &WordExposure::selection_rate)},
      {Dimension::perception, column(words, &WordExposure::mean_perception)},
      {Dimension::perseverance, column(words, &WordExposure::recall_rate)},
  };
  const std::pair<Dimension, Dimension> combos[] = {{Dimension::participation, Dimension::perception},
                                                    {Dimension::participation, Dimension::perseverance},
                                                    {Dimension::perception, Dimension::perseverance}};
  for (const auto& [a, b] : combos) {
    CorrelationRow c{a, b, std::nullopt};
    try {
      c.result = pearson_r(rates.at(a), rates.at(b));
    } catch (const DegenerateError&) {
    } catch (const ArgumentError&) {
    }
    report.correlations.push_back(c);

    AssociationRow assoc{a, b, {}, std::nullopt, false};
    const auto& fa = indicators[a];
    const auto& fb = indicators[b];
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (fa[i] && fb[i]) ++assoc.table.a;
      else if (fa[i]) ++assoc.table.b;
      else if (fb[i]) ++assoc.table.c;
      else ++assoc.table.d;
    }
    try {
      assoc.result = chi_square_2x2(assoc.table);
      assoc.significant = assoc.result->p_value < alpha;
    } catch (const DegenerateError&) {
    }
    report.associations.push_back(assoc);
  }

  if (records.size() >= 2) {
    std::vector<std::vector<double>> items;
    items.reserve(records.size());
    for (const auto& rec : records) {
      std::vector<double> row(rec.ues_items.size());
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = (i % 2 == 1) ? 6 - rec.ues_items[i] : rec.ues_items[i];
      items.push_back(std::move(row));
    }
    try {
      report.ues_cronbach_alpha = cronbach_alpha(items);
    } catch (const DegenerateError&) {
    }
  }
  return report;
}

Study3Report study3_report(std::span<const TitlePairRecord> records, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("alpha must be in (0, 1)");
  std::map<std::string, std::pair<const TitlePairRecord*, const TitlePairRecord*>> pairs;
  std::vector<std::string> orphans;
  for (const auto& r : records) {
    auto& slot = pairs[r.pair_id];
    auto& side = r.variant == TitleVariant::original ? slot.first : slot.second;
    if (side != nullptr) orphans.push_back(r.pair_id + " (duplicate variant)");
    side = &r;
  }
  for (const auto& [id, p] : pairs) {
    if (p.first == nullptr) orphans.push_back(id + " (no original)");
    if (p.second == nullptr) orphans.push_back(id + " (no modified)");
  }
  if (!orphans.empty()) {
    std::string msg = "unpaired study3 records:";
    for (const auto& o : orphans) msg += " " + o;
    throw DataError(msg);
  }
  if (pairs.size() < 2) throw DataError("study3 needs at least two title pairs");

  struct Extractor {
    const char* name;
    double TitlePairRecord::*field;
  };
  const Extractor extractors[] = {{"selection_rate", &TitlePairRecord::selection_rate},
                                  {"evaluation_avg", &TitlePairRecord::evaluation_avg},
                                  {"retention_rate", &TitlePairRecord::retention_rate}};
  Study3Report report;
  report.alpha = alpha;
  for (const auto& ex : extractors) {
    std::vector<double> original;
    std::vector<double> modified;
    for (const auto& [id, p] : pairs) {
      original.push_back(p.first->*ex.field);
      modified.push_back(p.second->*ex.field);
    }
    Study3Metric m;
    m.metric = ex.name;
    m.pairs = pairs.size();
    m.mean_original = mean(original);
    m.sd_original = sample_sd(original);
    m.mean_modified = mean(modified);
    m.sd_modified = sample_sd(modified);
    try {
      m.test = paired_t_test(original, modified);
      m.significant = m.test->p_value < alpha;
      m.status = "ok";
    } catch (const DegenerateError&) {
      m.status = "no effect";
    }
    report.metrics.push_back(std::move(m));
  }
  return report;
}

}  // namespace readengine
