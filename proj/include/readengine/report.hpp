#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "readengine/experiment.hpp"
#include "readengine/model.hpp"
#include "readengine/rewrite.hpp"
#include "readengine/stats.hpp"

namespace readengine {

struct PairDimensionRow {
  Dimension dimension = Dimension::participation;
  std::string pair_id;
  std::optional<TestResult> result;  // empty for a degenerate table
  bool significant = false;
};

struct CorrelationRow {
  Dimension first = Dimension::participation;
  Dimension second = Dimension::perception;
  std::optional<TestResult> result;
};

// Association between the per-pair significance indicators of two dimensions.
struct AssociationRow {
  Dimension first = Dimension::participation;
  Dimension second = Dimension::perception;
  ContingencyTable2x2 table;  // [[both, first only], [second only, neither]]
  std::optional<TestResult> result;
  bool significant = false;
};

struct Study1Report {
  double alpha = 0.05;
  std::size_t pair_count = 0;
  std::vector<PairDimensionRow> rows;  // by pair_id, then dimension
  std::map<Dimension, double> fraction_significant;
  std::vector<CorrelationRow> correlations;  // over per-word rates
  std::vector<AssociationRow> associations;
  std::optional<double> ues_cronbach_alpha;
};

struct Study3Metric {
  std::string metric;  // selection_rate, evaluation_avg, retention_rate
  std::size_t pairs = 0;
  double mean_original = 0.0;
  double sd_original = 0.0;
  double mean_modified = 0.0;
  double sd_modified = 0.0;
  std::optional<TestResult> test;  // paired t, modified - original
  bool significant = false;
  std::string status;  // "ok" or "no effect"
};

struct Study3Report {
  double alpha = 0.05;
  std::vector<Study3Metric> metrics;
};

Study1Report study1_report(std::span<const ExperimentRecord> records, double alpha = 0.05);

// Throws DataError listing pair ids without exactly one original and one
// modified record.
Study3Report study3_report(std::span<const TitlePairRecord> records, double alpha = 0.05);

struct FeatureTable {
  std::vector<std::string> words;
  std::vector<ReadFeatures> features;
};

struct ScoreTable {
  std::vector<std::string> words;
  std::vector<double> scores;
};

struct RewriteBatch {
  std::vector<RewriteResult> results;
};

using Report = std::variant<ClassificationMetrics, Study1Report, Study3Report, FeatureTable, ScoreTable, RewriteBatch>;

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> output_format_from_name(std::string_view name);

// JSON is canonical: sorted keys, numbers with at most 6 significant digits.
// Throws ArgumentError for a report kind that has no rendering in `format`.
std::string emit_report(const Report& report, OutputFormat format);

// Six significant digits, shared by CSV and JSON output.
std::string format_number(double value);

}  // namespace readengine
