#pragma once

// File formats: word lists, CSV tables, study records, labeled datasets and
// model artifacts. Unreadable files raise ResourceError, malformed content
// raises ParseError with the offending line.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readengine/model.hpp"
#include "readengine/stats.hpp"

namespace readengine::io {

std::string read_file(const std::filesystem::path& path);

// Trimmed, non-blank lines.
std::vector<std::string> read_lines(const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // source line of each row

  // Index of a header column, or npos.
  std::size_t column(std::string_view name) const;
};

// RFC 4180 quoting; every row must have as many fields as the header.
CsvTable parse_csv(std::string_view content, const std::string& source);
CsvTable read_csv(const std::filesystem::path& path);

std::string csv_escape(std::string_view field);

std::vector<ExperimentRecord> read_study1_csv(const std::filesystem::path& path);
std::vector<TitlePairRecord> read_study3_csv(const std::filesystem::path& path);

// Label columns must be 0 or 1. Feature columns are optional but, when
// present, all twelve must be.
std::vector<LabeledWord> read_labeled_csv(const std::filesystem::path& path);

// Feature columns are written only when every row carries features.
std::string labeled_csv(std::span<const LabeledWord> rows);

std::string model_to_json(const TrainedModel& model);
// train_config, feature_means and feature_scales may be absent.
TrainedModel model_from_json(std::string_view text, const std::string& source);
TrainedModel read_model(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace readengine::io
