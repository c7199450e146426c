#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "readengine/report.hpp"

namespace readengine::cli {

struct Config {
  std::filesystem::path wordnet_dir;
  std::filesystem::path sentiwordnet_path;
  std::filesystem::path frequency_path;
  std::string default_model = "ie";  // dimension name or artifact path
  double alpha = 0.05;
  std::uint64_t seed = 42;
  std::optional<OutputFormat> output_format;

  // Flat key=value file; '#' starts a comment. Relative paths resolve against
  // the file's directory.
  static Config load(const std::filesystem::path& path);
};

// Resource locations chosen at build time, if any.
Config default_config();

struct CommandOutcome {
  int exit_code = 0;  // 0 ok, 1 usage or data error, 2 resource or IO error
  std::optional<std::filesystem::path> report_path;
};

// `args` excludes the program name. Primary output goes to `out`, or to the
// --output file; diagnostics go to `err` as one JSON line.
CommandOutcome run_command(const std::vector<std::string>& args, const Config& config, std::ostream& out,
                           std::ostream& err);

}  // namespace readengine::cli
