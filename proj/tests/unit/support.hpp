#pragma once

#include <filesystem>
#include <string>

#include <unistd.h>

#include "readengine/features.hpp"

namespace readengine::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(READENGINE_FIXTURE_DIR) / name;
}

inline std::filesystem::path resource(const std::string& name) {
  return std::filesystem::path(READENGINE_RESOURCE_DIR) / name;
}

// Loaded once per process.
inline const ResourceBundle& mini_bundle() {
  static const ResourceBundle b = ResourceBundle::load(fixture("wordnet-mini"), fixture("sentiwordnet-mini.txt"),
                                                       fixture("frequency-mini.tsv"));
  return b;
}

inline const ResourceBundle& full_bundle() {
  static const ResourceBundle b = ResourceBundle::load(resource("wordnet-3.0"), resource("SentiWordNet_3.0.0.txt"),
                                                       resource("subtlex-us.tsv"));
  return b;
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("readengine-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace readengine::testing
