#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace readengine {

// Root of every error the library throws. `kind()` is a stable short tag used
// in machine-readable diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// A required file or directory is missing or unreadable.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource_error"; }
};

class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const char* kind() const noexcept override { return "parse_error"; }
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Cross-reference failure inside a loaded resource (dangling pointer, unknown id).
class IntegrityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "integrity_error"; }
};

class ArgumentError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "argument_error"; }
};

// Input is well-formed but admits no meaningful statistic or fit.
class DegenerateError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate_error"; }
};

// Experiment or dataset content is inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "data_error"; }
};

class UnsupportedDimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
  const char* kind() const noexcept override { return "unsupported_dimension"; }
};

}  // namespace readengine
