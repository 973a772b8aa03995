#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace benford {

// Bad flags, bad generator parameters, missing columns: the request itself
// is wrong. CLI maps this to its own exit code, distinct from data errors.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The request was fine but the input data was not (malformed line, empty
// sample, unknown node).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// DataError carrying the 1-based line/row number and the offending text.
class ParseError : public DataError {
 public:
  ParseError(std::uint64_t line, const std::string& text, const std::string& reason)
      : DataError("line " + std::to_string(line) + ": " + reason + " [" + text + "]"),
        line_(line),
        text_(text) {}

  std::uint64_t line() const { return line_; }
  const std::string& text() const { return text_; }

 private:
  std::uint64_t line_;
  std::string text_;
};

}  // namespace benford
