#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

// Bad input to an operation: non-finite angles, probabilities outside [0, 1],
// unnormalized distributions, mismatched grids.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The walker's light cone would leave the allocated lattice.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A value falls outside the validated domain of a theory function.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Too few usable sites for a profile fit.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All probability sits on a single site; no decay can be fitted.
class DegenerateProfile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : std::runtime_error(Format(line, field, what)),
        line_(line),
        field_(std::move(field)) {}

  // 1-based line of the offending token, 0 when unknown.
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string Format(std::size_t line, const std::string& field,
                            const std::string& what) {
    std::string msg = "parse error";
    if (line > 0) msg += " at line " + std::to_string(line);
    if (!field.empty()) msg += " in field '" + field + "'";
    return msg + ": " + what;
  }

  std::size_t line_;
  std::string field_;
};

// Invalid run configuration; key() names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what),
        key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace qwalk
