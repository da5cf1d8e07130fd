#pragma once

#include <stdexcept>
#include <string>

namespace qtunnel {

/// Raised when an operation receives arguments outside its domain
/// (bad qubit index, wrong length, non-normalized state, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the experiment configuration loader. `line()` is 0 when the
/// problem is not tied to a single line (e.g. a missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qtunnel
