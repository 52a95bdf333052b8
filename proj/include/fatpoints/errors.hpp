#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatpoints {

// Prime too small for the degrees in play, or not prime at all.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial elimination grew past the configured t-degree bound.
class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Independent random trials disagreed; the run must be repeated with other seeds.
class NumericalAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hilbert function has not stabilized at the requested maximal degree.
class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A measured invariant contradicts an exact identity (degree not preserved etc).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace fatpoints
