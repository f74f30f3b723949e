#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpgame {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (DIMACS, game JSON, rational literals).
/// Line and column are 1-based; 0 means "not attributable to a position".
class ParseError : public Error {
public:
  explicit ParseError(const std::string& message, int line = 0, int column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  int line_ = 0;
  int column_ = 0;
};

/// Structurally unusable data: invalid games, strategies that do not fit a
/// game, zero denominators and the like.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configurable size guard was exceeded.  Carries the computed dimensions
/// so callers can report the blowup without materializing it.
class SizeCapError : public Error {
public:
  SizeCapError(const std::string& message, std::vector<std::string> dimensions,
               std::string total)
      : Error(message), dimensions_(std::move(dimensions)), total_(std::move(total)) {}

  /// Per-player counts, already rendered as decimal strings.
  const std::vector<std::string>& dimensions() const { return dimensions_; }
  /// Product of the dimensions, rendered as a decimal string.
  const std::string& total() const { return total_; }

private:
  std::vector<std::string> dimensions_;
  std::string total_;
};

}  // namespace cpgame
