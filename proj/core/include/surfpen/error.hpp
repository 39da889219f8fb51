#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfpen {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation outside the mathematical domain of an expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Curvature vanished where a Frenet frame was required.
class FrenetUndefined : public Error {
 public:
  explicit FrenetUndefined(double s)
      : Error("Frenet frame undefined (curvature vanishes) at s = " + std::to_string(s)), s_(s) {}

  double s() const noexcept { return s_; }

 private:
  double s_;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class IsoparametricViolated : public Error {
 public:
  using Error::Error;
};

/// Bad configuration file or option; `line` is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace surfpen
