#pragma once

#include <stdexcept>
#include <string>

namespace cy5 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (d <= 0, division by zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Cohomology insertion of the wrong H-power, or classes from different rings.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A DegreeSeries was asked for a degree it does not define.
class MissingDegreeError : public Error {
 public:
  MissingDegreeError(int degree, int max_degree)
      : Error("degree " + std::to_string(degree) + " is not defined (series covers 1.." +
              std::to_string(max_degree) + ")"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// Malformed rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structural problem in a GW input file. line() is 1-based, 0 when unknown.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A torus weight choice made some fixed-point denominator vanish.
class WeightDegeneracyError : public Error {
 public:
  using Error::Error;
};

/// The engine re-entered a count that was still being evaluated.
class RecursionCycleError : public Error {
 public:
  using Error::Error;
};

/// Two evaluations of the same count disagreed.
class DeterminismError : public Error {
 public:
  using Error::Error;
};

}  // namespace cy5
