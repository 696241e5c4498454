#pragma once

#include <stdexcept>
#include <string>

namespace ktg {

/// Base class for every error raised by the library. `module()` names the
/// component whose contract was violated so front ends can report it.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// exactring
struct DivisionNotExact : Error {
  explicit DivisionNotExact(const std::string& w) : Error("exactring", "division not exact: " + w) {}
};
struct DivisionByZero : Error {
  DivisionByZero() : Error("exactring", "division by zero polynomial") {}
};
struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& w) : Error("exactring", "zero polynomial: " + w) {}
};

// qblocks
struct InadmissibleTriple : Error {
  explicit InadmissibleTriple(const std::string& w) : Error("qblocks", "inadmissible triple " + w) {}
};

// ktgcalc
struct SyntaxError : Error {
  SyntaxError(int line, int column, const std::string& w)
      : Error("ktgcalc", "syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + w),
        line(line),
        column(column) {}
  int line;
  int column;
};
struct UnknownTarget : Error {
  explicit UnknownTarget(const std::string& w) : Error("ktgcalc", "unknown target " + w) {}
};
struct DegreeViolation : Error {
  explicit DegreeViolation(const std::string& w) : Error("ktgcalc", "degree violation: " + w) {}
};
struct UnzipOnLoop : Error {
  explicit UnzipOnLoop(const std::string& w) : Error("ktgcalc", "unzip on loop edge " + w) {}
};
struct NotAKnot : Error {
  explicit NotAKnot(const std::string& w) : Error("ktgcalc", "final graph is not a knot: " + w) {}
};
struct InconsistentColors : Error {
  explicit InconsistentColors(const std::string& w) : Error("ktgcalc", "inconsistent colors: " + w) {}
};
struct BadParams : Error {
  explicit BadParams(const std::string& w) : Error("ktgcalc", "bad knot parameters: " + w) {}
};

// evaluator
struct RealnessViolation : Error {
  explicit RealnessViolation(const std::string& w) : Error("evaluator", "non-real result: " + w) {}
};
struct InadmissiblePoint : Error {
  explicit InadmissiblePoint(const std::string& w) : Error("evaluator", "zero summand at " + w) {}
};

}  // namespace ktg
