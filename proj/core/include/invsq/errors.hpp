#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invsq {

// Two anchors coincide, X* or Y* sits on an anchor, or a coaxial
// configuration collapses (zero circle radius, u == v, ...).
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma_T is undefined: y lies (numerically) on the sphere k_T |y - T|^2 = 1.
class SingularLocus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The four anchors used as a Cramer frame are coplanar.
class CoplanarFrame : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A residual term 1/|p - T|^2 was requested with p == T.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The genericity conditions do not hold and the caller did not force the solve.
class ConditionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based; 0 when the error is not tied to a line (e.g. a missing label).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace invsq
