#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfqexp {

/// Operands live in different cyclotomic fields and neither is rational.
class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes of matrices, tensors or elements do not fit the requested operation.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search with an explicit bound (element order, |S^2|, ...) ran out.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed identity that should hold exactly did not (e.g. two routes disagree).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document; `field` names the offending JSON path.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Well-formed input whose structure constants violate Hopf axioms.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "axiom violations:";
    for (const auto& s : v) out += " [" + s + "]";
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace hopfqexp
