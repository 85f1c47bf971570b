#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfqexp/hopf_algebra.hpp"

namespace hopfqexp {

/// A word in the generators, read left to right.
using Word = std::vector<int>;

struct WordTerm {
  Cyclotomic coeff;
  Word word;
};
using WordExpr = std::vector<WordTerm>;

struct WordTensorTerm {
  Cyclotomic coeff;
  Word left;
  Word right;
};
using WordTensorExpr = std::vector<WordTensorTerm>;

/// Finite-dimensional algebra given by ordered generators, truncation relations
/// and commutation rules, reduced to the PBW basis of nondecreasing words.
///
/// A rule for (later, earlier) rewrites the out-of-order pair "later earlier"
/// as a combination of words. Generators flagged `cyclic` satisfy g^order = 1;
/// the others satisfy g^order = 0.
struct PbwPresentation {
  std::string name;
  int conductor = 1;
  std::vector<std::string> generators;
  std::vector<int> order;
  std::vector<bool> cyclic;
  std::map<std::pair<int, int>, WordExpr> rules;
  /// Exponent vectors of the basis monomials in the desired basis order.
  std::vector<std::vector<int>> basis;
};

class PbwAlgebra {
 public:
  explicit PbwAlgebra(PbwPresentation p);

  const PbwPresentation& presentation() const noexcept { return p_; }
  std::size_t dim() const noexcept { return p_.basis.size(); }
  std::size_t index_of(const std::vector<int>& exponents) const;
  std::string label(std::size_t i) const;

  /// Normal form of a word as basis coordinates.
  Vector straighten(const Word& w) const;
  Vector evaluate(const WordExpr& e) const;
  Matrix evaluate(const WordTensorExpr& e) const;

  /// Assemble the Hopf algebra from generator images; Delta, S, eps are
  /// extended multiplicatively (S anti-multiplicatively) over PBW monomials.
  HopfAlgebra build(const std::vector<WordTensorExpr>& generator_coproducts,
                    const std::vector<WordExpr>& generator_antipodes,
                    const std::vector<Cyclotomic>& generator_counits,
                    std::vector<Vector> grouplikes = {},
                    std::optional<std::vector<int>> grading = std::nullopt) const;

 private:
  Word monomial_word(std::size_t i) const;

  PbwPresentation p_;
  std::map<std::vector<int>, std::size_t> index_;
};

}  // namespace hopfqexp
