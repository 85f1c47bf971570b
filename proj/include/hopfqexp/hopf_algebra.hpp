#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfqexp/cyclotomic.hpp"
#include "hopfqexp/matrix.hpp"

namespace hopfqexp {

struct Term {
  std::size_t index;
  Cyclotomic coeff;
};
using SparseVector = std::vector<Term>;

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Cyclotomic coeff;
};

/// Raw structure constants of a finite-dimensional Hopf algebra in a basis b_0..b_{N-1}.
struct HopfStructure {
  std::string name;
  int conductor = 1;
  std::vector<std::string> labels;
  /// mult[i * N + j] = b_i b_j
  std::vector<SparseVector> mult;
  Vector unit;
  /// comult[k] = Delta(b_k) as sum coeff * b_left (x) b_right
  std::vector<std::vector<CoproductTerm>> comult;
  Vector counit;
  /// Column k holds S(b_k).
  Matrix antipode;
  /// Declared grouplike elements (verified by validate, never searched for).
  std::vector<Vector> grouplikes;
  /// Optional Z_+ grading: degree of each basis element.
  std::optional<std::vector<int>> grading;
};

/// Immutable finite-dimensional Hopf algebra over Q(zeta_m) given by structure constants.
///
/// Construction only checks shapes and brings every scalar into the working
/// conductor; the Hopf axioms are checked separately by validate().
///
/// Elements of H are coefficient Vectors of length dim(); elements of H (x) H are
/// dim() x dim() Matrices whose (i, j) entry is the coefficient of b_i (x) b_j.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(HopfStructure s);

  const HopfStructure& structure() const noexcept { return s_; }
  const std::string& name() const noexcept { return s_.name; }
  std::size_t dim() const noexcept { return s_.labels.size(); }
  int conductor() const noexcept { return s_.conductor; }
  const std::vector<std::string>& labels() const noexcept { return s_.labels; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return s_.mult[i * dim() + j]; }
  const std::vector<CoproductTerm>& coproduct(std::size_t k) const { return s_.comult[k]; }
  const Vector& unit() const noexcept { return s_.unit; }
  const Vector& counit() const noexcept { return s_.counit; }
  const Matrix& antipode() const noexcept { return s_.antipode; }
  /// S^{-1}, absent when S is singular (validate reports it).
  const std::optional<Matrix>& antipode_inverse() const noexcept { return antipode_inv_; }
  const std::vector<Vector>& grouplikes() const noexcept { return s_.grouplikes; }
  const std::optional<std::vector<int>>& grading() const noexcept { return s_.grading; }

  HopfAlgebra renamed(std::string name) const;
  HopfAlgebra with_grouplikes(std::vector<Vector> grouplikes) const;
  HopfAlgebra with_grading(std::optional<std::vector<int>> grading) const;

  Vector basis(std::size_t i) const;
  Vector one() const { return s_.unit; }
  Cyclotomic zero_scalar() const { return Cyclotomic::zero(s_.conductor); }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector power(const Vector& a, std::size_t k) const;
  Matrix comultiply(const Vector& a) const;
  Cyclotomic counit_of(const Vector& a) const;
  Vector apply_antipode(const Vector& a) const;
  Vector apply_antipode_inverse(const Vector& a) const;
  /// S^k for any integer k (negative powers use S^{-1}).
  Matrix antipode_power(long k) const;

  /// Matrix of left multiplication by a.
  Matrix left_multiplication(const Vector& a) const;

  Matrix tensor_one() const;
  Matrix outer(const Vector& a, const Vector& b) const;
  /// Product in the algebra H (x) H.
  Matrix multiply_tensor(const Matrix& x, const Matrix& y) const;
  /// (f (x) g)(X) for linear maps f, g given as matrices acting on columns.
  static Matrix apply_legs(const Matrix& f, const Matrix& g, const Matrix& x);
  /// m(X) = sum X_ij b_i b_j and m_21(X) = sum X_ij b_j b_i.
  Vector contract(const Matrix& x) const;
  Vector contract_flipped(const Matrix& x) const;

 private:
  void check_element(const Vector& a) const;
  void check_tensor(const Matrix& x) const;

  HopfStructure s_;
  std::optional<Matrix> antipode_inv_;
};

/// Named axiom violations; empty means H is a Hopf algebra with verified grouplikes and grading.
std::vector<std::string> validate(const HopfAlgebra& h);

HopfAlgebra dual(const HopfAlgebra& h);

enum class Variant { op, cop, op_cop };
HopfAlgebra variant(const HopfAlgebra& h, Variant which);

HopfAlgebra tensor(const HopfAlgebra& a, const HopfAlgebra& b);

/// Same algebra with every scalar written in Q(zeta_target).
HopfAlgebra lift_conductor(const HopfAlgebra& h, int target);

/// Smallest k <= bound with (S^2)^k = Id; throws BoundExceeded.
long s2_order(const HopfAlgebra& h, long bound = 1000);

bool is_grouplike(const HopfAlgebra& h, const Vector& g);
/// Smallest k >= 1 with g^k = 1; throws BoundExceeded.
long element_order(const HopfAlgebra& h, const Vector& g, long bound = 1000);
/// lcm of the orders of the given grouplike elements.
long group_exponent(const HopfAlgebra& h, const std::vector<Vector>& group, long bound = 1000);
/// Violations of the grouplike set invariants: each member grouplike, closed under products and inverses.
std::vector<std::string> verify_grouplike_set(const HopfAlgebra& h, const std::vector<Vector>& group);

/// Smallest Hopf subalgebra containing the generators, in the basis formed by
/// 1, the independent generators, and the further closure vectors.
HopfAlgebra subalgebra_closure(const HopfAlgebra& h, const std::vector<Vector>& generators);

}  // namespace hopfqexp
