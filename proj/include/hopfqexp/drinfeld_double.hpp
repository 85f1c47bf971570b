#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfqexp/hopf_algebra.hpp"

namespace hopfqexp {

/// Multiplication in D(H) = H^{*cop} (x) H without materializing the N^4 table.
///
/// Basis element f_j (x) h_i has index j * N + i (dual index varies slower).
/// The cross relation is
///   (1 (x) h)(f (x) 1) = (h_(1) -> f <- S^{-1}(h_(3))) (x) h_(2),
/// with (h -> f)(x) = f(x h) and (f <- h)(x) = f(h x); it is tabulated once
/// per pair of basis indices.
class DoubleEngine {
 public:
  explicit DoubleEngine(HopfAlgebra h);

  const HopfAlgebra& base() const noexcept { return h_; }
  /// H* with the dual algebra structure (its coalgebra is used reversed inside the double).
  const HopfAlgebra& dual_base() const noexcept { return dual_; }
  std::size_t base_dim() const noexcept { return h_.dim(); }
  std::size_t dim() const noexcept { return h_.dim() * h_.dim(); }
  std::size_t index(std::size_t dual_index, std::size_t primal_index) const noexcept {
    return dual_index * h_.dim() + primal_index;
  }

  Vector one() const;
  /// epsilon (x) h
  Vector embed_primal(const Vector& h) const;
  /// f (x) 1
  Vector embed_dual(const Vector& f) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector power(const Vector& x, std::size_t k) const;
  /// Antipode of D(H): S(f (x) h) = (1 (x) S(h)) (S*^{-1}(f) (x) 1).
  Vector antipode(const Vector& x) const;

  /// u = sum_i S(h_i^*) h_i, written directly in the f (x) h basis.
  Vector drinfeld_element() const;

 private:
  // (1 (x) h_i)(f_l (x) 1) = sum coeff * f_left (x) h_right
  const std::vector<CoproductTerm>& exchange(std::size_t i, std::size_t l) const {
    return exchange_[i * h_.dim() + l];
  }

  HopfAlgebra h_;
  HopfAlgebra dual_;
  std::vector<std::vector<CoproductTerm>> exchange_;
};

/// A quasitriangular Hopf algebra together with its universal R-matrix.
struct QuasitriangularData {
  HopfAlgebra algebra;
  /// Coefficients of R in the basis of D (x) D.
  Matrix r_matrix;
  /// N for a double of an N-dimensional algebra; basis index j * N + i is f_j (x) h_i.
  std::size_t base_dim;
};

/// Full structure constants of D(H) with R = sum_i (epsilon (x) h_i) (x) (f_i (x) 1).
QuasitriangularData drinfeld_double(const HopfAlgebra& h);

/// Named failures among: R invertible, both hexagon identities, Delta^op R = R Delta.
std::vector<std::string> verify_quasitriangular(const QuasitriangularData& d);

/// u = m_21 (Id (x) S)(R) computed from the double's own antipode tensor.
Vector drinfeld_element(const QuasitriangularData& d);

/// True iff u is invertible and S^2(b) = u b u^{-1} for every basis element b.
bool verify_s2_conjugation(const QuasitriangularData& d, const Vector& u);

/// Inverse of a in A, or nullopt if a is not invertible.
std::optional<Vector> element_inverse(const HopfAlgebra& a, const Vector& x);

/// Matrix of left multiplication by a.
inline Matrix regular_representation(const HopfAlgebra& a, const Vector& x) { return a.left_multiplication(x); }

}  // namespace hopfqexp
