#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfqexp/cyclotomic.hpp"
#include "hopfqexp/polynomial.hpp"

namespace hopfqexp {

using Vector = std::vector<Cyclotomic>;

bool is_zero_vector(const Vector& v);
Vector scaled(const Vector& v, const Cyclotomic& s);
/// a += s * b
void axpy(Vector& a, const Cyclotomic& s, const Vector& b);

/// Dense row-major matrix over a cyclotomic field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Cyclotomic>& entries() const noexcept { return a_; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclotomic& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix pow(std::size_t k) const;
  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyclotomic> a_;
};

/// Kronecker product; row index (i, k) maps to i * b.rows() + k, column likewise.
Matrix kron(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Incrementally grown linearly independent family with exact elimination.
///
/// Rows are kept in semi-echelon form (first-nonzero pivoting) together with
/// their expression in terms of the accepted members, so membership queries
/// also return coordinates.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t length) : length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vector>& members() const noexcept { return members_; }

  /// Adds v if it is independent of the current members; returns whether it was added.
  bool insert(const Vector& v);
  /// Coordinates of v over members() if v lies in the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

 private:
  // Reduces v in place, accumulating the member combination that was subtracted.
  void reduce(Vector& v, Vector& combo) const;

  std::size_t length_;
  std::vector<Vector> members_;
  std::vector<Vector> rows_;     // semi-echelon rows, pivot entry 1
  std::vector<Vector> combos_;   // rows_[r] = sum combos_[r][k] * members_[k]
  std::vector<std::size_t> pivots_;
};

Vector vectorize(const Matrix& m);

/// Coefficients c with candidate = sum c_i targets_i, or nullopt ("independent").
std::optional<Vector> solve_in_span(const std::vector<Matrix>& targets, const Matrix& candidate);

/// Monic polynomial of least degree annihilating a sequence v_0, v_1, ...
/// where v_k stands for A^k: the first linear dependence among the terms.
/// `next` maps v_k to v_{k+1}. Gives up (throws BoundExceeded) after max_degree terms.
Polynomial minimal_dependence(const Vector& start, const std::function<Vector(const Vector&)>& next,
                              std::size_t max_degree);

/// Minimal polynomial by iterating solve_in_span over I, A, A^2, ...
Polynomial minimal_polynomial(const Matrix& a);

bool is_nilpotent(const Matrix& a);

}  // namespace hopfqexp
