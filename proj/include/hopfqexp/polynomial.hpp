#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfqexp/cyclotomic.hpp"

namespace hopfqexp {

/// Univariate polynomial over a cyclotomic field, lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Cyclotomic> coeffs);

  static Polynomial constant(const Cyclotomic& c);
  /// c * x^degree
  static Polynomial monomial(const Cyclotomic& c, std::size_t degree);
  static Polynomial x() { return monomial(Cyclotomic(1), 1); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Cyclotomic>& coeffs() const noexcept { return c_; }
  Cyclotomic coeff(std::size_t i) const;
  const Cyclotomic& leading() const;
  /// Largest conductor among the coefficients (1 for rational polynomials).
  int conductor() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
  bool divides(const Polynomial& other) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Cyclotomic evaluate(const Cyclotomic& at) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Cyclotomic> c_;
};

/// Monic gcd via the remainder sequence; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Phi_m with integer coefficients.
Polynomial cyclotomic_polynomial(int m);

/// f / gcd(f, f'), made monic.
Polynomial squarefree_part(const Polynomial& f);

/// (deg f * phi(m))^2 + 240 where m is the conductor of f's coefficients.
long default_root_order_bound(const Polynomial& f);

/// Smallest n <= bound with f | x^n - 1, i.e. the lcm of the orders of the
/// roots of a squarefree f. nullopt if none exists within the bound.
std::optional<long> root_of_unity_order(const Polynomial& f, std::optional<long> bound = std::nullopt);

}  // namespace hopfqexp
