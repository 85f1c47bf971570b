#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hopfqexp {

using Rational = mpq_class;

namespace detail {

/// Arithmetic tables for Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
struct CyclotomicField {
  int conductor = 1;
  int degree = 1;                                // phi(m)
  std::vector<long> modulus;                     // Phi_m, lowest degree first
  std::vector<std::vector<long>> high_powers;    // zeta^{degree+k} for k = 0 .. degree-2
  std::vector<std::vector<long>> zeta_powers;    // zeta^k for k = 0 .. m-1
};

/// Interned per-conductor tables; thread safe, entries live for the whole program.
const CyclotomicField& cyclotomic_field(int conductor);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_coefficients(int m);

}  // namespace detail

int euler_phi(int m);
long lcm_of(long a, long b);

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// The canonical form is the coordinate vector in the power basis modulo Phi_m,
/// so equality of two values with the same conductor is coefficient equality.
/// Rational values (all non-constant coordinates zero) embed silently into any
/// field; any other mix of conductors raises ConductorMismatch.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  static Cyclotomic zero(int conductor);
  static Cyclotomic rational(int conductor, const Rational& value);
  /// zeta_m^k for any integer k.
  static Cyclotomic zeta(int conductor, long k = 1);

  int conductor() const noexcept { return field_->conductor; }
  int degree() const noexcept { return field_->degree; }
  /// Power-basis coordinates, always exactly phi(m) of them.
  std::vector<Rational> coeffs() const;
  Rational coeff(int i) const;

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  /// Constant coordinate; meaningful as "the value" only when is_rational().
  Rational rational_part() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// this += a * b without a temporary for the common same-field case.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  /// Multiplicative inverse by extended Euclid against Phi_m.
  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  /// The same number written in Q(zeta_target); target must be a multiple of conductor().
  Cyclotomic lift(int target) const;

  /// Human readable, e.g. "1/2 - 3*z^2" where z is zeta_m.
  std::string to_string() const;

 private:
  Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> c);
  void normalize();
  static const detail::CyclotomicField* common_field(const Cyclotomic& a, const Cyclotomic& b);
  void move_to(const detail::CyclotomicField* field);

  const detail::CyclotomicField* field_;
  std::vector<Rational> c_;  // empty means zero, else length degree()
};

inline Cyclotomic lift_conductor(const Cyclotomic& a, int target) { return a.lift(target); }

/// Parse a rational in "p/q" or "p" form; throws std::invalid_argument.
Rational parse_rational(const std::string& text);
/// Canonical text form "p/q" or "p".
std::string format_rational(const Rational& r);

}  // namespace hopfqexp
