#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "hopfqexp/cyclotomic.hpp"
#include "hopfqexp/hopf_algebra.hpp"
#include "hopfqexp/matrix.hpp"

namespace hopfqexp::testing {

/// Image of x under the embedding zeta_m -> exp(2 pi i / m), evaluated in doubles.
inline std::complex<double> to_complex(const Cyclotomic& x) {
  const int m = x.conductor();
  const auto coeffs = x.coeffs();
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / m);
  std::complex<double> acc = 0.0, power = 1.0;
  for (const auto& c : coeffs) {
    acc += c.get_d() * power;
    power *= z;
  }
  return acc;
}

inline Cyclotomic random_cyclotomic(std::mt19937& rng, int conductor, int spread = 5) {
  std::uniform_int_distribution<int> num(-spread, spread);
  std::uniform_int_distribution<int> den(1, spread);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(conductor)));
  for (auto& r : c) {
    r = Rational(num(rng), den(rng));
    r.canonicalize();
  }
  return Cyclotomic(conductor, std::move(c));
}

inline Vector random_element(std::mt19937& rng, const HopfAlgebra& h, int spread = 3) {
  Vector v(h.dim());
  for (auto& x : v) x = random_cyclotomic(rng, h.conductor(), spread);
  return v;
}

/// Multiplication H (x) H -> H as a dense N x N^2 matrix, column i * N + j = b_i b_j.
inline Matrix dense_multiplication(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : h.product(i, j)) m(t.index, i * n + j) += t.coeff;
  return m;
}

/// Comultiplication H -> H (x) H as a dense N^2 x N matrix.
inline Matrix dense_comultiplication(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix d(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : h.coproduct(k)) d(t.left * n + t.right, k) += t.coeff;
  return d;
}

/// Product in H of two elements computed from the dense table alone.
inline Vector dense_product(const HopfAlgebra& h, const Vector& a, const Vector& b) {
  const std::size_t n = h.dim();
  Vector ab(n * n, Cyclotomic::zero(h.conductor()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ab[i * n + j] = a[i] * b[j];
  return dense_multiplication(h) * ab;
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Cyclotomic(0));
  v[i] = Cyclotomic(1);
  return v;
}

}  // namespace hopfqexp::testing
