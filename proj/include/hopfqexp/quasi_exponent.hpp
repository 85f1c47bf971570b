#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfqexp/drinfeld_double.hpp"
#include "hopfqexp/hopf_algebra.hpp"
#include "hopfqexp/polynomial.hpp"

namespace hopfqexp {

/// m_n : H^{(x)n} -> H as an N x N^n matrix and Delta_n : H -> H^{(x)n} as N^n x N,
/// with m_1 = Delta_1 = Id, m_n = m (m_{n-1} (x) Id), Delta_n = (Delta_{n-1} (x) Id) Delta.
/// For n = 0 they are the unit (N x 1) and the counit (1 x N).
struct IteratedMaps {
  Matrix multiplication;
  Matrix comultiplication;
};
IteratedMaps iterated_maps(const HopfAlgebra& h, std::size_t n);

/// T_n = m_n (Id (x) S^{-2} (x) ... (x) S^{-2n+2}) Delta_n, with T_0(h) = eps(h) 1.
/// Column k of the matrix is T_n(b_k).
Matrix t_map(const HopfAlgebra& h, std::size_t n);
/// T_0, ..., T_{count-1}.
std::vector<Matrix> t_maps(const HopfAlgebra& h, std::size_t count);

/// R_n = R (Id (x) S^2)(R) ... (Id (x) S^{2n-2})(R) with R_0 = 1 (x) 1; computed once and cached.
class RPowers {
 public:
  explicit RPowers(const QuasitriangularData& d);
  const Matrix& operator[](std::size_t n);

 private:
  const QuasitriangularData& d_;
  std::vector<Matrix> cache_;
};

Matrix r_n(const QuasitriangularData& d, std::size_t n);

/// Minimal polynomial of u read off as the first linear relation among T_0, T_1, ...
Polynomial u_min_poly_via_t(const HopfAlgebra& h);

/// Largest dim(H)^2 accepted by the regular-representation route.
inline constexpr std::size_t kRegularRouteEnvelope = 4096;

/// Minimal polynomial of u as an element of D(H): the first relation among
/// 1, u, u^2, ... under multiplication in the double. Left multiplication is
/// faithful, so this is the minimal polynomial of the regular representation of u.
/// Throws DimensionMismatch beyond kRegularRouteEnvelope.
Polynomial u_min_poly_via_regular(const HopfAlgebra& h);

/// Minimal polynomial of x in an algebra with the given product and unit.
Polynomial element_min_poly(const std::function<Vector(const Vector&, const Vector&)>& multiply, const Vector& one,
                            const Vector& x, std::size_t max_degree);

/// True iff the polynomial is a power of (x - 1).
bool is_unipotent_min_poly(const Polynomial& f);

/// Smallest N with f | (x^q - 1)^N, or nullopt if there is none.
std::optional<long> unipotency_index(const Polynomial& f, long q);

struct QexpOptions {
  /// Also compute the regular route and require equality.
  bool cross_check = false;
  /// Root-of-unity search bound; default from the squarefree part.
  std::optional<long> bound;
  long s2_bound = 1000;
};

struct QexpReport {
  std::string name;
  Polynomial min_poly;
  Polynomial squarefree;
  long qexp = 0;
  /// Finite exponent; nullopt means infinite.
  std::optional<long> exponent;
  long s2_order = 0;
  long unipotency_index = 0;
  std::string route;
  bool cross_checked = false;
};

/// Throws BoundExceeded if no root-of-unity order is found and CheckFailure if the routes disagree.
QexpReport quasi_exponent(const HopfAlgebra& h, const QexpOptions& options = {});

/// Smallest N <= max_n with sum_k (-1)^k C(N, k) R_{nk} = 0, if any.
std::optional<std::size_t> alternating_r_sum_witness(RPowers& r, std::size_t n, std::size_t max_n);
std::optional<std::size_t> alternating_r_sum_witness(const QuasitriangularData& d, std::size_t n, std::size_t max_n);

}  // namespace hopfqexp
