#include "hopfqexp/quasi_exponent.hpp"

#include "hopfqexp/error.hpp"

namespace hopfqexp {

namespace {

Matrix multiplication_matrix(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : h.product(i, j)) m(t.index, i * n + j) = t.coeff;
  return m;
}

Matrix comultiplication_matrix(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix d(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : h.coproduct(k)) d(t.left * n + t.right, k) += t.coeff;
  return d;
}

Matrix counit_projection(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix t0(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!h.unit()[i].is_zero() && !h.counit()[k].is_zero()) t0(i, k) = h.unit()[i] * h.counit()[k];
  return t0;
}

// T_next(b_k) = sum over Delta(b_k) = sum c b_i (x) b_j of c T_prev(b_i) S'(b_j), S' = S^{-2(n-1)}.
Matrix next_t(const HopfAlgebra& h, const Matrix& prev, const Matrix& s_shift) {
  const std::size_t n = h.dim();
  std::vector<Vector> prev_cols(n), shift_cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    prev_cols[i] = prev.column(i);
    shift_cols[i] = s_shift.column(i);
  }
  std::vector<Vector> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vector> right(n);
    for (const auto& t : h.coproduct(k)) {
      if (right[t.left].empty()) right[t.left].assign(n, Cyclotomic());
      axpy(right[t.left], t.coeff, shift_cols[t.right]);
    }
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (right[i].empty() || is_zero_vector(prev_cols[i])) continue;
      const Vector p = h.multiply(prev_cols[i], right[i]);
      for (std::size_t r = 0; r < n; ++r) col[r] += p[r];
    }
    out[k] = std::move(col);
  }
  return Matrix::from_columns(out);
}

// Produces T_0, T_1, ... one at a time.
class TSequence {
 public:
  explicit TSequence(const HopfAlgebra& h) : h_(h), s_minus2_(h.antipode_power(-2)) {}

  Matrix next() {
    const std::size_t n = h_.dim();
    Matrix t;
    if (index_ == 0) {
      t = counit_projection(h_);
    } else if (index_ == 1) {
      t = Matrix::identity(n);
      shift_ = Matrix::identity(n);
    } else {
      shift_ = shift_ * s_minus2_;  // S^{-2(index-1)}
      t = next_t(h_, current_, shift_);
    }
    ++index_;
    current_ = t;
    return t;
  }

 private:
  const HopfAlgebra& h_;
  Matrix s_minus2_;
  Matrix shift_;
  Matrix current_;
  std::size_t index_ = 0;
};

std::size_t checked_power(std::size_t base, std::size_t exp) {
  constexpr std::size_t kLimit = std::size_t{1} << 20;
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > kLimit) throw DimensionMismatch("H^(x)n is too large to materialize");
  }
  return r;
}

}  // namespace

IteratedMaps iterated_maps(const HopfAlgebra& h, std::size_t n) {
  const std::size_t dim = h.dim();
  if (n == 0) {
    Matrix unit(dim, 1), counit(1, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      unit(i, 0) = h.unit()[i];
      counit(0, i) = h.counit()[i];
    }
    return {unit, counit};
  }
  checked_power(dim, n);
  const Matrix m = multiplication_matrix(h), d = comultiplication_matrix(h), id = Matrix::identity(dim);
  IteratedMaps r{Matrix::identity(dim), Matrix::identity(dim)};
  for (std::size_t k = 2; k <= n; ++k) {
    r.multiplication = m * kron(r.multiplication, id);
    r.comultiplication = kron(r.comultiplication, id) * d;
  }
  return r;
}

Matrix t_map(const HopfAlgebra& h, std::size_t n) {
  TSequence seq(h);
  Matrix t;
  for (std::size_t k = 0; k <= n; ++k) t = seq.next();
  return t;
}

std::vector<Matrix> t_maps(const HopfAlgebra& h, std::size_t count) {
  TSequence seq(h);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(seq.next());
  return out;
}

RPowers::RPowers(const QuasitriangularData& d) : d_(d) {
  cache_.push_back(d_.algebra.tensor_one());
}

const Matrix& RPowers::operator[](std::size_t n) {
  const HopfAlgebra& a = d_.algebra;
  while (cache_.size() <= n) {
    const std::size_t k = cache_.size();  // R_k = R_{k-1} (Id (x) S^{2(k-1)})(R)
    const Matrix twisted =
        HopfAlgebra::apply_legs(Matrix::identity(a.dim()), a.antipode_power(2 * static_cast<long>(k - 1)), d_.r_matrix);
    cache_.push_back(a.multiply_tensor(cache_.back(), twisted));
  }
  return cache_[n];
}

Matrix r_n(const QuasitriangularData& d, std::size_t n) {
  RPowers r(d);
  return r[n];
}

Polynomial u_min_poly_via_t(const HopfAlgebra& h) {
  TSequence seq(h);
  const std::size_t n = h.dim();
  return minimal_dependence(
      vectorize(seq.next()), [&](const Vector&) { return vectorize(seq.next()); }, n * n);
}

Polynomial element_min_poly(const std::function<Vector(const Vector&, const Vector&)>& multiply, const Vector& one,
                            const Vector& x, std::size_t max_degree) {
  return minimal_dependence(one, [&](const Vector& v) { return multiply(x, v); }, max_degree);
}

Polynomial u_min_poly_via_regular(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  if (n * n > kRegularRouteEnvelope) {
    throw DimensionMismatch("D(H) has dimension " + std::to_string(n * n) + ", beyond the regular-route envelope of " +
                            std::to_string(kRegularRouteEnvelope) + "; use the T-operator route");
  }
  const DoubleEngine engine(h);
  const Vector u = engine.drinfeld_element();
  return element_min_poly([&](const Vector& a, const Vector& b) { return engine.multiply(a, b); }, engine.one(), u,
                          engine.dim());
}

bool is_unipotent_min_poly(const Polynomial& f) {
  if (f.degree() < 1) return false;
  Polynomial p = Polynomial::constant(Cyclotomic(1));
  const Polynomial x_minus_1({Cyclotomic(-1), Cyclotomic(1)});
  for (long i = 0; i < f.degree(); ++i) p = p * x_minus_1;
  return p == f;
}

std::optional<long> unipotency_index(const Polynomial& f, long q) {
  if (f.degree() < 1 || q < 1) return std::nullopt;
  const Polynomial base = Polynomial::monomial(Cyclotomic(1), static_cast<std::size_t>(q)) -
                          Polynomial::constant(Cyclotomic(1));
  Polynomial p = base;
  for (long k = 1; k <= f.degree(); ++k) {
    if (f.divides(p)) return k;
    p = p * base;
  }
  return std::nullopt;
}

QexpReport quasi_exponent(const HopfAlgebra& h, const QexpOptions& options) {
  QexpReport r;
  r.name = h.name();
  r.min_poly = u_min_poly_via_t(h);
  r.route = "t-operators";
  if (options.cross_check) {
    const Polynomial regular = u_min_poly_via_regular(h);
    if (!(regular == r.min_poly)) {
      throw CheckFailure("routes disagree for " + h.name() + ": T-operators give " + r.min_poly.to_string() +
                         ", the double gives " + regular.to_string());
    }
    r.route = "t-operators+regular";
    r.cross_checked = true;
  }
  r.squarefree = squarefree_part(r.min_poly);
  const auto order = root_of_unity_order(r.squarefree, options.bound);
  if (!order) {
    throw BoundExceeded("the squarefree part " + r.squarefree.to_string() +
                        " of the minimal polynomial of u has no root-of-unity order within the search bound");
  }
  r.qexp = *order;
  if (r.squarefree == r.min_poly) r.exponent = r.qexp;
  r.s2_order = s2_order(h, options.s2_bound);
  r.unipotency_index = unipotency_index(r.min_poly, r.qexp).value_or(0);
  return r;
}

std::optional<std::size_t> alternating_r_sum_witness(RPowers& r, std::size_t n, std::size_t max_n) {
  for (std::size_t big_n = 1; big_n <= max_n; ++big_n) {
    Matrix sum;
    Rational binom = 1;
    for (std::size_t k = 0; k <= big_n; ++k) {
      const Cyclotomic c((k % 2 == 0) ? binom : Rational(-binom));
      const Matrix term = c * r[n * k];
      sum = k == 0 ? term : sum + term;
      binom = binom * static_cast<long>(big_n - k) / static_cast<long>(k + 1);
    }
    if (sum.is_zero()) return big_n;
  }
  return std::nullopt;
}

std::optional<std::size_t> alternating_r_sum_witness(const QuasitriangularData& d, std::size_t n, std::size_t max_n) {
  RPowers r(d);
  return alternating_r_sum_witness(r, n, max_n);
}

}  // namespace hopfqexp
