#include "hopfqexp/twist.hpp"

#include <cstdint>
#include <map>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

namespace {

// Elements of H (x) H (x) H keyed by (i * N + j) * N + k.
using Tensor3 = std::map<std::uint64_t, Cyclotomic>;

void add_to(Tensor3& t, std::uint64_t key, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) it->second += c;
}

void prune(Tensor3& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

Tensor3 delta_left(const HopfAlgebra& h, const Matrix& x) {
  const std::uint64_t n = h.dim();
  Tensor3 out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x(i, j).is_zero()) continue;
      for (const auto& t : h.coproduct(i)) add_to(out, (t.left * n + t.right) * n + j, x(i, j) * t.coeff);
    }
  prune(out);
  return out;
}

Tensor3 delta_right(const HopfAlgebra& h, const Matrix& x) {
  const std::uint64_t n = h.dim();
  Tensor3 out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x(i, j).is_zero()) continue;
      for (const auto& t : h.coproduct(j)) add_to(out, (i * n + t.left) * n + t.right, x(i, j) * t.coeff);
    }
  prune(out);
  return out;
}

// X (x) 1 and 1 (x) X
Tensor3 pad_right(const HopfAlgebra& h, const Matrix& x) {
  const std::uint64_t n = h.dim();
  Tensor3 out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) add_to(out, (i * n + j) * n + k, x(i, j) * h.unit()[k]);
  return out;
}

Tensor3 pad_left(const HopfAlgebra& h, const Matrix& x) {
  const std::uint64_t n = h.dim();
  Tensor3 out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) add_to(out, (i * n + j) * n + k, h.unit()[i] * x(j, k));
  return out;
}

Tensor3 multiply3(const HopfAlgebra& h, const Tensor3& a, const Tensor3& b) {
  const std::uint64_t n = h.dim();
  Tensor3 out;
  for (const auto& [ka, ca] : a) {
    const std::size_t a1 = ka / (n * n), a2 = (ka / n) % n, a3 = ka % n;
    for (const auto& [kb, cb] : b) {
      const std::size_t b1 = kb / (n * n), b2 = (kb / n) % n, b3 = kb % n;
      const auto& p1 = h.product(a1, b1);
      if (p1.empty()) continue;
      const auto& p2 = h.product(a2, b2);
      if (p2.empty()) continue;
      const auto& p3 = h.product(a3, b3);
      if (p3.empty()) continue;
      const Cyclotomic c = ca * cb;
      for (const auto& t1 : p1)
        for (const auto& t2 : p2) {
          const Cyclotomic c12 = c * t1.coeff * t2.coeff;
          for (const auto& t3 : p3) add_to(out, (t1.index * n + t2.index) * n + t3.index, c12 * t3.coeff);
        }
    }
  }
  prune(out);
  return out;
}

bool equal3(const Tensor3& a, const Tensor3& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

Tensor3 subtract3(Tensor3 a, const Tensor3& b) {
  for (const auto& [k, c] : b) add_to(a, k, -c);
  prune(a);
  return a;
}

int conductor_of(const Matrix& m) {
  long c = 1;
  for (const auto& x : m.entries())
    if (!x.is_zero() && !x.is_rational()) c = lcm_of(c, x.conductor());
  return static_cast<int>(c);
}

int conductor_of(const Vector& v) {
  long c = 1;
  for (const auto& x : v)
    if (!x.is_zero() && !x.is_rational()) c = lcm_of(c, x.conductor());
  return static_cast<int>(c);
}

Matrix lifted(const Matrix& m, int conductor) {
  std::vector<Cyclotomic> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.push_back(x.lift(conductor));
  return Matrix(m.rows(), m.cols(), std::move(e));
}

std::optional<Matrix> tensor_inverse(const HopfAlgebra& h, const Matrix& j) {
  const std::size_t n = h.dim();
  std::vector<Vector> cols;
  cols.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cols.push_back(vectorize(h.multiply_tensor(j, h.outer(h.basis(a), h.basis(b)))));
  const auto inv = inverse(Matrix::from_columns(cols));
  if (!inv) return std::nullopt;
  const Vector y = *inv * vectorize(h.tensor_one());
  return Matrix(n, n, y);
}

Vector left_counit_leg(const HopfAlgebra& h, const Matrix& j) {
  // (eps (x) Id)(J)
  Vector out(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t k = 0; k < h.dim(); ++k)
      if (!j(i, k).is_zero()) out[k] += h.counit()[i] * j(i, k);
  return out;
}

Vector right_counit_leg(const HopfAlgebra& h, const Matrix& j) {
  Vector out(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t k = 0; k < h.dim(); ++k)
      if (!j(i, k).is_zero()) out[i] += j(i, k) * h.counit()[k];
  return out;
}

bool same_element(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace

TwistCheck is_twist(const HopfAlgebra& h, const Matrix& j, const std::optional<Matrix>& j_inv) {
  TwistCheck r;
  const std::size_t n = h.dim();
  if (j.rows() != n || j.cols() != n) {
    r.violations.push_back("shape: J must be " + std::to_string(n) + " x " + std::to_string(n));
    return r;
  }
  const Matrix one = h.tensor_one();
  if (j_inv) {
    if (j_inv->rows() != n || j_inv->cols() != n) {
      r.violations.push_back("shape: J^-1 must be " + std::to_string(n) + " x " + std::to_string(n));
    } else if (!(h.multiply_tensor(j, *j_inv) == one) || !(h.multiply_tensor(*j_inv, j) == one)) {
      r.violations.push_back("invertible: J J^-1 != 1 (x) 1");
    } else {
      r.j_inv = *j_inv;
    }
  } else if (auto inv = tensor_inverse(h, j)) {
    if (h.multiply_tensor(*inv, j) == one) r.j_inv = std::move(inv);
    else r.violations.push_back("invertible: J has only a one-sided inverse");
  } else {
    r.violations.push_back("invertible: J is not invertible in H (x) H");
  }

  const Tensor3 lhs = multiply3(h, delta_left(h, j), pad_right(h, j));
  const Tensor3 rhs = multiply3(h, delta_right(h, j), pad_left(h, j));
  if (!equal3(lhs, rhs)) r.violations.push_back("cocycle: (Delta (x) Id)(J)(J (x) 1) != (Id (x) Delta)(J)(1 (x) J)");
  if (!same_element(left_counit_leg(h, j), h.one())) r.violations.push_back("counit-left: (eps (x) Id)(J) != 1");
  if (!same_element(right_counit_leg(h, j), h.one())) r.violations.push_back("counit-right: (Id (x) eps)(J) != 1");
  return r;
}

TwistData make_twist(const HopfAlgebra& h0, const Matrix& j0, const std::optional<Matrix>& j_inv0) {
  long c = lcm_of(h0.conductor(), conductor_of(j0));
  if (j_inv0) c = lcm_of(c, conductor_of(*j_inv0));
  const int m = static_cast<int>(c);
  HopfAlgebra h = m == h0.conductor() ? h0 : lift_conductor(h0, m);
  const Matrix j = lifted(j0, m);
  std::optional<Matrix> j_inv;
  if (j_inv0) j_inv = lifted(*j_inv0, m);
  TwistCheck check = is_twist(h, j, j_inv);
  if (!check.ok()) throw AxiomError(check.violations);
  return {std::move(h), j, std::move(*check.j_inv)};
}

QElements q_elements(const TwistData& t) {
  const HopfAlgebra& h = t.parent;
  const Matrix id = Matrix::identity(h.dim());
  QElements q{h.contract(HopfAlgebra::apply_legs(h.antipode(), id, t.j)),
              h.contract(HopfAlgebra::apply_legs(id, h.antipode(), t.j_inv))};
  if (!same_element(h.multiply(q.q, q.q_inv), h.one()) || !same_element(h.multiply(q.q_inv, q.q), h.one()))
    throw CheckFailure("Q Q^-1 != 1: J and J^-1 are inconsistent");
  return q;
}

HopfAlgebra twist_hopf(const TwistData& t) {
  const HopfAlgebra& h = t.parent;
  const std::size_t n = h.dim();
  const QElements q = q_elements(t);
  HopfStructure s = h.structure();
  s.name = h.name() + "^J";
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix d = h.multiply_tensor(h.multiply_tensor(t.j_inv, h.comultiply(h.basis(k))), t.j);
    s.comult[k].clear();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!d(a, b).is_zero()) s.comult[k].push_back({a, b, d(a, b)});
  }
  std::vector<Vector> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = h.multiply(h.multiply(q.q_inv, h.antipode().column(k)), q.q);
  s.antipode = Matrix::from_columns(cols);
  s.grading.reset();
  s.grouplikes.clear();
  HopfAlgebra twisted(s);
  std::vector<Vector> kept;
  for (const auto& g : h.grouplikes())
    if (is_grouplike(twisted, g)) kept.push_back(g);
  return twisted.with_grouplikes(std::move(kept));
}

bool check_q_coproduct_identity(const TwistData& t) {
  const HopfAlgebra& h = t.parent;
  const QElements q = q_elements(t);
  const Vector w = h.multiply(q.q_inv, h.apply_antipode(q.q));
  const Matrix s2 = h.antipode_power(2);
  const Matrix rhs =
      h.multiply_tensor(h.multiply_tensor(t.j, h.outer(w, w)), HopfAlgebra::apply_legs(s2, s2, t.j_inv));
  return h.comultiply(w) == rhs;
}

Vector twisted_drinfeld_element(const DoubleEngine& d, const TwistData& t) {
  const HopfAlgebra& h = t.parent;
  if (d.base_dim() != h.dim()) throw DimensionMismatch("double was built on a different algebra");
  const QElements q = q_elements(t);
  const Vector w = h.multiply(q.q_inv, h.apply_antipode(q.q));
  return d.multiply(d.embed_primal(w), d.drinfeld_element());
}

Vector grouplike_from_twist(const TwistData& t, long n) {
  const HopfAlgebra& h = t.parent;
  if (n < 1) throw std::invalid_argument("grouplike_from_twist needs n >= 1");
  if (!h.antipode_power(2 * n).is_identity()) throw std::invalid_argument("S^{2n} != Id for n = " + std::to_string(n));
  const QElements q = q_elements(t);
  Vector g = h.one();
  Vector s_q = q.q, s_q_inv = q.q_inv;  // S^k(Q), S^k(Q^-1)
  // Build right to left: g = ... S^2(Q) S(Q^-1) Q, prepending S^k of Q (k even) or Q^-1 (k odd).
  for (long k = 0; k < 2 * n; ++k) {
    g = h.multiply(k % 2 == 0 ? s_q : s_q_inv, g);
    s_q = h.apply_antipode(s_q);
    s_q_inv = h.apply_antipode(s_q_inv);
  }
  if (!is_grouplike(twist_hopf(t), g))
    throw CheckFailure("the element built from Q is not grouplike in the twisted algebra");
  return g;
}

TwistData bicharacter_twist(const HopfAlgebra& h0, const std::vector<Vector>& group,
                            const std::vector<std::vector<Cyclotomic>>& characters,
                            const std::vector<std::vector<Cyclotomic>>& beta) {
  const std::size_t order = group.size();
  if (characters.size() != order || beta.size() != order)
    throw DimensionMismatch("need one character and one beta row per group element");
  long c = h0.conductor();
  for (const auto& row : characters) {
    if (row.size() != order) throw DimensionMismatch("character table must be square");
    c = lcm_of(c, conductor_of(row));
  }
  for (const auto& row : beta) {
    if (row.size() != order) throw DimensionMismatch("beta table must be square");
    c = lcm_of(c, conductor_of(row));
  }
  const int m = static_cast<int>(c);
  const HopfAlgebra h = m == h0.conductor() ? h0 : lift_conductor(h0, m);
  const std::size_t n = h.dim();

  std::vector<Vector> idempotents;
  const Cyclotomic scale = Cyclotomic(Rational(1, static_cast<long>(order))).lift(m);
  for (std::size_t x = 0; x < order; ++x) {
    Vector e(n, Cyclotomic::zero(m));
    for (std::size_t g = 0; g < order; ++g) {
      if (group[g].size() != n) throw DimensionMismatch("group element has the wrong length");
      axpy(e, scale * characters[x][g].inverse(), group[g]);
    }
    idempotents.push_back(std::move(e));
  }
  Matrix j(n, n), j_inv(n, n);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const Matrix o = h.outer(idempotents[x], idempotents[y]);
      j = j + beta[x][y] * o;
      j_inv = j_inv + beta[x][y].inverse() * o;
    }
  return make_twist(h, j, j_inv);
}

std::vector<std::vector<Cyclotomic>> bilinear_beta(int n, const std::vector<std::vector<int>>& m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw DimensionMismatch("bilinear form must be square");
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= static_cast<std::size_t>(n);
  auto coords = [&](std::size_t idx) {
    std::vector<long> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<long>(idx % static_cast<std::size_t>(n));
      idx /= static_cast<std::size_t>(n);
    }
    return c;
  };
  std::vector<std::vector<Cyclotomic>> out(size, std::vector<Cyclotomic>(size));
  for (std::size_t b = 0; b < size; ++b)
    for (std::size_t c = 0; c < size; ++c) {
      const auto x = coords(b), y = coords(c);
      long e = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) e += x[i] * m[i][l] * y[l];
      out[b][c] = Cyclotomic::zeta(n, ((e % n) + n) % n);
    }
  return out;
}

namespace {

// Flattens a sparse 3-tensor into a dense vector over N^3 coordinates.
Vector dense3(const Tensor3& t, std::size_t n) {
  Vector v(n * n * n);
  for (const auto& [k, c] : t) v[k] = c;
  return v;
}

// Common roots of a family of polynomials of degree <= 2, if there are finitely many
// and they are rational in the coefficients (linear gcd), or "any" (all vanish).
struct LineRoots {
  bool any = false;
  std::vector<Cyclotomic> roots;
};

LineRoots common_roots(const std::vector<Polynomial>& polys) {
  Polynomial g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd(g, p);
  }
  if (g.is_zero()) return {true, {}};
  if (g.degree() == 1) return {false, {-g.coeff(0)}};
  return {};
}

}  // namespace

std::vector<TwistData> solve_twist_ansatz(const HopfAlgebra& h, const std::vector<Matrix>& directions) {
  const std::size_t n = h.dim(), p = directions.size();
  const Matrix one = h.tensor_one();
  const Tensor3 delta_one_l = delta_left(h, one), delta_one_r = delta_right(h, one);

  // Linear part of the cocycle residual and of the counit conditions, per direction.
  std::vector<Vector> linear(p);
  for (std::size_t a = 0; a < p; ++a) {
    const Matrix& e = directions[a];
    const Tensor3 lin = subtract3(
        subtract3(multiply3(h, delta_left(h, e), pad_right(h, one)), multiply3(h, delta_right(h, e), pad_left(h, one))),
        subtract3(multiply3(h, delta_right(h, one), pad_left(h, e)), multiply3(h, delta_left(h, one), pad_right(h, e))));
    Vector v = dense3(lin, n);
    const Vector l = left_counit_leg(h, e), r = right_counit_leg(h, e);
    v.insert(v.end(), l.begin(), l.end());
    v.insert(v.end(), r.begin(), r.end());
    linear[a] = std::move(v);
  }
  // Quadratic part: Q(c) = sum_{a,b} c_a c_b [(Delta (x) Id)(E_a)(E_b (x) 1) - (Id (x) Delta)(E_a)(1 (x) E_b)].
  std::vector<std::vector<Vector>> quad(p, std::vector<Vector>(p));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      quad[a][b] = dense3(subtract3(multiply3(h, delta_left(h, directions[a]), pad_right(h, directions[b])),
                                    multiply3(h, delta_right(h, directions[a]), pad_left(h, directions[b]))),
                          n);

  // Kernel of the linear part.
  std::vector<Vector> kernel;
  {
    LinearSpan span(linear.empty() ? 0 : linear[0].size());
    std::vector<std::size_t> pivots;
    for (std::size_t a = 0; a < p; ++a) {
      if (auto coords = span.coordinates(linear[a])) {
        Vector k(p);
        k[a] = Cyclotomic(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] -= (*coords)[i];
        kernel.push_back(std::move(k));
      } else {
        span.insert(linear[a]);
        pivots.push_back(a);
      }
    }
  }

  auto quadratic_form = [&](const Vector& x, const Vector& y) {
    Vector out(n * n * n);
    for (std::size_t a = 0; a < p; ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < p; ++b)
        if (!y[b].is_zero()) axpy(out, x[a] * y[b], quad[a][b]);
    }
    return out;
  };

  std::vector<Vector> candidates;
  for (const auto& v : kernel)
    if (is_zero_vector(quadratic_form(v, v))) candidates.push_back(v);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t k = i + 1; k < kernel.size(); ++k) {
      // Q(v_i + t v_k) = Q_ii + t (Q_ik + Q_ki) + t^2 Q_kk, coordinatewise.
      const Vector qii = quadratic_form(kernel[i], kernel[i]), qkk = quadratic_form(kernel[k], kernel[k]);
      Vector qik = quadratic_form(kernel[i], kernel[k]);
      axpy(qik, Cyclotomic(1), quadratic_form(kernel[k], kernel[i]));
      std::vector<Polynomial> polys;
      for (std::size_t c = 0; c < qii.size(); ++c) polys.push_back(Polynomial({qii[c], qik[c], qkk[c]}));
      const LineRoots roots = common_roots(polys);
      std::vector<Cyclotomic> ts = roots.roots;
      if (roots.any) ts = {Cyclotomic(1)};
      for (const auto& t : ts) {
        if (t.is_zero()) continue;
        Vector c = kernel[i];
        axpy(c, t, kernel[k]);
        candidates.push_back(std::move(c));
      }
    }

  std::vector<TwistData> out;
  for (const auto& c : candidates) {
    Matrix j = one;
    for (std::size_t a = 0; a < p; ++a)
      if (!c[a].is_zero()) j = j + c[a] * directions[a];
    if (is_twist(h, j).ok()) out.push_back(make_twist(h, j));
  }
  return out;
}

std::vector<Matrix> sweedler_twist_directions(const HopfAlgebra& h) {
  if (h.dim() != 4) throw DimensionMismatch("the Sweedler algebra is 4-dimensional");
  // basis 1, g, x, gx
  const Vector x = h.basis(2), gx = h.basis(3);
  return {h.outer(x, x), h.outer(x, gx), h.outer(gx, x), h.outer(gx, gx)};
}

}  // namespace hopfqexp
