#include "hopfqexp/drinfeld_double.hpp"

#include <map>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

namespace {

using Key3 = std::map<std::uint64_t, Cyclotomic>;

void add_to(Key3& t, std::uint64_t key, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) it->second += c;
}

bool same(const Key3& a, const Key3& b) {
  auto ia = a.begin(), ib = b.begin();
  while (true) {
    while (ia != a.end() && ia->second.is_zero()) ++ia;
    while (ib != b.end() && ib->second.is_zero()) ++ib;
    if (ia == a.end() || ib == b.end()) return ia == a.end() && ib == b.end();
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    ++ia;
    ++ib;
  }
}

}  // namespace

DoubleEngine::DoubleEngine(HopfAlgebra h) : h_(std::move(h)), dual_(dual(h_)) {
  const std::size_t n = h_.dim();
  if (!h_.antipode_inverse()) throw std::domain_error("Drinfeld double needs an invertible antipode");
  const Matrix& sinv = *h_.antipode_inverse();
  std::vector<SparseVector> sinv_cols(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r)
      if (!sinv(r, k).is_zero()) sinv_cols[k].push_back({r, sinv(r, k)});

  exchange_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    // Delta^2(h_i) = sum c h_i1 (x) h_i2 (x) h_i3
    Key3 delta2;
    for (const auto& outer : h_.coproduct(i))
      for (const auto& inner : h_.coproduct(outer.left))
        add_to(delta2, (inner.left * n + inner.right) * n + outer.right, outer.coeff * inner.coeff);

    std::vector<std::map<std::uint64_t, Cyclotomic>> acc(n);  // per l, keyed by a * n + b
    for (const auto& [key, c] : delta2) {
      if (c.is_zero()) continue;
      const std::size_t i3 = key % n, i2 = (key / n) % n, i1 = key / (n * n);
      for (std::size_t a = 0; a < n; ++a) {
        // S^{-1}(h_i3) h_a h_i1
        Vector left(n);
        for (const auto& s : sinv_cols[i3])
          for (const auto& t : h_.product(s.index, a)) left[t.index].add_product(s.coeff, t.coeff);
        Vector full(n);
        for (std::size_t p = 0; p < n; ++p) {
          if (left[p].is_zero()) continue;
          for (const auto& t : h_.product(p, i1)) full[t.index].add_product(left[p], t.coeff);
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (!full[l].is_zero()) add_to(acc[l], a * n + i2, c * full[l]);
        }
      }
    }
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& [key, c] : acc[l])
        if (!c.is_zero()) exchange_[i * n + l].push_back({key / n, key % n, c});
  }
}

Vector DoubleEngine::one() const { return embed_dual(dual_.one()); }

Vector DoubleEngine::embed_primal(const Vector& x) const {
  const std::size_t n = h_.dim();
  if (x.size() != n) throw DimensionMismatch("element is not in the primal copy");
  Vector r(dim());
  for (std::size_t j = 0; j < n; ++j) {
    if (h_.counit()[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero()) r[index(j, i)] = h_.counit()[j] * x[i];
  }
  return r;
}

Vector DoubleEngine::embed_dual(const Vector& f) const {
  const std::size_t n = h_.dim();
  if (f.size() != n) throw DimensionMismatch("element is not in the dual copy");
  Vector r(dim());
  for (std::size_t j = 0; j < n; ++j) {
    if (f[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!h_.unit()[i].is_zero()) r[index(j, i)] = f[j] * h_.unit()[i];
  }
  return r;
}

Vector DoubleEngine::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = h_.dim();
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("element is not in the double");
  // P_i = (1 (x) h_i) y for the primal indices that occur in x.
  std::vector<Vector> p(n);
  std::vector<bool> needed(n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!x[index(j, i)].is_zero()) needed[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!needed[i]) continue;
    Vector& out = p[i];
    out.assign(dim(), Cyclotomic());
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const Cyclotomic& ylk = y[index(l, k)];
        if (ylk.is_zero()) continue;
        for (const auto& t : exchange(i, l)) {
          const SparseVector& hb = h_.product(t.right, k);
          if (hb.empty()) continue;
          const Cyclotomic s = ylk * t.coeff;
          for (const auto& q : hb) out[index(t.left, q.index)].add_product(s, q.coeff);
        }
      }
  }
  // result = sum_j (f_j (x) 1) sum_i x_ji P_i
  Vector r(dim());
  for (std::size_t j = 0; j < n; ++j) {
    Vector z;
    for (std::size_t i = 0; i < n; ++i) {
      const Cyclotomic& xji = x[index(j, i)];
      if (xji.is_zero()) continue;
      if (z.empty()) z.assign(dim(), Cyclotomic());
      axpy(z, xji, p[i]);
    }
    if (z.empty()) continue;
    for (std::size_t a = 0; a < n; ++a) {
      const SparseVector& fa = dual_.product(j, a);
      if (fa.empty()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const Cyclotomic& zab = z[index(a, b)];
        if (zab.is_zero()) continue;
        for (const auto& t : fa) r[index(t.index, b)].add_product(zab, t.coeff);
      }
    }
  }
  return r;
}

Vector DoubleEngine::power(const Vector& x, std::size_t k) const {
  Vector r = one();
  for (std::size_t i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

Vector DoubleEngine::antipode(const Vector& x) const {
  const std::size_t n = h_.dim();
  if (x.size() != dim()) throw DimensionMismatch("element is not in the double");
  const Matrix& s = h_.antipode();
  const Matrix& sinv = *h_.antipode_inverse();
  Vector r(dim());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Cyclotomic& c = x[index(j, i)];
      if (c.is_zero()) continue;
      // S*^{-1}(f_j) = f_j o S^{-1} = sum_a S^{-1}(j, a) f_a
      const Vector left = embed_primal(s.column(i));
      const Vector right = embed_dual(sinv.row(j));
      axpy(r, c, multiply(left, right));
    }
  return r;
}

Vector DoubleEngine::drinfeld_element() const {
  const std::size_t n = h_.dim();
  const Matrix& sinv = *h_.antipode_inverse();
  Vector u(dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) u[index(a, i)] = sinv(i, a);
  return u;
}

QuasitriangularData drinfeld_double(const HopfAlgebra& h) {
  const DoubleEngine engine(h);
  const std::size_t n = h.dim(), nd = n * n;
  const HopfAlgebra& hd = engine.dual_base();

  HopfStructure s;
  s.name = "D(" + h.name() + ")";
  s.conductor = h.conductor();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) s.labels.push_back(hd.labels()[j] + "|" + h.labels()[i]);

  s.mult.assign(nd * nd, {});
  for (std::size_t p = 0; p < nd; ++p) {
    for (std::size_t q = 0; q < nd; ++q) {
      Vector x(nd), y(nd);
      x[p] = Cyclotomic(1);
      y[q] = Cyclotomic(1);
      const Vector z = engine.multiply(x, y);
      auto& out = s.mult[p * nd + q];
      for (std::size_t k = 0; k < nd; ++k)
        if (!z[k].is_zero()) out.push_back({k, z[k]});
    }
  }

  s.unit = engine.one();
  s.counit.resize(nd);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) s.counit[engine.index(j, i)] = h.unit()[j] * h.counit()[i];

  // Delta(f_c (x) h_k) = sum (f_b (x) h_k1) (x) (f_a (x) h_k2) over mu^c_ab and Delta(h_k).
  s.comult.assign(nd, {});
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& f : hd.coproduct(c))
        for (const auto& t : h.coproduct(k))
          s.comult[engine.index(c, k)].push_back(
              {engine.index(f.right, t.left), engine.index(f.left, t.right), f.coeff * t.coeff});

  std::vector<Vector> cols;
  cols.reserve(nd);
  for (std::size_t p = 0; p < nd; ++p) {
    Vector e(nd);
    e[p] = Cyclotomic(1);
    cols.push_back(engine.antipode(e));
  }
  s.antipode = Matrix::from_columns(cols);

  Matrix r(nd, nd);
  for (std::size_t i = 0; i < n; ++i) {
    Vector hi(n), fi(n);
    hi[i] = Cyclotomic(1);
    fi[i] = Cyclotomic(1);
    const Vector left = engine.embed_primal(hi);
    const Vector right = engine.embed_dual(fi);
    for (std::size_t p = 0; p < nd; ++p) {
      if (left[p].is_zero()) continue;
      for (std::size_t q = 0; q < nd; ++q)
        if (!right[q].is_zero()) r(p, q) += left[p] * right[q];
    }
  }
  HopfAlgebra algebra(std::move(s));
  Matrix rl = r;
  for (std::size_t p = 0; p < nd; ++p)
    for (std::size_t q = 0; q < nd; ++q)
      if (!rl(p, q).is_zero()) rl(p, q) = rl(p, q).lift(algebra.conductor());
  return QuasitriangularData{std::move(algebra), std::move(rl), n};
}

std::vector<std::string> verify_quasitriangular(const QuasitriangularData& d) {
  std::vector<std::string> out;
  const HopfAlgebra& a = d.algebra;
  const std::size_t n = a.dim();
  const Matrix& r = d.r_matrix;
  if (r.rows() != n || r.cols() != n) {
    out.push_back("r-matrix: shape does not match the algebra");
    return out;
  }
  const Matrix r_inv = HopfAlgebra::apply_legs(a.antipode(), Matrix::identity(n), r);
  const Matrix one = a.tensor_one();
  if (!(a.multiply_tensor(r, r_inv) == one) || !(a.multiply_tensor(r_inv, r) == one)) {
    out.push_back("r-invertible: R (S (x) Id)(R) != 1 (x) 1");
  }

  struct Entry {
    std::size_t p, q;
    Cyclotomic c;
  };
  std::vector<Entry> terms;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!r(p, q).is_zero()) terms.push_back({p, q, r(p, q)});
  const std::uint64_t N = n;

  // (Delta (x) Id)(R) = R13 R23
  {
    Key3 lhs, rhs;
    for (const auto& t : terms)
      for (const auto& c : a.coproduct(t.p)) add_to(lhs, (c.left * N + c.right) * N + t.q, t.c * c.coeff);
    for (const auto& s : terms)
      for (const auto& t : terms)
        for (const auto& m : a.product(s.q, t.q)) add_to(rhs, (s.p * N + t.p) * N + m.index, s.c * t.c * m.coeff);
    if (!same(lhs, rhs)) out.push_back("hexagon: (Delta (x) Id)(R) != R13 R23");
  }
  // (Id (x) Delta)(R) = R13 R12
  {
    Key3 lhs, rhs;
    for (const auto& t : terms)
      for (const auto& c : a.coproduct(t.q)) add_to(lhs, (t.p * N + c.left) * N + c.right, t.c * c.coeff);
    for (const auto& s : terms)      // R13 = s.p (x) 1 (x) s.q
      for (const auto& t : terms)    // R12 = t.p (x) t.q (x) 1
        for (const auto& m : a.product(s.p, t.p)) add_to(rhs, (m.index * N + t.q) * N + s.q, s.c * t.c * m.coeff);
    if (!same(lhs, rhs)) out.push_back("hexagon: (Id (x) Delta)(R) != R13 R12");
  }
  // Delta^op(x) R = R Delta(x)
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix delta = a.comultiply(a.basis(k));
    if (!(a.multiply_tensor(delta.transpose(), r) == a.multiply_tensor(r, delta))) {
      out.push_back("intertwiner: Delta^op(" + a.labels()[k] + ") R != R Delta(" + a.labels()[k] + ")");
      break;
    }
  }
  return out;
}

Vector drinfeld_element(const QuasitriangularData& d) {
  const HopfAlgebra& a = d.algebra;
  const Matrix sr = HopfAlgebra::apply_legs(Matrix::identity(a.dim()), a.antipode(), d.r_matrix);
  return a.contract_flipped(sr);
}

std::optional<Vector> element_inverse(const HopfAlgebra& a, const Vector& x) {
  const auto inv = inverse(a.left_multiplication(x));
  if (!inv) return std::nullopt;
  Vector y = *inv * a.one();
  if (!(a.multiply(y, x) == a.one())) return std::nullopt;
  return y;
}

bool verify_s2_conjugation(const QuasitriangularData& d, const Vector& u) {
  const HopfAlgebra& a = d.algebra;
  const auto u_inv = element_inverse(a, u);
  if (!u_inv) return false;
  const Matrix s2 = a.antipode() * a.antipode();
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Vector b = a.basis(k);
    if (!(s2 * b == a.multiply(a.multiply(u, b), *u_inv))) return false;
  }
  return true;
}

}  // namespace hopfqexp
