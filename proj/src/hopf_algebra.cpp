#include "hopfqexp/hopf_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

namespace {

Cyclotomic lifted(const Cyclotomic& c, int conductor) {
  if (c.is_zero()) return Cyclotomic::zero(conductor);
  if (c.conductor() == conductor) return c;
  if (c.is_rational()) return Cyclotomic::rational(conductor, c.rational_part());
  return c.lift(conductor);
}

void lift_all(Vector& v, int m) {
  for (auto& c : v) c = lifted(c, m);
}

Matrix lift_matrix(const Matrix& a, int m) {
  std::vector<Cyclotomic> e = a.entries();
  lift_all(e, m);
  return Matrix(a.rows(), a.cols(), std::move(e));
}

std::string vec_str(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << ")";
  return os.str();
}

// Sparse multi-index accumulator for tensors of small order.
using Tensor3 = std::map<std::uint64_t, Cyclotomic>;

void add_to(Tensor3& t, std::uint64_t key, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) it->second += c;
}

bool same_tensor(const Tensor3& a, const Tensor3& b) {
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

SparseVector sparse_of(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  }
  return s;
}

}  // namespace

HopfAlgebra::HopfAlgebra(HopfStructure s) : s_(std::move(s)) {
  const std::size_t n = s_.labels.size();
  if (n == 0) throw DimensionMismatch("a Hopf algebra needs at least one basis element");
  if (s_.mult.size() != n * n) throw DimensionMismatch("mult must have dim^2 entries");
  if (s_.unit.size() != n || s_.counit.size() != n) throw DimensionMismatch("unit/counit length must equal dim");
  if (s_.comult.size() != n) throw DimensionMismatch("comult must have dim entries");
  if (s_.antipode.rows() != n || s_.antipode.cols() != n) throw DimensionMismatch("antipode must be dim x dim");
  if (s_.grading && s_.grading->size() != n) throw DimensionMismatch("grading length must equal dim");
  const int m = s_.conductor;
  detail::cyclotomic_field(m);
  for (auto& entry : s_.mult) {
    for (auto& t : entry) {
      if (t.index >= n) throw DimensionMismatch("mult index out of range");
      t.coeff = lifted(t.coeff, m);
    }
    std::sort(entry.begin(), entry.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    entry.erase(std::remove_if(entry.begin(), entry.end(), [](const Term& t) { return t.coeff.is_zero(); }),
                entry.end());
  }
  for (auto& entry : s_.comult) {
    for (auto& t : entry) {
      if (t.left >= n || t.right >= n) throw DimensionMismatch("comult index out of range");
      t.coeff = lifted(t.coeff, m);
    }
    std::sort(entry.begin(), entry.end(), [](const CoproductTerm& a, const CoproductTerm& b) {
      return std::pair(a.left, a.right) < std::pair(b.left, b.right);
    });
    entry.erase(std::remove_if(entry.begin(), entry.end(),
                               [](const CoproductTerm& t) { return t.coeff.is_zero(); }),
                entry.end());
  }
  lift_all(s_.unit, m);
  lift_all(s_.counit, m);
  s_.antipode = lift_matrix(s_.antipode, m);
  for (auto& g : s_.grouplikes) {
    if (g.size() != n) throw DimensionMismatch("grouplike length must equal dim");
    lift_all(g, m);
  }
  antipode_inv_ = inverse(s_.antipode);
}

HopfAlgebra HopfAlgebra::renamed(std::string name) const {
  HopfAlgebra h = *this;
  h.s_.name = std::move(name);
  return h;
}

HopfAlgebra HopfAlgebra::with_grouplikes(std::vector<Vector> grouplikes) const {
  HopfStructure s = s_;
  s.grouplikes = std::move(grouplikes);
  return HopfAlgebra(std::move(s));
}

HopfAlgebra HopfAlgebra::with_grading(std::optional<std::vector<int>> grading) const {
  HopfStructure s = s_;
  s.grading = std::move(grading);
  return HopfAlgebra(std::move(s));
}

void HopfAlgebra::check_element(const Vector& a) const {
  if (a.size() != dim()) throw DimensionMismatch("element does not belong to " + s_.name);
}

void HopfAlgebra::check_tensor(const Matrix& x) const {
  if (x.rows() != dim() || x.cols() != dim()) throw DimensionMismatch("tensor does not belong to " + s_.name);
}

Vector HopfAlgebra::basis(std::size_t i) const {
  Vector v(dim());
  v.at(i) = Cyclotomic::rational(s_.conductor, 1);
  return v;
}

Vector HopfAlgebra::multiply(const Vector& a, const Vector& b) const {
  check_element(a);
  check_element(b);
  const std::size_t n = dim();
  Vector r(n);
  const SparseVector sb = sparse_of(b);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [j, bj] : sb) {
      const SparseVector& p = product(i, j);
      if (p.empty()) continue;
      const Cyclotomic ab = a[i] * bj;
      for (const auto& t : p) r[t.index].add_product(ab, t.coeff);
    }
  }
  return r;
}

Vector HopfAlgebra::power(const Vector& a, std::size_t k) const {
  Vector result = one();
  for (std::size_t i = 0; i < k; ++i) result = multiply(result, a);
  return result;
}

Matrix HopfAlgebra::comultiply(const Vector& a) const {
  check_element(a);
  Matrix r(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& t : coproduct(k)) r(t.left, t.right).add_product(a[k], t.coeff);
  }
  return r;
}

Cyclotomic HopfAlgebra::counit_of(const Vector& a) const {
  check_element(a);
  Cyclotomic r = zero_scalar();
  for (std::size_t i = 0; i < dim(); ++i) r.add_product(a[i], s_.counit[i]);
  return r;
}

Vector HopfAlgebra::apply_antipode(const Vector& a) const {
  check_element(a);
  return s_.antipode * a;
}

Vector HopfAlgebra::apply_antipode_inverse(const Vector& a) const {
  check_element(a);
  if (!antipode_inv_) throw std::domain_error("antipode of " + s_.name + " is not invertible");
  return *antipode_inv_ * a;
}

Matrix HopfAlgebra::antipode_power(long k) const {
  if (k >= 0) return s_.antipode.pow(static_cast<std::size_t>(k));
  if (!antipode_inv_) throw std::domain_error("antipode of " + s_.name + " is not invertible");
  return antipode_inv_->pow(static_cast<std::size_t>(-k));
}

Matrix HopfAlgebra::left_multiplication(const Vector& a) const {
  check_element(a);
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis(j)));
  return Matrix::from_columns(cols);
}

Matrix HopfAlgebra::tensor_one() const { return outer(s_.unit, s_.unit); }

Matrix HopfAlgebra::outer(const Vector& a, const Vector& b) const {
  check_element(a);
  check_element(b);
  Matrix r(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!b[j].is_zero()) r(i, j) = a[i] * b[j];
    }
  }
  return r;
}

Matrix HopfAlgebra::multiply_tensor(const Matrix& x, const Matrix& y) const {
  check_tensor(x);
  check_tensor(y);
  const std::size_t n = dim();
  struct Entry {
    std::size_t a, b;
    const Cyclotomic* c;
  };
  std::vector<Entry> ex, ey;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!x(a, b).is_zero()) ex.push_back({a, b, &x(a, b)});
      if (!y(a, b).is_zero()) ey.push_back({a, b, &y(a, b)});
    }
  Matrix r(n, n);
  for (const auto& p : ex) {
    for (const auto& q : ey) {
      const SparseVector& left = product(p.a, q.a);
      if (left.empty()) continue;
      const SparseVector& right = product(p.b, q.b);
      if (right.empty()) continue;
      const Cyclotomic s = (*p.c) * (*q.c);
      for (const auto& l : left) {
        const Cyclotomic sl = s * l.coeff;
        for (const auto& rr : right) r(l.index, rr.index).add_product(sl, rr.coeff);
      }
    }
  }
  return r;
}

Matrix HopfAlgebra::apply_legs(const Matrix& f, const Matrix& g, const Matrix& x) {
  return f * x * g.transpose();
}

Vector HopfAlgebra::contract(const Matrix& x) const {
  check_tensor(x);
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (const auto& t : product(i, j)) r[t.index].add_product(x(i, j), t.coeff);
    }
  return r;
}

Vector HopfAlgebra::contract_flipped(const Matrix& x) const {
  check_tensor(x);
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (const auto& t : product(j, i)) r[t.index].add_product(x(i, j), t.coeff);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Axiom checks

std::vector<std::string> validate(const HopfAlgebra& h) {
  std::vector<std::string> out;
  const std::size_t n = h.dim();
  const auto& lab = h.labels();
  const Vector one = h.one();

  // Unit.
  for (std::size_t i = 0; i < n && out.empty(); ++i) {
    const Vector b = h.basis(i);
    if (!(h.multiply(one, b) == b) || !(h.multiply(b, one) == b)) {
      out.push_back("unit: 1*" + lab[i] + " or " + lab[i] + "*1 differs from " + lab[i]);
    }
  }

  // Associativity on all basis triples.
  {
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i) {
      for (std::size_t j = 0; j < n && !bad; ++j) {
        const SparseVector& ij = h.product(i, j);
        for (std::size_t k = 0; k < n && !bad; ++k) {
          Vector lhs(n), rhs(n);
          for (const auto& t : ij)
            for (const auto& u : h.product(t.index, k)) lhs[u.index].add_product(t.coeff, u.coeff);
          for (const auto& t : h.product(j, k))
            for (const auto& u : h.product(i, t.index)) rhs[u.index].add_product(t.coeff, u.coeff);
          if (!(lhs == rhs)) {
            out.push_back("associativity: (" + lab[i] + "*" + lab[j] + ")*" + lab[k] + " != " + lab[i] + "*(" +
                          lab[j] + "*" + lab[k] + ")");
            bad = true;
          }
        }
      }
    }
  }

  // Coassociativity.
  const std::uint64_t N = n;
  for (std::size_t k = 0; k < n; ++k) {
    Tensor3 lhs, rhs;
    for (const auto& t : h.coproduct(k)) {
      for (const auto& u : h.coproduct(t.left)) add_to(lhs, (u.left * N + u.right) * N + t.right, t.coeff * u.coeff);
      for (const auto& u : h.coproduct(t.right)) add_to(rhs, (t.left * N + u.left) * N + u.right, t.coeff * u.coeff);
    }
    if (!same_tensor(lhs, rhs)) {
      out.push_back("coassociativity: (Delta (x) Id)Delta(" + lab[k] + ") != (Id (x) Delta)Delta(" + lab[k] + ")");
      break;
    }
  }

  // Counit.
  for (std::size_t k = 0; k < n; ++k) {
    Vector left(n), right(n);
    for (const auto& t : h.coproduct(k)) {
      left[t.right].add_product(h.counit()[t.left], t.coeff);
      right[t.left].add_product(h.counit()[t.right], t.coeff);
    }
    const Vector b = h.basis(k);
    if (!(left == b) || !(right == b)) {
      out.push_back("counit: (eps (x) Id)Delta(" + lab[k] + ") or (Id (x) eps)Delta(" + lab[k] + ") differs");
      break;
    }
  }

  // Counit is an algebra map.
  if (!h.counit_of(one).is_one()) out.push_back("counit-unit: eps(1) != 1");
  for (std::size_t i = 0; i < n; ++i) {
    bool bad = false;
    for (std::size_t j = 0; j < n; ++j) {
      Cyclotomic e = h.zero_scalar();
      for (const auto& t : h.product(i, j)) e.add_product(t.coeff, h.counit()[t.index]);
      if (!(e == h.counit()[i] * h.counit()[j])) {
        out.push_back("counit-multiplicative: eps(" + lab[i] + "*" + lab[j] + ") != eps(" + lab[i] + ")eps(" +
                      lab[j] + ")");
        bad = true;
        break;
      }
    }
    if (bad) break;
  }

  // Delta is an algebra map.
  if (!(h.comultiply(one) == h.tensor_one())) out.push_back("comultiplication-unit: Delta(1) != 1 (x) 1");
  {
    std::vector<Matrix> deltas;
    deltas.reserve(n);
    for (std::size_t k = 0; k < n; ++k) deltas.push_back(h.comultiply(h.basis(k)));
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i) {
      for (std::size_t j = 0; j < n && !bad; ++j) {
        Tensor3 lhs, rhs;
        for (const auto& t : h.product(i, j))
          for (const auto& u : h.coproduct(t.index)) add_to(lhs, u.left * N + u.right, t.coeff * u.coeff);
        for (const auto& p : h.coproduct(i))
          for (const auto& q : h.coproduct(j)) {
            const SparseVector& l = h.product(p.left, q.left);
            if (l.empty()) continue;
            const SparseVector& r = h.product(p.right, q.right);
            if (r.empty()) continue;
            const Cyclotomic s = p.coeff * q.coeff;
            for (const auto& a : l) {
              const Cyclotomic sa = s * a.coeff;
              for (const auto& b : r) add_to(rhs, a.index * N + b.index, sa * b.coeff);
            }
          }
        if (!same_tensor(lhs, rhs)) {
          out.push_back("bialgebra: Delta(" + lab[i] + "*" + lab[j] + ") != Delta(" + lab[i] + ")Delta(" + lab[j] +
                        ")");
          bad = true;
        }
      }
    }
  }

  // Antipode.
  {
    std::vector<SparseVector> s_cols(n);
    for (std::size_t k = 0; k < n; ++k) s_cols[k] = sparse_of(h.antipode().column(k));
    for (std::size_t k = 0; k < n; ++k) {
      Vector left(n), right(n);
      for (const auto& t : h.coproduct(k)) {
        for (const auto& s : s_cols[t.left])
          for (const auto& u : h.product(s.index, t.right)) left[u.index].add_product(t.coeff * s.coeff, u.coeff);
        for (const auto& s : s_cols[t.right])
          for (const auto& u : h.product(t.left, s.index)) right[u.index].add_product(t.coeff * s.coeff, u.coeff);
      }
      const Vector expected = scaled(one, h.counit()[k]);
      if (!(left == expected)) {
        out.push_back("antipode: m(S (x) Id)Delta(" + lab[k] + ") != eps(" + lab[k] + ")1");
        break;
      }
      if (!(right == expected)) {
        out.push_back("antipode: m(Id (x) S)Delta(" + lab[k] + ") != eps(" + lab[k] + ")1");
        break;
      }
    }
  }
  if (!h.antipode_inverse()) out.push_back("antipode-invertible: S is singular");

  // Declared extras.
  for (auto& v : verify_grouplike_set(h, h.grouplikes())) out.push_back(std::move(v));
  if (const auto& deg = h.grading()) {
    const auto& d = *deg;
    auto bad = [&](const std::string& what) { out.push_back("grading: " + what); };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (d[i] < 0) {
        bad("negative degree on " + lab[i]);
        ok = false;
      }
      for (std::size_t j = 0; j < n && ok; ++j)
        for (const auto& t : h.product(i, j))
          if (d[t.index] != d[i] + d[j]) {
            bad("product " + lab[i] + "*" + lab[j] + " leaves degree " + std::to_string(d[i] + d[j]));
            ok = false;
            break;
          }
    }
    for (std::size_t k = 0; k < n && ok; ++k) {
      for (const auto& t : h.coproduct(k))
        if (d[t.left] + d[t.right] != d[k]) {
          bad("coproduct of " + lab[k] + " leaves degree " + std::to_string(d[k]));
          ok = false;
          break;
        }
      for (std::size_t i = 0; i < n && ok; ++i)
        if (!h.antipode()(i, k).is_zero() && d[i] != d[k]) {
          bad("antipode of " + lab[k] + " leaves degree " + std::to_string(d[k]));
          ok = false;
        }
      if (ok && d[k] > 0 && !h.counit()[k].is_zero()) {
        bad("counit nonzero on positive degree " + lab[k]);
        ok = false;
      }
      if (ok && d[k] > 0 && !h.unit()[k].is_zero()) {
        bad("unit has a positive degree component " + lab[k]);
        ok = false;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived algebras

HopfAlgebra dual(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  HopfStructure s;
  s.name = "dual(" + h.name() + ")";
  s.conductor = h.conductor();
  for (const auto& l : h.labels()) s.labels.push_back(l + "*");
  s.mult.assign(n * n, {});
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : h.coproduct(k)) s.mult[t.left * n + t.right].push_back({k, t.coeff});
  s.comult.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& t : h.product(a, b)) s.comult[t.index].push_back({a, b, t.coeff});
  s.unit = h.counit();
  s.counit = h.unit();
  s.antipode = h.antipode().transpose();
  return HopfAlgebra(std::move(s));
}

HopfAlgebra variant(const HopfAlgebra& h, Variant which) {
  const std::size_t n = h.dim();
  HopfStructure s = h.structure();
  const bool op = which != Variant::cop;
  const bool cop = which != Variant::op;
  s.name = std::string(which == Variant::op ? "op" : which == Variant::cop ? "cop" : "opcop") + "(" + h.name() + ")";
  if (op) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.mult[i * n + j] = h.product(j, i);
  }
  if (cop) {
    for (auto& entry : s.comult)
      for (auto& t : entry) std::swap(t.left, t.right);
  }
  if (op != cop) {
    if (!h.antipode_inverse()) throw std::domain_error("variant needs an invertible antipode");
    s.antipode = *h.antipode_inverse();
  }
  return HopfAlgebra(std::move(s));
}

HopfAlgebra lift_conductor(const HopfAlgebra& h, int target) {
  if (target % h.conductor() != 0) {
    throw ConductorMismatch("cannot lift " + h.name() + " from conductor " + std::to_string(h.conductor()) +
                            " to " + std::to_string(target));
  }
  HopfStructure s = h.structure();
  s.conductor = target;
  return HopfAlgebra(std::move(s));
}

HopfAlgebra tensor(const HopfAlgebra& a0, const HopfAlgebra& b0) {
  const int m = static_cast<int>(lcm_of(a0.conductor(), b0.conductor()));
  const HopfAlgebra a = lift_conductor(a0, m);
  const HopfAlgebra b = lift_conductor(b0, m);
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  HopfStructure s;
  s.name = a.name() + "(x)" + b.name();
  s.conductor = m;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) s.labels.push_back(la + "|" + lb);
  s.mult.assign(n * n, {});
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t i2 = 0; i2 < nb; ++i2)
      for (std::size_t j1 = 0; j1 < na; ++j1)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          auto& out = s.mult[idx(i1, i2) * n + idx(j1, j2)];
          for (const auto& p : a.product(i1, j1))
            for (const auto& q : b.product(i2, j2)) out.push_back({idx(p.index, q.index), p.coeff * q.coeff});
        }
  s.comult.assign(n, {});
  for (std::size_t k1 = 0; k1 < na; ++k1)
    for (std::size_t k2 = 0; k2 < nb; ++k2)
      for (const auto& p : a.coproduct(k1))
        for (const auto& q : b.coproduct(k2))
          s.comult[idx(k1, k2)].push_back({idx(p.left, q.left), idx(p.right, q.right), p.coeff * q.coeff});
  s.unit.resize(n);
  s.counit.resize(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      s.unit[idx(i, j)] = a.unit()[i] * b.unit()[j];
      s.counit[idx(i, j)] = a.counit()[i] * b.counit()[j];
    }
  s.antipode = kron(a.antipode(), b.antipode());
  for (const auto& g : a.grouplikes())
    for (const auto& k : b.grouplikes()) {
      Vector v(n);
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
          if (!g[i].is_zero() && !k[j].is_zero()) v[idx(i, j)] = g[i] * k[j];
      s.grouplikes.push_back(std::move(v));
    }
  if (a.grading() && b.grading()) {
    std::vector<int> d(n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) d[idx(i, j)] = (*a.grading())[i] + (*b.grading())[j];
    s.grading = std::move(d);
  }
  return HopfAlgebra(std::move(s));
}

long s2_order(const HopfAlgebra& h, long bound) {
  const Matrix s2 = h.antipode() * h.antipode();
  Matrix p = s2;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * s2;
  }
  throw BoundExceeded("order of S^2 on " + h.name() + " exceeds " + std::to_string(bound));
}

bool is_grouplike(const HopfAlgebra& h, const Vector& g) {
  return h.counit_of(g).is_one() && h.comultiply(g) == h.outer(g, g);
}

long element_order(const HopfAlgebra& h, const Vector& g, long bound) {
  const Vector one = h.one();
  Vector p = g;
  for (long k = 1; k <= bound; ++k) {
    if (p == one) return k;
    p = h.multiply(p, g);
  }
  throw BoundExceeded("order of " + vec_str(g) + " in " + h.name() + " exceeds " + std::to_string(bound));
}

long group_exponent(const HopfAlgebra& h, const std::vector<Vector>& group, long bound) {
  long e = 1;
  for (const auto& g : group) e = std::lcm(e, element_order(h, g, bound));
  return e;
}

std::vector<std::string> verify_grouplike_set(const HopfAlgebra& h, const std::vector<Vector>& group) {
  std::vector<std::string> out;
  if (group.empty()) return out;
  auto member = [&](const Vector& v) { return std::find(group.begin(), group.end(), v) != group.end(); };
  for (const auto& g : group) {
    if (!is_grouplike(h, g)) {
      out.push_back("grouplike: " + vec_str(g) + " is not grouplike");
      return out;
    }
  }
  for (const auto& g : group) {
    if (!member(h.apply_antipode(g))) {
      out.push_back("grouplike-closure: inverse of " + vec_str(g) + " missing");
      return out;
    }
    for (const auto& k : group) {
      if (!member(h.multiply(g, k))) {
        out.push_back("grouplike-closure: product " + vec_str(g) + vec_str(k) + " missing");
        return out;
      }
    }
  }
  return out;
}

HopfAlgebra subalgebra_closure(const HopfAlgebra& h, const std::vector<Vector>& generators) {
  const std::size_t n = h.dim();
  LinearSpan span(n);
  span.insert(h.one());
  for (const auto& g : generators) span.insert(g);

  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Vector> current = span.members();
    for (const auto& v : current) {
      const Matrix d = h.comultiply(v);
      for (std::size_t r = 0; r < n; ++r) {
        grew |= span.insert(d.column(r));
        grew |= span.insert(d.row(r));
      }
      grew |= span.insert(h.apply_antipode(v));
    }
    for (const auto& a : current)
      for (const auto& b : current) grew |= span.insert(h.multiply(a, b));
  }

  const std::vector<Vector>& w = span.members();
  const std::size_t d = w.size();
  auto coords = [&](const Vector& v) {
    auto c = span.coordinates(v);
    if (!c) throw std::logic_error("subalgebra closure is not closed");
    return *c;
  };

  HopfStructure s;
  s.name = "sub(" + h.name() + ")";
  s.conductor = h.conductor();
  for (std::size_t k = 0; k < d; ++k) {
    std::string label = "w" + std::to_string(k);
    const SparseVector sv = sparse_of(w[k]);
    if (sv.size() == 1 && sv[0].coeff.is_one()) label = h.labels()[sv[0].index];
    s.labels.push_back(label);
  }
  s.mult.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s.mult[i * d + j] = sparse_of(coords(h.multiply(w[i], w[j])));
  s.comult.assign(d, {});
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix c = h.comultiply(w[k]);
    // c = W D W^T: first strip the left legs column by column, then the right legs.
    std::vector<Vector> e_cols;
    for (std::size_t r = 0; r < n; ++r) e_cols.push_back(coords(c.column(r)));
    const Matrix e = Matrix::from_columns(e_cols);  // d x n
    for (std::size_t a = 0; a < d; ++a) {
      const Vector dr = coords(e.row(a));
      for (std::size_t b = 0; b < d; ++b)
        if (!dr[b].is_zero()) s.comult[k].push_back({a, b, dr[b]});
    }
  }
  s.unit = coords(h.one());
  s.counit.resize(d);
  for (std::size_t k = 0; k < d; ++k) s.counit[k] = h.counit_of(w[k]);
  std::vector<Vector> scol;
  for (std::size_t k = 0; k < d; ++k) scol.push_back(coords(h.apply_antipode(w[k])));
  s.antipode = Matrix::from_columns(scol);
  for (const auto& g : h.grouplikes()) {
    if (auto c = span.coordinates(g)) s.grouplikes.push_back(*c);
  }
  return HopfAlgebra(std::move(s));
}

}  // namespace hopfqexp
