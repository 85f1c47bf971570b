#include "hopfqexp/matrix.hpp"

#include <sstream>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector scaled(const Vector& v, const Cyclotomic& s) {
  Vector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r[i] = v[i] * s;
  }
  return r;
}

void axpy(Vector& a, const Cyclotomic& s, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("axpy length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i].add_product(s, b[i]);
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows_) throw DimensionMismatch("ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix add shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sub shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclotomic& y = b(k, j);
        if (!y.is_zero()) r(i, j).add_product(x, y);
      }
    }
  }
  return r;
}

Matrix operator*(const Cyclotomic& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_) {
    if (!x.is_zero()) x = s * x;
  }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector r(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (!a(i, k).is_zero()) r[i].add_product(a(i, k), v[k]);
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const { return is_zero_vector(a_); }

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    }
  return r;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Cyclotomic s = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(col, j).is_zero()) m(col, j) = m(col, j) * s;
      if (!inv(col, j).is_zero()) inv(col, j) = inv(col, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const Cyclotomic f = -m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(i, j).add_product(f, m(col, j));
        if (!inv(col, j).is_zero()) inv(i, j).add_product(f, inv(col, j));
      }
    }
  }
  return inv;
}

void LinearSpan::reduce(Vector& v, Vector& combo) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Cyclotomic c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Cyclotomic neg = -c;
    axpy(v, neg, rows_[r]);
    // v_now = v_orig - c * row_r  and row_r = sum combos_[r][k] members_k
    for (std::size_t k = 0; k < combos_[r].size(); ++k) {
      if (!combos_[r][k].is_zero()) combo[k].add_product(c, combos_[r][k]);
    }
  }
}

bool LinearSpan::insert(const Vector& v) {
  if (v.size() != length_) throw DimensionMismatch("span vector length mismatch");
  Vector w = v;
  Vector combo(members_.size() + 1);
  reduce(w, combo);
  std::size_t p = 0;
  while (p < w.size() && w[p].is_zero()) ++p;
  if (p == w.size()) return false;
  // w = v - sum combo_k members_k, so w = sum (-combo_k) m_k + 1 * v
  Vector row_combo(members_.size() + 1);
  for (std::size_t k = 0; k < members_.size(); ++k) row_combo[k] = -combo[k];
  row_combo[members_.size()] = Cyclotomic(1);
  const Cyclotomic s = w[p].inverse();
  w = scaled(w, s);
  row_combo = scaled(row_combo, s);
  for (auto& c : combos_) c.resize(members_.size() + 1);
  members_.push_back(v);
  rows_.push_back(std::move(w));
  combos_.push_back(std::move(row_combo));
  pivots_.push_back(p);
  return true;
}

std::optional<Vector> LinearSpan::coordinates(const Vector& v) const {
  if (v.size() != length_) throw DimensionMismatch("span vector length mismatch");
  Vector w = v;
  Vector combo(members_.size());
  reduce(w, combo);
  if (!is_zero_vector(w)) return std::nullopt;
  return combo;
}

Vector vectorize(const Matrix& m) { return m.entries(); }

std::optional<Vector> solve_in_span(const std::vector<Matrix>& targets, const Matrix& candidate) {
  const std::size_t len = candidate.rows() * candidate.cols();
  LinearSpan span(len);
  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].rows() != candidate.rows() || targets[i].cols() != candidate.cols())
      throw DimensionMismatch("solve_in_span shape mismatch");
    if (span.insert(vectorize(targets[i]))) accepted.push_back(i);
  }
  auto coords = span.coordinates(vectorize(candidate));
  if (!coords) return std::nullopt;
  Vector out(targets.size());
  for (std::size_t k = 0; k < accepted.size(); ++k) out[accepted[k]] = (*coords)[k];
  return out;
}

Polynomial minimal_dependence(const Vector& start, const std::function<Vector(const Vector&)>& next,
                              std::size_t max_degree) {
  LinearSpan span(start.size());
  Vector cur = start;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (auto coords = span.coordinates(cur)) {
      // cur = sum c_i v_i  =>  x^k - sum c_i x^i
      std::vector<Cyclotomic> p(k + 1);
      for (std::size_t i = 0; i < k; ++i) p[i] = -(*coords)[i];
      p[k] = Cyclotomic(1);
      return Polynomial(std::move(p));
    }
    span.insert(cur);
    if (k < max_degree) cur = next(cur);
  }
  throw BoundExceeded("no linear dependence among the first " + std::to_string(max_degree + 1) + " powers");
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Polynomial::constant(Cyclotomic(1));
  // Incremental form of solve_in_span over I, A, A^2, ...; Cayley-Hamilton caps the degree at n.
  return minimal_dependence(
      vectorize(Matrix::identity(n)), [&](const Vector& v) { return vectorize(Matrix(n, n, v) * a); }, n);
}

bool is_nilpotent(const Matrix& a) {
  if (a.rows() == 0) return true;
  const Polynomial f = minimal_polynomial(a);
  for (long i = 0; i < f.degree(); ++i) {
    if (!f.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
  }
  return true;
}

}  // namespace hopfqexp
