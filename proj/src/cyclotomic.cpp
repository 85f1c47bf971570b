#include "hopfqexp/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

namespace detail {
namespace {

using IntPoly = std::vector<long>;

// Exact division of integer polynomials with monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

const IntPoly& cyclotomic_coefficients_locked(int m, std::map<int, IntPoly>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact(num, cyclotomic_coefficients_locked(d, cache));
  }
  return cache.emplace(m, std::move(num)).first->second;
}

std::map<int, IntPoly>& polynomial_cache() {
  static std::map<int, IntPoly> cache;
  return cache;
}

}  // namespace

const std::vector<long>& cyclotomic_coefficients(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic polynomial needs m >= 1");
  std::lock_guard lock(table_mutex());
  return cyclotomic_coefficients_locked(m, polynomial_cache());
}

const CyclotomicField& cyclotomic_field(int conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  const IntPoly& modulus = cyclotomic_coefficients(conductor);
  std::lock_guard lock(table_mutex());
  if (auto it = fields.find(conductor); it != fields.end()) return *it->second;

  auto f = std::make_unique<CyclotomicField>();
  f->conductor = conductor;
  f->modulus = modulus;
  f->degree = static_cast<int>(modulus.size()) - 1;
  const auto deg = static_cast<std::size_t>(f->degree);

  // Walk zeta^k for k = 0 .. max(m, 2 deg) reducing with Phi_m.
  IntPoly cur(deg, 0);
  cur[0] = 1;
  const std::size_t steps = std::max<std::size_t>(static_cast<std::size_t>(conductor), 2 * deg);
  std::vector<IntPoly> powers;
  for (std::size_t k = 0; k < steps; ++k) {
    powers.push_back(cur);
    const long top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * modulus[i];
    }
  }
  f->zeta_powers.assign(powers.begin(), powers.begin() + conductor);
  for (std::size_t k = 0; k + 1 < deg; ++k) f->high_powers.push_back(powers[deg + k]);
  return *fields.emplace(conductor, std::move(f)).first->second;
}

}  // namespace detail

int euler_phi(int m) { return detail::cyclotomic_field(m).degree; }

long lcm_of(long a, long b) { return std::lcm(a, b); }

namespace {

const detail::CyclotomicField* rational_field() {
  static const detail::CyclotomicField* f = &detail::cyclotomic_field(1);
  return f;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of polynomials over Q; divisor must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  const std::size_t shift_max = a.size() - b.size();
  QPoly q(shift_max + 1);
  const Rational lead = b.back();
  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const Rational c = a[s + b.size() - 1] / lead;
    q[s] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Cyclotomic::Cyclotomic() : field_(rational_field()) {}

Cyclotomic::Cyclotomic(long value) : field_(rational_field()) {
  if (value != 0) c_.emplace_back(value);
}

Cyclotomic::Cyclotomic(const Rational& value) : field_(rational_field()) {
  if (value != 0) c_.push_back(value);
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : field_(&detail::cyclotomic_field(conductor)), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(field_->degree)) {
    throw DimensionMismatch("cyclotomic number in Q(zeta_" + std::to_string(conductor) + ") needs " +
                            std::to_string(field_->degree) + " coordinates, got " +
                            std::to_string(c_.size()));
  }
  for (auto& r : c_) r.canonicalize();
  normalize();
}

Cyclotomic::Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> c)
    : field_(field), c_(std::move(c)) {
  normalize();
}

Cyclotomic Cyclotomic::zero(int conductor) {
  return Cyclotomic(&detail::cyclotomic_field(conductor), {});
}

Cyclotomic Cyclotomic::rational(int conductor, const Rational& value) {
  const auto* f = &detail::cyclotomic_field(conductor);
  std::vector<Rational> c;
  if (value != 0) {
    c.resize(static_cast<std::size_t>(f->degree));
    c[0] = value;
  }
  return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::zeta(int conductor, long k) {
  const auto* f = &detail::cyclotomic_field(conductor);
  long r = k % conductor;
  if (r < 0) r += conductor;
  const auto& p = f->zeta_powers[static_cast<std::size_t>(r)];
  std::vector<Rational> c(p.begin(), p.end());
  return Cyclotomic(f, std::move(c));
}

void Cyclotomic::normalize() {
  for (const auto& r : c_) {
    if (r != 0) return;
  }
  c_.clear();
}

std::vector<Rational> Cyclotomic::coeffs() const {
  if (!c_.empty()) return c_;
  return std::vector<Rational>(static_cast<std::size_t>(field_->degree));
}

Rational Cyclotomic::coeff(int i) const {
  if (c_.empty()) return 0;
  return c_.at(static_cast<std::size_t>(i));
}

bool Cyclotomic::is_one() const { return is_rational() && !c_.empty() && c_[0] == 1; }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

const detail::CyclotomicField* Cyclotomic::common_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.field_;
  if (a.is_rational()) return b.field_;
  if (b.is_rational()) return a.field_;
  throw ConductorMismatch("cannot combine elements of Q(zeta_" + std::to_string(a.conductor()) +
                          ") and Q(zeta_" + std::to_string(b.conductor()) + ") without lifting");
}

void Cyclotomic::move_to(const detail::CyclotomicField* field) {
  if (field == field_) return;
  // Only reached for rational values.
  if (!c_.empty()) {
    Rational r = c_[0];
    c_.assign(static_cast<std::size_t>(field->degree), Rational(0));
    c_[0] = r;
  }
  field_ = field;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  const auto* f = common_field(*this, b);
  move_to(f);
  if (b.c_.empty()) return *this;
  if (c_.empty()) c_.assign(static_cast<std::size_t>(f->degree), Rational(0));
  if (b.field_ == f) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  } else {
    c_[0] += b.c_[0];
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
  const auto* f = common_field(*this, b);
  move_to(f);
  if (b.c_.empty()) return *this;
  if (c_.empty()) c_.assign(static_cast<std::size_t>(f->degree), Rational(0));
  if (b.field_ == f) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  } else {
    c_[0] -= b.c_[0];
  }
  normalize();
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const auto* f = Cyclotomic::common_field(a, b);
  if (a.c_.empty() || b.c_.empty()) return Cyclotomic(f, {});
  // Rational operand: scale the other one.
  if (a.field_ != f || (f->degree > 1 && a.is_rational())) {
    std::vector<Rational> c = b.c_;
    if (b.field_ != f) {
      Cyclotomic r = b;
      r.move_to(f);
      c = r.c_;
    }
    for (auto& x : c) x *= a.c_[0];
    return Cyclotomic(f, std::move(c));
  }
  if (b.field_ != f || (f->degree > 1 && b.is_rational())) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= b.c_[0];
    return Cyclotomic(f, std::move(c));
  }
  const auto deg = static_cast<std::size_t>(f->degree);
  if (deg == 1) return Cyclotomic(f, {a.c_[0] * b.c_[0]});
  std::vector<Rational> t(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.c_[j] != 0) t[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (std::size_t k = 0; k + 1 < deg; ++k) {
    const Rational& hi = t[deg + k];
    if (hi == 0) continue;
    const auto& red = f->high_powers[k];
    for (std::size_t i = 0; i < deg; ++i) {
      if (red[i] != 0) t[i] += hi * red[i];
    }
  }
  t.resize(deg);
  return Cyclotomic(f, std::move(t));
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (field_->degree == 1 && a.field_ == field_ && b.field_ == field_) {
    if (c_.empty()) {
      c_.push_back(a.c_[0] * b.c_[0]);
    } else {
      c_[0] += a.c_[0] * b.c_[0];
    }
    normalize();
    return;
  }
  *this += a * b;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) { return *this = *this * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
  if (a.field_ == b.field_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  const int m = static_cast<int>(std::lcm(a.conductor(), b.conductor()));
  return a.lift(m).c_ == b.lift(m).c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (c_.empty()) throw DivisionByZero("inverse of zero");
  if (field_->degree == 1 || is_rational()) {
    std::vector<Rational> c(c_.size());
    c[0] = 1 / c_[0];
    return Cyclotomic(field_, std::move(c));
  }
  QPoly r0(field_->modulus.begin(), field_->modulus.end());
  QPoly r1 = c_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_m is irreducible.
  const Rational g = r0[0];
  QPoly modulus(field_->modulus.begin(), field_->modulus.end());
  QPoly inv = divmod(s0, modulus).second;
  std::vector<Rational> c(static_cast<std::size_t>(field_->degree));
  for (std::size_t i = 0; i < inv.size(); ++i) c[i] = inv[i] / g;
  return Cyclotomic(field_, std::move(c));
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result = Cyclotomic::rational(conductor(), 1);
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Cyclotomic Cyclotomic::lift(int target) const {
  if (target < 1 || target % conductor() != 0) {
    throw ConductorMismatch("cannot lift Q(zeta_" + std::to_string(conductor()) + ") to Q(zeta_" +
                            std::to_string(target) + ")");
  }
  const auto* f = &detail::cyclotomic_field(target);
  if (f == field_) return *this;
  std::vector<Rational> c(static_cast<std::size_t>(f->degree));
  if (!c_.empty()) {
    const int step = target / conductor();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& z = f->zeta_powers[(i * static_cast<std::size_t>(step)) % static_cast<std::size_t>(target)];
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (z[j] != 0) c[j] += c_[i] * z[j];
      }
    }
  }
  return Cyclotomic(f, std::move(c));
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational v = c_[i];
    if (v == 0) continue;
    const bool neg = v < 0;
    if (neg) v = -v;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << format_rational(v);
    } else {
      if (v != 1) os << format_rational(v) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] == '/') {
      if (slash || i == start || i + 1 == text.size()) throw std::invalid_argument("bad rational '" + text + "'");
      slash = true;
    } else if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
  }
  if (start == text.size()) throw std::invalid_argument("bad rational '" + text + "'");
  Rational r(text[0] == '+' ? text.substr(1) : text, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(10); }

}  // namespace hopfqexp
