#include "hopfqexp/polynomial.hpp"

#include <sstream>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

Polynomial::Polynomial(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Cyclotomic& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Cyclotomic& c, std::size_t degree) {
  std::vector<Cyclotomic> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Cyclotomic Polynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Cyclotomic(); }

const Cyclotomic& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

int Polynomial::conductor() const {
  int m = 1;
  for (const auto& c : c_) {
    if (!c.is_rational()) m = static_cast<int>(lcm_of(m, c.conductor()));
  }
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Cyclotomic> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Cyclotomic> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (c_.size() < divisor.c_.size()) return {Polynomial(), *this};
  std::vector<Cyclotomic> rem = c_;
  const std::size_t dn = divisor.c_.size() - 1;
  std::vector<Cyclotomic> q(c_.size() - dn);
  const Cyclotomic lead_inv = divisor.c_.back().inverse();
  for (std::size_t s = q.size(); s-- > 0;) {
    const Cyclotomic c = rem[s + dn] * lead_inv;
    q[s] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[s + j] -= c * divisor.c_[j];
  }
  rem.resize(dn);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& other) const { return (other % *this).is_zero(); }

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Cyclotomic> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Cyclotomic(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Cyclotomic inv = leading().inverse();
  std::vector<Cyclotomic> c = c_;
  for (auto& x : c) x = x * inv;
  return Polynomial(std::move(c));
}

Cyclotomic Polynomial::evaluate(const Cyclotomic& at) const {
  Cyclotomic acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool bare = i > 0 && c_[i].is_one();
    if (!bare) {
      if (c_[i].is_rational() || i == 0) {
        os << c_[i].to_string();
      } else {
        os << "(" << c_[i].to_string() << ")";
      }
    }
    if (i > 0) {
      if (!bare) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

Polynomial cyclotomic_polynomial(int m) {
  const auto& coeffs = detail::cyclotomic_coefficients(m);
  std::vector<Cyclotomic> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  const Polynomial g = gcd(f, f.derivative());
  if (g.is_zero()) return f.monic();
  return f.divmod(g).first.monic();
}

long default_root_order_bound(const Polynomial& f) {
  const long d = std::max<long>(f.degree(), 1) * euler_phi(f.conductor());
  return d * d + 240;
}

std::optional<long> root_of_unity_order(const Polynomial& f, std::optional<long> bound) {
  if (f.degree() < 1) return f.degree() == 0 ? std::optional<long>(1) : std::nullopt;
  if (f.coeff(0).is_zero()) return std::nullopt;
  const long limit = bound.value_or(default_root_order_bound(f));
  const Polynomial g = f.monic();
  const Polynomial one = Polynomial::constant(Cyclotomic(1));
  const Polynomial xpoly = Polynomial::x();
  Polynomial power = xpoly % g;  // x^n mod g, advanced one step at a time
  for (long n = 1; n <= limit; ++n) {
    if (power == one) return n;
    power = (power * xpoly) % g;
  }
  return std::nullopt;
}

}  // namespace hopfqexp
