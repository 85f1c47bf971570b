#include "hopfqexp/pbw.hpp"

#include <deque>
#include <stdexcept>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

PbwAlgebra::PbwAlgebra(PbwPresentation p) : p_(std::move(p)) {
  const std::size_t g = p_.generators.size();
  if (p_.order.size() != g || p_.cyclic.size() != g) throw std::invalid_argument("generator data size mismatch");
  for (std::size_t i = 0; i < p_.basis.size(); ++i) {
    if (p_.basis[i].size() != g) throw std::invalid_argument("basis exponent vector has wrong length");
    if (!index_.emplace(p_.basis[i], i).second) throw std::invalid_argument("duplicate basis monomial");
  }
}

std::size_t PbwAlgebra::index_of(const std::vector<int>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) {
    std::string e;
    for (int x : exponents) e += " " + std::to_string(x);
    throw std::out_of_range("monomial with exponents" + e + " outside the PBW basis of " + p_.name);
  }
  return it->second;
}

std::string PbwAlgebra::label(std::size_t i) const {
  std::string s;
  const auto& e = p_.basis[i];
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    s += p_.generators[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

Word PbwAlgebra::monomial_word(std::size_t i) const {
  Word w;
  const auto& e = p_.basis[i];
  for (std::size_t k = 0; k < e.size(); ++k) w.insert(w.end(), static_cast<std::size_t>(e[k]), static_cast<int>(k));
  return w;
}

Vector PbwAlgebra::straighten(const Word& start) const {
  Vector out(dim());
  std::deque<WordTerm> work;
  work.push_back({Cyclotomic(1), start});
  while (!work.empty()) {
    WordTerm t = std::move(work.front());
    work.pop_front();
    if (t.coeff.is_zero()) continue;
    Word& w = t.word;

    // Collapse runs of a repeated generator: g^order = 1 or 0.
    bool vanished = false;
    for (std::size_t i = 0; i < w.size() && !vanished;) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      const auto gen = static_cast<std::size_t>(w[i]);
      const auto ord = static_cast<std::size_t>(p_.order[gen]);
      if (j - i >= ord) {
        if (!p_.cyclic[gen]) {
          vanished = true;
          break;
        }
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + ord));
        i = 0;  // the neighbours of the removed run may now form a longer run
        continue;
      }
      i = j;
    }
    if (vanished) continue;

    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      std::vector<int> e(p_.generators.size(), 0);
      for (int x : w) ++e[static_cast<std::size_t>(x)];
      out[index_of(e)] += t.coeff;
      continue;
    }
    auto rule = p_.rules.find({w[pos], w[pos + 1]});
    if (rule == p_.rules.end()) {
      throw std::logic_error("no commutation rule for " + p_.generators[static_cast<std::size_t>(w[pos])] +
                             p_.generators[static_cast<std::size_t>(w[pos + 1])]);
    }
    for (const auto& r : rule->second) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), r.word.begin(), r.word.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      work.push_back({t.coeff * r.coeff, std::move(nw)});
    }
  }
  for (auto& c : out) c = c.is_zero() ? Cyclotomic::zero(p_.conductor) : c.lift(p_.conductor);
  return out;
}

Vector PbwAlgebra::evaluate(const WordExpr& e) const {
  Vector out(dim());
  for (const auto& t : e) axpy(out, t.coeff, straighten(t.word));
  return out;
}

Matrix PbwAlgebra::evaluate(const WordTensorExpr& e) const {
  Matrix out(dim(), dim());
  for (const auto& t : e) {
    const Vector l = straighten(t.left), r = straighten(t.right);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (l[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (!r[j].is_zero()) out(i, j) += t.coeff * l[i] * r[j];
    }
  }
  return out;
}

HopfAlgebra PbwAlgebra::build(const std::vector<WordTensorExpr>& generator_coproducts,
                              const std::vector<WordExpr>& generator_antipodes,
                              const std::vector<Cyclotomic>& generator_counits, std::vector<Vector> grouplikes,
                              std::optional<std::vector<int>> grading) const {
  const std::size_t n = dim(), ng = p_.generators.size();
  if (generator_coproducts.size() != ng || generator_antipodes.size() != ng || generator_counits.size() != ng)
    throw std::invalid_argument("one image per generator is required");

  HopfStructure s;
  s.name = p_.name;
  s.conductor = p_.conductor;
  for (std::size_t i = 0; i < n; ++i) s.labels.push_back(label(i));
  s.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const Word wi = monomial_word(i);
    for (std::size_t j = 0; j < n; ++j) {
      Word w = wi;
      const Word wj = monomial_word(j);
      w.insert(w.end(), wj.begin(), wj.end());
      const Vector v = straighten(w);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) s.mult[i * n + j].push_back({k, v[k]});
    }
  }
  s.unit = straighten({});

  // Scaffold with the algebra structure only, to multiply in H and H (x) H.
  HopfStructure scaffold = s;
  scaffold.comult.assign(n, {});
  scaffold.counit.assign(n, Cyclotomic());
  scaffold.antipode = Matrix::identity(n);
  const HopfAlgebra alg(scaffold);

  std::vector<Matrix> gen_delta;
  std::vector<Vector> gen_s;
  for (std::size_t g = 0; g < ng; ++g) {
    gen_delta.push_back(evaluate(generator_coproducts[g]));
    gen_s.push_back(evaluate(generator_antipodes[g]));
  }

  s.comult.assign(n, {});
  s.counit.resize(n);
  std::vector<Vector> s_cols(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Word w = monomial_word(k);
    Matrix delta = alg.tensor_one();
    Vector anti = alg.one();
    Cyclotomic eps(1);
    for (int g : w) {
      const auto gi = static_cast<std::size_t>(g);
      delta = alg.multiply_tensor(delta, gen_delta[gi]);
      anti = alg.multiply(gen_s[gi], anti);
      eps *= generator_counits[gi];
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!delta(a, b).is_zero()) s.comult[k].push_back({a, b, delta(a, b)});
    s.counit[k] = eps;
    s_cols[k] = std::move(anti);
  }
  s.antipode = Matrix::from_columns(s_cols);
  s.grouplikes = std::move(grouplikes);
  s.grading = std::move(grading);
  return HopfAlgebra(std::move(s));
}

}  // namespace hopfqexp
