#include "hopfqexp/presets.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "hopfqexp/error.hpp"
#include "hopfqexp/pbw.hpp"

namespace hopfqexp {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::vector<Vector> basis_vectors(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<Vector> out;
  for (std::size_t i : indices) {
    Vector v(n);
    v[i] = Cyclotomic(1);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t CayleyTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order() && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) return e;
  }
  throw std::invalid_argument("group table has no identity");
}

std::size_t CayleyTable::inverse(std::size_t a) const {
  const std::size_t e = identity();
  for (std::size_t b = 0; b < order(); ++b)
    if (table[a][b] == e && table[b][a] == e) return b;
  throw std::invalid_argument("element " + elements[a] + " has no inverse");
}

long CayleyTable::exponent() const {
  const std::size_t e = identity();
  long result = 1;
  for (std::size_t a = 0; a < order(); ++a) {
    long k = 1;
    for (std::size_t p = a; p != e; p = table[p][a]) ++k;
    // k counts a^1 .. a^k = e
    result = lcm_of(result, a == e ? 1 : k);
  }
  return result;
}

void validate_group(const CayleyTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("group table is empty");
  if (g.table.size() != n) throw std::invalid_argument("group table must have one row per element");
  for (const auto& row : g.table) {
    if (row.size() != n) throw std::invalid_argument("group table rows must have one entry per element");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw std::invalid_argument("group table is not associative at (" + g.elements[a] + ", " + g.elements[b] +
                                      ", " + g.elements[c] + ")");
  g.identity();
  for (std::size_t a = 0; a < n; ++a) g.inverse(a);
}

CayleyTable cyclic_product_group(const std::vector<int>& orders) {
  std::size_t n = 1;
  for (int o : orders) {
    if (o < 1) throw std::invalid_argument("cyclic factor orders must be positive");
    n *= static_cast<std::size_t>(o);
  }
  auto coords = [&](std::size_t idx) {
    std::vector<int> c(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      c[k] = static_cast<int>(idx % static_cast<std::size_t>(orders[k]));
      idx /= static_cast<std::size_t>(orders[k]);
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) idx = idx * static_cast<std::size_t>(orders[k]) + static_cast<std::size_t>(c[k]);
    return idx;
  };
  CayleyTable g;
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = coords(i);
    std::string name;
    if (orders.size() == 1) {
      name = c[0] == 0 ? "e" : (c[0] == 1 ? "a" : "a^" + std::to_string(c[0]));
    } else {
      name = "(";
      for (std::size_t k = 0; k < c.size(); ++k) name += (k ? "," : "") + std::to_string(c[k]);
      name += ")";
    }
    g.elements.push_back(name);
  }
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = coords(i);
      const auto b = coords(j);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] = (a[k] + b[k]) % orders[k];
      g.table[i][j] = index(a);
    }
  return g;
}

CayleyTable builtin_group(const std::string& name) {
  if (name == "Z2") return cyclic_product_group({2});
  if (name == "Z3") return cyclic_product_group({3});
  if (name == "Z4") return cyclic_product_group({4});
  if (name == "Z6") return cyclic_product_group({6});
  if (name == "Z2xZ2") return cyclic_product_group({2, 2});
  if (name == "Z3xZ3") return cyclic_product_group({3, 3});
  if (name == "S3") {
    // Permutations of {0,1,2} composed as (s t)(i) = s(t(i)); r a 3-cycle, s a transposition.
    using Perm = std::array<int, 3>;
    auto compose = [](const Perm& a, const Perm& b) {
      Perm c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
      return c;
    };
    const Perm e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
    const Perm r2 = compose(r, r);
    const std::vector<Perm> perms = {e, r, r2, s, compose(s, r), compose(s, r2)};
    CayleyTable g;
    g.elements = {"e", "r", "r^2", "s", "sr", "sr^2"};
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        g.table[a][b] = static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), compose(perms[a], perms[b])) - perms.begin());
    return g;
  }
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

CayleyTable read_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group table file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("group table", e.what());
  }
  CayleyTable g;
  try {
    g.elements = j.at("elements").get<std::vector<std::string>>();
    g.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("group table", e.what());
  }
  validate_group(g);
  return g;
}

std::vector<std::vector<Cyclotomic>> linear_characters(const CayleyTable& g) {
  const std::size_t n = g.order();
  const long e = g.exponent();
  const std::size_t id = g.identity();

  std::vector<std::size_t> gens;
  std::vector<bool> covered(n, false);
  covered[id] = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    // Recompute the generated subgroup.
    std::vector<std::size_t> stack = {id};
    std::fill(covered.begin(), covered.end(), false);
    covered[id] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t s : gens) {
        const std::size_t y = g.table[x][s];
        if (!covered[y]) {
          covered[y] = true;
          stack.push_back(y);
        }
      }
    }
  }

  std::vector<std::vector<Cyclotomic>> out;
  std::vector<long> choice(gens.size(), 0);
  while (true) {
    // Propagate exponents along products by generators, rejecting inconsistencies.
    std::vector<long> v(n, -1);
    v[id] = 0;
    std::vector<std::size_t> stack = {id};
    bool ok = true;
    while (!stack.empty() && ok) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const std::size_t y = g.table[x][gens[k]];
        const long val = (v[x] + choice[k]) % e;
        if (v[y] < 0) {
          v[y] = val;
          stack.push_back(y);
        } else if (v[y] != val) {
          ok = false;
        }
      }
    }
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = v[g.table[a][b]] == (v[a] + v[b]) % e;
    if (ok) {
      std::vector<Cyclotomic> chi;
      for (std::size_t a = 0; a < n; ++a) chi.push_back(Cyclotomic::zeta(static_cast<int>(e), v[a]));
      out.push_back(std::move(chi));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == e) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

std::vector<std::vector<Cyclotomic>> cyclic_product_characters(const std::vector<int>& orders) {
  const CayleyTable g = cyclic_product_group(orders);
  long e = 1;
  for (int o : orders) e = lcm_of(e, o);
  const std::size_t n = g.order();
  auto coords = [&](std::size_t idx) {
    std::vector<long> c(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      c[k] = static_cast<long>(idx % static_cast<std::size_t>(orders[k]));
      idx /= static_cast<std::size_t>(orders[k]);
    }
    return c;
  };
  std::vector<std::vector<Cyclotomic>> out(n, std::vector<Cyclotomic>(n));
  for (std::size_t b = 0; b < n; ++b) {
    const auto cb = coords(b);
    for (std::size_t a = 0; a < n; ++a) {
      const auto ca = coords(a);
      long k = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) k += ca[i] * cb[i] * (e / orders[i]);
      out[b][a] = Cyclotomic::zeta(static_cast<int>(e), k % e);
    }
  }
  return out;
}

HopfAlgebra group_algebra(const CayleyTable& g, const std::string& name, int conductor) {
  validate_group(g);
  const std::size_t n = g.order();
  HopfStructure s;
  s.name = name;
  s.conductor = conductor;
  s.labels = g.elements;
  s.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.mult[a * n + b].push_back({g.table[a][b], Cyclotomic(1)});
  s.unit.assign(n, Cyclotomic());
  s.unit[g.identity()] = Cyclotomic(1);
  s.comult.resize(n);
  for (std::size_t a = 0; a < n; ++a) s.comult[a].push_back({a, a, Cyclotomic(1)});
  s.counit.assign(n, Cyclotomic(1));
  s.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) s.antipode(g.inverse(a), a) = Cyclotomic(1);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  s.grouplikes = basis_vectors(n, all);
  return HopfAlgebra(std::move(s));
}

HopfAlgebra dual_group_algebra(const CayleyTable& g, const std::string& name) {
  validate_group(g);
  const std::size_t n = g.order();
  HopfStructure s;
  s.name = name;
  s.conductor = static_cast<int>(g.exponent());
  for (const auto& e : g.elements) s.labels.push_back("d_" + e);
  s.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) s.mult[a * n + a].push_back({a, Cyclotomic(1)});
  s.unit.assign(n, Cyclotomic(1));
  s.comult.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s.comult[g.table[a][b]].push_back({a, b, Cyclotomic(1)});
  s.counit.assign(n, Cyclotomic());
  s.counit[g.identity()] = Cyclotomic(1);
  s.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) s.antipode(g.inverse(a), a) = Cyclotomic(1);
  for (auto& chi : linear_characters(g)) s.grouplikes.push_back(std::move(chi));
  return HopfAlgebra(std::move(s));
}

HopfAlgebra trivial_algebra() {
  return group_algebra(cyclic_product_group({1}), "trivial");
}

HopfAlgebra taft(int n) {
  if (n < 2) throw std::invalid_argument("Taft algebras need n >= 2");
  const Cyclotomic zeta = Cyclotomic::zeta(n);
  PbwPresentation p;
  p.name = n == 2 ? "sweedler" : "taft:" + std::to_string(n);
  p.conductor = n;
  p.generators = {"g", "x"};
  p.order = {n, n};
  p.cyclic = {true, false};
  p.rules[{1, 0}] = {{zeta.inverse(), {0, 1}}};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) p.basis.push_back({i, j});
  const PbwAlgebra alg(p);

  const Word g_inv(static_cast<std::size_t>(n - 1), 0);
  Word x_g_inv = {1};
  x_g_inv.insert(x_g_inv.end(), g_inv.begin(), g_inv.end());
  std::vector<WordTensorExpr> delta = {{{Cyclotomic(1), {0}, {0}}},
                                       {{Cyclotomic(1), {1}, {0}}, {Cyclotomic(1), {}, {1}}}};
  std::vector<WordExpr> anti = {{{Cyclotomic(1), g_inv}}, {{Cyclotomic(-1), x_g_inv}}};
  std::vector<std::size_t> group(static_cast<std::size_t>(n));
  std::iota(group.begin(), group.end(), 0);
  std::vector<int> grading;
  for (const auto& e : p.basis) grading.push_back(e[1]);
  return alg.build(delta, anti, {Cyclotomic(1), Cyclotomic(0)}, basis_vectors(alg.dim(), group), grading);
}

HopfAlgebra sweedler() { return taft(2); }

HopfAlgebra uq_borel_sl2(int p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("quantum presets need an odd prime p >= 3");
  const Cyclotomic q = Cyclotomic::zeta(p);
  PbwPresentation pr;
  pr.name = "uqb2:" + std::to_string(p);
  pr.conductor = p;
  pr.generators = {"E", "K"};
  pr.order = {p, p};
  pr.cyclic = {false, true};
  pr.rules[{1, 0}] = {{q * q, {0, 1}}};
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c) pr.basis.push_back({a, c});
  const PbwAlgebra alg(pr);

  const Word k_inv(static_cast<std::size_t>(p - 1), 1);
  Word e_k_inv = {0};
  e_k_inv.insert(e_k_inv.end(), k_inv.begin(), k_inv.end());
  std::vector<WordTensorExpr> delta = {{{Cyclotomic(1), {0}, {1}}, {Cyclotomic(1), {}, {0}}},
                                       {{Cyclotomic(1), {1}, {1}}}};
  std::vector<WordExpr> anti = {{{Cyclotomic(-1), e_k_inv}}, {{Cyclotomic(1), k_inv}}};
  std::vector<std::size_t> group(static_cast<std::size_t>(p));
  std::iota(group.begin(), group.end(), 0);
  std::vector<int> grading;
  for (const auto& e : pr.basis) grading.push_back(e[0]);
  return alg.build(delta, anti, {Cyclotomic(0), Cyclotomic(1)}, basis_vectors(alg.dim(), group), grading);
}

HopfAlgebra uq_sl2(int p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("quantum presets need an odd prime p >= 3");
  if (p > 5) throw std::invalid_argument("uqsl2 is only built for p = 3 and p = 5");
  const Cyclotomic q = Cyclotomic::zeta(p);
  const Cyclotomic q_inv = q.inverse();
  const Cyclotomic c = (q - q_inv).inverse();
  PbwPresentation pr;
  pr.name = "uqsl2:" + std::to_string(p);
  pr.conductor = p;
  pr.generators = {"E", "F", "K"};
  pr.order = {p, p, p};
  pr.cyclic = {false, false, true};
  const Word k_inv(static_cast<std::size_t>(p - 1), 2);
  // F E = E F - (K - K^{-1}) / (q - q^{-1})
  pr.rules[{1, 0}] = {{Cyclotomic(1), {0, 1}}, {-c, {2}}, {c, k_inv}};
  pr.rules[{2, 0}] = {{q * q, {0, 2}}};
  pr.rules[{2, 1}] = {{q_inv * q_inv, {1, 2}}};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int k = 0; k < p; ++k) pr.basis.push_back({a, b, k});
  const PbwAlgebra alg(pr);

  Word e_k_inv = {0};
  e_k_inv.insert(e_k_inv.end(), k_inv.begin(), k_inv.end());
  std::vector<WordTensorExpr> delta = {{{Cyclotomic(1), {0}, {2}}, {Cyclotomic(1), {}, {0}}},
                                       {{Cyclotomic(1), {1}, {}}, {Cyclotomic(1), k_inv, {1}}},
                                       {{Cyclotomic(1), {2}, {2}}}};
  std::vector<WordExpr> anti = {{{Cyclotomic(-1), e_k_inv}}, {{Cyclotomic(-1), {2, 1}}}, {{Cyclotomic(1), k_inv}}};
  std::vector<std::size_t> group(static_cast<std::size_t>(p));
  std::iota(group.begin(), group.end(), 0);
  // No Z_+-grading: E F - F E has degree-0 terms.
  return alg.build(delta, anti, {Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}, basis_vectors(alg.dim(), group));
}

PresetDescriptor PresetDescriptor::parse(const std::string& text) {
  PresetDescriptor d;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_param = [&]() {
    if (rest.empty()) throw std::invalid_argument("preset '" + head + "' needs a parameter");
    return parse_int(rest, head);
  };
  if (head == "trivial" && rest.empty()) {
    d.kind = PresetKind::trivial;
  } else if (head == "sweedler" && rest.empty()) {
    d.kind = PresetKind::sweedler;
  } else if (head == "taft") {
    d.kind = PresetKind::taft;
    d.parameter = need_param();
    if (d.parameter < 2) throw std::invalid_argument("taft:<n> needs n >= 2");
  } else if (head == "uqb2" || head == "uqsl2") {
    d.kind = head == "uqb2" ? PresetKind::uq_borel_sl2 : PresetKind::uq_sl2;
    d.parameter = need_param();
    if (!is_odd_prime(d.parameter)) throw std::invalid_argument(head + ":<p> needs an odd prime p >= 3");
    if (d.kind == PresetKind::uq_sl2 && d.parameter > 5) throw std::invalid_argument("uqsl2 is only built for p = 3 and p = 5");
  } else if (head == "group" || head == "dualgroup") {
    d.kind = head == "group" ? PresetKind::group_algebra : PresetKind::dual_group_algebra;
    if (rest.empty()) throw std::invalid_argument("preset '" + head + "' needs a group");
    std::string group = rest;
    if (group.rfind("builtin:", 0) != 0) {
      // Bare builtin names are accepted as a shorthand.
      try {
        builtin_group(group);
        group = "builtin:" + group;
      } catch (const std::invalid_argument&) {
      }
    } else {
      builtin_group(group.substr(8));
    }
    d.group = group;
  } else if (head == "tensor") {
    d.kind = PresetKind::tensor;
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("tensor:<a>,<b> needs two presets");
    d.factors.push_back(parse(rest.substr(0, comma)));
    d.factors.push_back(parse(rest.substr(comma + 1)));
  } else {
    throw std::invalid_argument("unknown preset '" + text + "'");
  }
  return d;
}

std::string PresetDescriptor::name() const {
  switch (kind) {
    case PresetKind::trivial: return "trivial";
    case PresetKind::sweedler: return "sweedler";
    case PresetKind::taft: return "taft:" + std::to_string(parameter);
    case PresetKind::uq_borel_sl2: return "uqb2:" + std::to_string(parameter);
    case PresetKind::uq_sl2: return "uqsl2:" + std::to_string(parameter);
    case PresetKind::group_algebra: return "group:" + group;
    case PresetKind::dual_group_algebra: return "dualgroup:" + group;
    case PresetKind::tensor: return "tensor:" + factors.at(0).name() + "," + factors.at(1).name();
  }
  return {};
}

namespace {

CayleyTable load_group(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_group(spec.substr(8));
  return read_group_table(spec);
}

}  // namespace

HopfAlgebra PresetDescriptor::build() const {
  switch (kind) {
    case PresetKind::trivial: return trivial_algebra();
    case PresetKind::sweedler: return sweedler();
    case PresetKind::taft: return taft(parameter).renamed(name());
    case PresetKind::uq_borel_sl2: return uq_borel_sl2(parameter);
    case PresetKind::uq_sl2: return uq_sl2(parameter);
    case PresetKind::group_algebra: return group_algebra(load_group(group), name());
    case PresetKind::dual_group_algebra: return dual_group_algebra(load_group(group), name());
    case PresetKind::tensor: return tensor(factors.at(0).build(), factors.at(1).build()).renamed(name());
  }
  throw std::logic_error("unhandled preset kind");
}

ExpectedInvariants PresetDescriptor::expected() const {
  ExpectedInvariants e;
  switch (kind) {
    case PresetKind::trivial:
      e.qexp = e.exponent = e.s2_order = e.group_exponent = 1;
      break;
    case PresetKind::sweedler:
      e.qexp = e.s2_order = e.group_exponent = 2;
      e.exponent_infinite = true;
      break;
    case PresetKind::taft:
    case PresetKind::uq_borel_sl2:
    case PresetKind::uq_sl2:
      e.qexp = e.s2_order = e.group_exponent = parameter;
      e.exponent_infinite = true;
      break;
    case PresetKind::group_algebra: {
      const long x = load_group(group).exponent();
      e.qexp = e.exponent = e.group_exponent = x;
      e.s2_order = 1;
      break;
    }
    case PresetKind::dual_group_algebra: {
      const long x = load_group(group).exponent();
      e.qexp = e.exponent = x;
      e.s2_order = 1;
      break;
    }
    case PresetKind::tensor: {
      const auto a = factors.at(0).expected(), b = factors.at(1).expected();
      auto both = [](std::optional<long> x, std::optional<long> y) -> std::optional<long> {
        if (x && y) return lcm_of(*x, *y);
        return std::nullopt;
      };
      e.qexp = both(a.qexp, b.qexp);
      e.s2_order = both(a.s2_order, b.s2_order);
      e.group_exponent = both(a.group_exponent, b.group_exponent);
      e.exponent_infinite = a.exponent_infinite || b.exponent_infinite;
      if (!e.exponent_infinite) e.exponent = both(a.exponent, b.exponent);
      break;
    }
  }
  return e;
}

bool PresetDescriptor::pointed() const {
  switch (kind) {
    case PresetKind::dual_group_algebra: {
      const CayleyTable g = load_group(group);
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
          if (g.table[a][b] != g.table[b][a]) return false;
      return true;
    }
    case PresetKind::tensor: return factors.at(0).pointed() && factors.at(1).pointed();
    default: return true;
  }
}

HopfAlgebra make_preset(const std::string& name) { return PresetDescriptor::parse(name).build(); }

std::vector<std::string> preset_zoo() {
  return {"trivial",           "group:builtin:Z2", "group:builtin:Z3",    "group:builtin:Z4",
          "group:builtin:Z6",  "group:builtin:Z2xZ2", "group:builtin:S3", "dualgroup:builtin:Z3",
          "dualgroup:builtin:S3", "sweedler",      "taft:3",              "taft:4",
          "taft:5",            "tensor:sweedler,group:builtin:Z3",        "uqb2:3",
          "uqsl2:3"};
}

}  // namespace hopfqexp
