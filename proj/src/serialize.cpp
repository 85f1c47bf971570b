#include "hopfqexp/serialize.hpp"

#include <fstream>
#include <sstream>

#include "hopfqexp/error.hpp"

namespace hopfqexp {

namespace {

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::size_t index_value(const Json& j, std::size_t limit, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(field, "expected a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= limit) throw SchemaError(field, "index " + std::to_string(v) + " out of range");
  return v;
}

const Json& array_of(const Json& j, std::size_t size, const std::string& field) {
  if (!j.is_array()) throw SchemaError(field, "expected an array");
  if (size != static_cast<std::size_t>(-1) && j.size() != size)
    throw SchemaError(field, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

constexpr auto kAnySize = static_cast<std::size_t>(-1);

Json vector_to_json(const Vector& v, int conductor) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x, conductor));
  return a;
}

Vector vector_from_json(const Json& j, std::size_t n, int conductor, const std::string& field) {
  array_of(j, n, field);
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], conductor, at(field, i)));
  return v;
}

Json matrix_to_json(const Matrix& m, int conductor) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i), conductor));
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, int conductor, const std::string& field) {
  array_of(j, rows, field);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector r = vector_from_json(j[i], cols, conductor, at(field, i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

Json polynomial_to_json(const Polynomial& p, int conductor) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(scalar_to_json(c, conductor));
  return a;
}

int conductor_of(const Polynomial& p) {
  long c = 1;
  for (const auto& x : p.coeffs())
    if (!x.is_zero() && !x.is_rational()) c = lcm_of(c, x.conductor());
  return static_cast<int>(c);
}

}  // namespace

Json scalar_to_json(const Cyclotomic& x, int conductor) {
  const Cyclotomic y = x.is_zero() ? Cyclotomic::zero(conductor) : x.lift(conductor);
  Json a = Json::array();
  const int d = euler_phi(conductor);
  for (int i = 0; i < d; ++i) a.push_back(format_rational(y.coeff(i)));
  return a;
}

Cyclotomic scalar_from_json(const Json& j, int conductor, const std::string& field) {
  const auto d = static_cast<std::size_t>(euler_phi(conductor));
  if (!j.is_array() || j.size() != d)
    throw SchemaError(field, "expected an array of " + std::to_string(d) + " rational strings");
  std::vector<Rational> c;
  c.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!j[i].is_string()) throw SchemaError(at(field, i), "expected a rational string such as \"-3/4\"");
    try {
      c.push_back(parse_rational(j[i].get<std::string>()));
    } catch (const std::exception& e) {
      throw SchemaError(at(field, i), e.what());
    }
  }
  return Cyclotomic(conductor, std::move(c));
}

Json algebra_to_json(const HopfAlgebra& h) {
  const int m = h.conductor();
  const std::size_t n = h.dim();
  Json j;
  j["name"] = h.name();
  j["dim"] = n;
  j["conductor"] = m;
  j["basis_labels"] = h.labels();
  j["unit"] = vector_to_json(h.unit(), m);
  j["counit"] = vector_to_json(h.counit(), m);
  Json mult = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& p = h.product(a, b);
      if (p.empty()) continue;
      Vector v(n, Cyclotomic::zero(m));
      for (const auto& t : p) v[t.index] = t.coeff;
      mult.push_back(Json::array({a, b, vector_to_json(v, m)}));
    }
  j["mult"] = std::move(mult);
  Json comult = Json::array();
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : h.coproduct(k)) comult.push_back(Json::array({k, t.left, t.right, scalar_to_json(t.coeff, m)}));
  j["comult"] = std::move(comult);
  j["antipode"] = matrix_to_json(h.antipode(), m);
  if (!h.grouplikes().empty()) {
    Json g = Json::array();
    for (const auto& x : h.grouplikes()) g.push_back(vector_to_json(x, m));
    j["grouplikes"] = std::move(g);
  }
  if (h.grading()) j["grading"] = *h.grading();
  return j;
}

HopfAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "an algebra document must be a JSON object");
  HopfStructure s;
  const Json& name = member(j, "name", "");
  if (!name.is_string()) throw SchemaError("name", "expected a string");
  s.name = name.get<std::string>();
  const Json& dim = member(j, "dim", "");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw SchemaError("dim", "expected a positive integer");
  const auto n = dim.get<std::size_t>();
  const Json& cond = member(j, "conductor", "");
  if (!cond.is_number_integer() || cond.get<long long>() < 1 || cond.get<long long>() > 100000)
    throw SchemaError("conductor", "expected a positive integer");
  s.conductor = cond.get<int>();
  const int m = s.conductor;

  const Json& labels = array_of(member(j, "basis_labels", ""), n, "basis_labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (!labels[i].is_string()) throw SchemaError(at("basis_labels", i), "expected a string");
    s.labels.push_back(labels[i].get<std::string>());
  }
  s.unit = vector_from_json(member(j, "unit", ""), n, m, "unit");
  s.counit = vector_from_json(member(j, "counit", ""), n, m, "counit");

  s.mult.assign(n * n, {});
  std::vector<bool> seen(n * n, false);
  const Json& mult = array_of(member(j, "mult", ""), kAnySize, "mult");
  for (std::size_t e = 0; e < mult.size(); ++e) {
    const std::string f = at("mult", e);
    const Json& entry = array_of(mult[e], 3, f);
    const std::size_t a = index_value(entry[0], n, f + "[0]"), b = index_value(entry[1], n, f + "[1]");
    if (seen[a * n + b]) throw SchemaError(f, "duplicate product entry");
    seen[a * n + b] = true;
    const Vector v = vector_from_json(entry[2], n, m, f + "[2]");
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) s.mult[a * n + b].push_back({k, v[k]});
  }

  s.comult.assign(n, {});
  const Json& comult = array_of(member(j, "comult", ""), kAnySize, "comult");
  for (std::size_t e = 0; e < comult.size(); ++e) {
    const std::string f = at("comult", e);
    const Json& entry = array_of(comult[e], 4, f);
    const std::size_t k = index_value(entry[0], n, f + "[0]");
    s.comult[k].push_back({index_value(entry[1], n, f + "[1]"), index_value(entry[2], n, f + "[2]"),
                           scalar_from_json(entry[3], m, f + "[3]")});
  }
  s.antipode = matrix_from_json(member(j, "antipode", ""), n, n, m, "antipode");

  if (auto it = j.find("grouplikes"); it != j.end()) {
    const Json& g = array_of(*it, kAnySize, "grouplikes");
    for (std::size_t i = 0; i < g.size(); ++i) s.grouplikes.push_back(vector_from_json(g[i], n, m, at("grouplikes", i)));
  }
  if (auto it = j.find("grading"); it != j.end()) {
    const Json& g = array_of(*it, n, "grading");
    std::vector<int> degrees;
    for (std::size_t i = 0; i < n; ++i) {
      if (!g[i].is_number_integer() || g[i].get<long long>() < 0)
        throw SchemaError(at("grading", i), "expected a non-negative integer degree");
      degrees.push_back(g[i].get<int>());
    }
    s.grading = std::move(degrees);
  }

  HopfAlgebra h(std::move(s));
  auto violations = validate(h);
  if (!violations.empty()) throw AxiomError(std::move(violations));
  return h;
}

std::string serialize(const HopfAlgebra& h) { return algebra_to_json(h).dump() + "\n"; }

HopfAlgebra deserialize(const std::string& text) { return algebra_from_json(parse_json(text, "algebra document")); }

Json double_to_json(const QuasitriangularData& d) {
  Json j = algebra_to_json(d.algebra);
  j["base_dim"] = d.base_dim;
  j["r_matrix"] = matrix_to_json(d.r_matrix, d.algebra.conductor());
  return j;
}

Json twist_to_json(const TwistData& t) {
  Json j;
  j["algebra"] = algebra_to_json(t.parent);
  j["conductor"] = t.parent.conductor();
  j["J"] = matrix_to_json(t.j, t.parent.conductor());
  j["J_inv"] = matrix_to_json(t.j_inv, t.parent.conductor());
  return j;
}

TwistData twist_from_json(const Json& j, const std::function<HopfAlgebra(const std::string&)>& resolve) {
  const Json& alg = member(j, "algebra", "");
  HopfAlgebra h = alg.is_string() ? resolve(alg.get<std::string>()) : algebra_from_json(alg);
  // J may live in a larger field than H; the conductor of the twist document wins if present.
  int m = h.conductor();
  if (auto it = j.find("conductor"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) throw SchemaError("conductor", "expected a positive integer");
    m = static_cast<int>(lcm_of(m, it->get<long>()));
  }
  if (m != h.conductor()) h = lift_conductor(h, m);
  const std::size_t n = h.dim();
  const Matrix jm = matrix_from_json(member(j, "J", ""), n, n, m, "J");
  std::optional<Matrix> j_inv;
  if (auto it = j.find("J_inv"); it != j.end()) j_inv = matrix_from_json(*it, n, n, m, "J_inv");
  return make_twist(h, jm, j_inv);
}

Json report_to_json(const QexpReport& r, int conductor) {
  const int m = static_cast<int>(lcm_of(conductor, lcm_of(conductor_of(r.min_poly), conductor_of(r.squarefree))));
  Json j;
  j["schema"] = "hopf-qexp/1";
  j["name"] = r.name;
  j["conductor"] = m;
  j["min_poly"] = polynomial_to_json(r.min_poly, m);
  j["squarefree"] = polynomial_to_json(r.squarefree, m);
  j["qexp"] = r.qexp;
  if (r.exponent) j["exponent"] = *r.exponent;
  else j["exponent"] = "infinite";
  j["s2_order"] = r.s2_order;
  j["unipotency_index"] = r.unipotency_index;
  j["route"] = r.route;
  j["cross_checked"] = r.cross_checked;
  return j;
}

std::string report_to_text(const QexpReport& r) {
  std::ostringstream os;
  os << "algebra:          " << r.name << "\n"
     << "min poly of u:    " << r.min_poly.to_string() << "\n"
     << "squarefree part:  " << r.squarefree.to_string() << "\n"
     << "qexp:             " << r.qexp << "\n"
     << "exponent:         " << (r.exponent ? std::to_string(*r.exponent) : "infinite") << "\n"
     << "|S^2|:            " << r.s2_order << "\n"
     << "unipotency index: " << r.unipotency_index << "\n"
     << "route:            " << r.route << (r.cross_checked ? " (cross-checked)" : "") << "\n";
  return os.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(what, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hopfqexp
