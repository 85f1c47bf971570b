// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hopfqexp/error.hpp"
#include "hopfqexp/presets.hpp"
#include "hopfqexp/quasi_exponent.hpp"
#include "hopfqexp/suite.hpp"
#include "hopfqexp/twist.hpp"

using namespace hopfqexp;

namespace {

/// Collects the reasons a criterion fails; an empty list means PASS.
class Findings {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  bool ok() const { return problems_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& p : problems_) s += (s.empty() ? "" : "; ") + p;
    return s;
  }

 private:
  std::vector<std::string> problems_;
};

struct Criterion {
  std::string title;
  double limit_seconds;
  std::function<void(Findings&)> body;
};

long qexp_of(const HopfAlgebra& h) { return quasi_exponent(h).qexp; }

Polynomial literal_regular_min_poly(const HopfAlgebra& h) {
  const auto d = drinfeld_double(h);
  return minimal_polynomial(regular_representation(d.algebra, drinfeld_element(d)));
}

bool g_times_u_power_unipotent(const HopfAlgebra& h, const Vector& g, long n) {
  const DoubleEngine e(h);
  const auto x = e.multiply(e.embed_primal(g), e.power(e.drinfeld_element(), static_cast<std::size_t>(n)));
  return is_unipotent_min_poly(
      element_min_poly([&](const Vector& a, const Vector& b) { return e.multiply(a, b); }, e.one(), x, e.dim()));
}

void sweedler_criterion(Findings& f) {
  const auto h = sweedler();
  const auto r = quasi_exponent(h);
  f.require(r.qexp == 2, "qexp = " + std::to_string(r.qexp));
  f.require(group_exponent(h, h.grouplikes()) == 2, "exp G != 2");
  f.require(!r.exponent.has_value(), "exponent finite");
  const auto t = t_maps(h, 5);
  f.require((t[0] - Cyclotomic(2) * t[2] + t[4]).is_zero(), "T0 - 2 T2 + T4 != 0");
}

void route_criterion(Findings& f) {
  for (const auto& name : {"sweedler", "group:builtin:Z2", "group:builtin:Z3", "group:builtin:S3", "taft:3"}) {
    const auto h = make_preset(name);
    const auto via_t = u_min_poly_via_t(h);
    const auto via_regular = literal_regular_min_poly(h);
    f.require(via_t == via_regular, std::string(name) + ": " + via_t.to_string() + " vs " + via_regular.to_string());
  }
}

void binomial_criterion(Findings& f) {
  for (const auto& name : {"sweedler", "group:builtin:Z3"}) {
    const auto h = make_preset(name);
    const long q = qexp_of(h);
    const auto d = drinfeld_double(h);
    RPowers r(d);
    for (std::size_t n = 1; n <= 12; ++n) {
      const bool vanishes = alternating_r_sum_witness(r, n, 6).has_value();
      f.require(vanishes == (n % static_cast<std::size_t>(q) == 0), std::string(name) + " n = " + std::to_string(n));
    }
  }
}

void elementary_criterion(Findings& f) {
  for (const auto& name : preset_zoo()) {
    const auto h = make_preset(name);
    const long q = qexp_of(h);
    for (const auto& g : h.grouplikes())
      f.require(q % element_order(h, g) == 0, name + ": grouplike order does not divide qexp");
    f.require(qexp_of(dual(h)) == q, name + ": qexp(H*) differs");
    f.require(qexp_of(variant(dual(h), Variant::cop)) == q, name + ": qexp(H*cop) differs");
    f.require(h.antipode_power(2 * q).is_identity(), name + ": S^(2 qexp) != Id");
    f.require((q == 1) == (h.dim() == 1), name + ": qexp = 1 on a nontrivial algebra");
  }
  const long t = qexp_of(tensor(sweedler(), group_algebra(builtin_group("Z3"), "Z3")));
  f.require(t == 6, "qexp(sweedler (x) C[Z3]) = " + std::to_string(t));
}

void double_criterion(Findings& f) {
  for (const auto& name : preset_zoo()) {
    const auto h = make_preset(name);
    if (h.dim() > 9) continue;
    const auto d = drinfeld_double(h);
    f.require(validate(d.algebra).empty(), name + ": D(H) Hopf axioms");
    const auto qt = verify_quasitriangular(d);
    f.require(qt.empty(), name + ": " + (qt.empty() ? "" : qt.front()));
    f.require(verify_s2_conjugation(d, drinfeld_element(d)), name + ": S^2 != Ad u");
  }
  const long q = qexp_of(drinfeld_double(sweedler()).algebra);
  f.require(q == 2, "qexp(D(sweedler)) = " + std::to_string(q));
}

void check_twist(Findings& f, const std::string& subject, const TwistData& t) {
  const auto& h = t.parent;
  const long q = qexp_of(h);
  f.require(is_twist(h, t.j, t.j_inv).ok(), subject + ": twist axioms");
  f.require(check_q_coproduct_identity(t), subject + ": Delta(Q^-1 S(Q)) identity");
  const auto hj = twist_hopf(t);
  f.require(validate(hj).empty(), subject + ": H^J axioms");
  f.require(qexp_of(hj) == q, subject + ": qexp(H^J) != qexp(H)");
  const DoubleEngine e(h);
  const auto n = static_cast<std::size_t>(q);
  f.require(e.power(e.drinfeld_element(), n) == e.power(twisted_drinfeld_element(e, t), n), subject + ": u^n != (u^J)^n");
  for (const long m : {q, s2_order(h)}) {
    const auto g = grouplike_from_twist(t, m);
    f.require(q % element_order(hj, g) == 0, subject + ": order of grouplike from twist");
  }
  for (const auto* alg : {&h, &hj})
    for (const auto& g : alg->grouplikes())
      if (g != alg->one())
        f.require(!g_times_u_power_unipotent(*alg, g, q), subject + ": g u^qexp unipotent for g != 1");
}

void twist_criterion(Findings& f) {
  const auto z22 = group_algebra(builtin_group("Z2xZ2"), "group:builtin:Z2xZ2");
  check_twist(f, "Z2xZ2",
              bicharacter_twist(z22, z22.grouplikes(), cyclic_product_characters({2, 2}), bilinear_beta(2, {{0, 1}, {0, 0}})));
  const auto z33 = group_algebra(builtin_group("Z3xZ3"), "group:builtin:Z3xZ3");
  check_twist(f, "Z3xZ3",
              bicharacter_twist(z33, z33.grouplikes(), cyclic_product_characters({3, 3}), bilinear_beta(3, {{0, 1}, {0, 0}})));
  const auto sw = sweedler();
  const auto found = solve_twist_ansatz(sw, sweedler_twist_directions(sw));
  f.require(!found.empty(), "ansatz found no Sweedler twist");
  for (std::size_t i = 0; i < found.size(); ++i) check_twist(f, "sweedler ansatz " + std::to_string(i + 1), found[i]);
}

void pointed_criterion(Findings& f) {
  for (int n = 2; n <= 5; ++n) {
    const auto h = taft(n);
    const long q = qexp_of(h), ge = group_exponent(h, h.grouplikes());
    f.require(q == n && ge == n, "taft:" + std::to_string(n) + ": qexp " + std::to_string(q) + ", exp G " + std::to_string(ge));
    // Degree-zero part and the graded formula.
    std::vector<Vector> degree_zero;
    for (std::size_t i = 0; i < h.dim(); ++i)
      if (h.grading()->at(i) == 0) degree_zero.push_back(h.basis(i));
    const long q0 = qexp_of(subalgebra_closure(h, degree_zero));
    f.require(std::lcm(q0, s2_order(h)) == q, "taft:" + std::to_string(n) + ": lcm(qexp(H0), |S^2|) != qexp");
  }
  for (const auto& name : preset_zoo()) {
    const auto d = PresetDescriptor::parse(name);
    if (!d.pointed()) continue;
    const auto h = d.build();
    f.require(group_exponent(h, h.grouplikes()) % s2_order(h) == 0, name + ": |S^2| does not divide exp G");
  }
}

void quantum_criterion(Findings& f) {
  for (const auto& name : {"uqb2:3", "uqsl2:3"}) {
    const auto h = make_preset(name);
    const long q = qexp_of(h);
    f.require(q == 3, std::string(name) + ": qexp " + std::to_string(q));
    const auto t = bicharacter_twist(h, h.grouplikes(), cyclic_product_characters({3}), bilinear_beta(3, {{1}}));
    const auto hj = twist_hopf(t);
    for (const auto& g : hj.grouplikes()) f.require(3 % element_order(hj, g) == 0, std::string(name) + ": twisted grouplike order");
    f.require(3 % element_order(hj, grouplike_from_twist(t, s2_order(h))) == 0, std::string(name) + ": grouplike from twist");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_suite(SuiteOptions{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  f.require(all_passed(rows), "default suite has failures");
  f.require(secs < 300.0, "default suite took " + std::to_string(secs) + " s");
}

void negative_criterion(Findings& f) {
  HopfStructure s = sweedler().structure();
  s.antipode(2, 2) = Cyclotomic(1);
  f.require(!validate(HopfAlgebra(s)).empty(), "corrupted antipode accepted");
  const auto z22 = group_algebra(builtin_group("Z2xZ2"), "group:builtin:Z2xZ2");
  auto beta = bilinear_beta(2, {{0, 0}, {0, 0}});
  beta[1][2] = Cyclotomic(-1);
  bool rejected = false;
  try {
    bicharacter_twist(z22, z22.grouplikes(), cyclic_product_characters({2, 2}), beta);
  } catch (const AxiomError&) {
    rejected = true;
  }
  f.require(rejected, "non-bicharacter table accepted");
  f.require(!root_of_unity_order(Polynomial({Cyclotomic(-2), Cyclotomic(1)})).has_value(), "x - 2 has an order");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Sweedler: qexp 2, exp G 2, exponent infinite, T0 - 2T2 + T4 = 0", 1.0, sweedler_criterion},
      {"T-operator route equals regular representation route", 60.0, route_criterion},
      {"alternating R-sums vanish exactly at multiples of qexp", 0, binomial_criterion},
      {"elementary properties over the preset zoo", 0, elementary_criterion},
      {"Drinfeld doubles: axioms, hexagons, intertwiner, S^2 = Ad u; qexp(D(sweedler)) = 2", 0, double_criterion},
      {"twists: axioms, Q identity, qexp invariance, u^n = (u^J)^n, grouplikes", 0, twist_criterion},
      {"pointed presets: Taft qexp, |S^2| | exp G, graded lcm formula", 0, pointed_criterion},
      {"quantum presets: qexp 3, twisted grouplike orders, default suite time", 0, quantum_criterion},
      {"negative controls", 0, negative_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Findings f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) f.require(secs < c.limit_seconds, "over the time limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (f.ok() ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << c.title << "  (" << secs << " s)";
    if (!f.ok()) line << "  " << f.summary();
    std::cout << line.str() << std::endl;
    failed += f.ok() ? 0 : 1;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
