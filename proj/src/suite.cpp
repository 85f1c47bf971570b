#include "hopfqexp/suite.hpp"

#include <map>
#include <sstream>

#include "hopfqexp/drinfeld_double.hpp"
#include "hopfqexp/error.hpp"
#include "hopfqexp/presets.hpp"
#include "hopfqexp/quasi_exponent.hpp"
#include "hopfqexp/serialize.hpp"
#include "hopfqexp/twist.hpp"

namespace hopfqexp {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }
Outcome expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

class Runner {
 public:
  Runner(const std::function<void(const SuiteRow&)>& on_row) : on_row_(on_row) {}

  void check(const std::string& property, const std::string& subject, const std::function<Outcome()>& body) {
    SuiteRow row{property, subject, false, {}};
    try {
      const Outcome o = body();
      row.passed = o.passed;
      row.detail = o.detail;
    } catch (const std::exception& e) {
      row.passed = false;
      row.detail = std::string("exception: ") + e.what();
    }
    if (on_row_) on_row_(row);
    rows_.push_back(std::move(row));
  }

  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  const std::function<void(const SuiteRow&)>& on_row_;
  std::vector<SuiteRow> rows_;
};

// Primal-copy embedding of (T (x) Id)(R) for R = sum_i (eps (x) h_i) (x) (f_i (x) 1).
Matrix t_on_first_leg(const DoubleEngine& e, const Matrix& t) {
  const std::size_t n = e.base_dim();
  std::vector<Vector> left(n), right(n);
  Matrix out(e.dim(), e.dim());
  for (std::size_t i = 0; i < n; ++i) {
    Vector f(n);
    f[i] = Cyclotomic(1);
    const Vector l = e.embed_primal(t.column(i)), r = e.embed_dual(f);
    for (std::size_t a = 0; a < e.dim(); ++a) {
      if (l[a].is_zero()) continue;
      for (std::size_t b = 0; b < e.dim(); ++b)
        if (!r[b].is_zero()) out(a, b) += l[a] * r[b];
    }
  }
  return out;
}

Polynomial min_poly_in_double(const DoubleEngine& e, const Vector& x) {
  return element_min_poly([&](const Vector& a, const Vector& b) { return e.multiply(a, b); }, e.one(), x, e.dim());
}

struct NamedTwist {
  std::string subject;
  TwistData twist;
};

std::vector<NamedTwist> constructed_twists(std::size_t max_dim) {
  std::vector<NamedTwist> out;
  {
    const HopfAlgebra h = group_algebra(builtin_group("Z2xZ2"), "group:builtin:Z2xZ2");
    out.push_back({"bicharacter (-1)^(ad) on Z2xZ2",
                   bicharacter_twist(h, h.grouplikes(), cyclic_product_characters({2, 2}), bilinear_beta(2, {{0, 1}, {0, 0}}))});
  }
  {
    const HopfAlgebra h = group_algebra(builtin_group("Z3"), "group:builtin:Z3");
    out.push_back({"bicharacter z3^(ij) on Z3",
                   bicharacter_twist(h, h.grouplikes(), cyclic_product_characters({3}), bilinear_beta(3, {{1}}))});
  }
  {
    const HopfAlgebra h = group_algebra(builtin_group("Z3xZ3"), "group:builtin:Z3xZ3");
    out.push_back({"bicharacter z3^(ad) on Z3xZ3",
                   bicharacter_twist(h, h.grouplikes(), cyclic_product_characters({3, 3}), bilinear_beta(3, {{0, 1}, {0, 0}}))});
  }
  {
    const HopfAlgebra h = sweedler();
    int k = 0;
    for (auto& t : solve_twist_ansatz(h, sweedler_twist_directions(h)))
      out.push_back({"ansatz solution " + std::to_string(++k) + " on sweedler", std::move(t)});
  }
  for (const std::string name : {"uqb2:3", "uqsl2:3"}) {
    const HopfAlgebra h = make_preset(name);
    if (h.dim() > max_dim) continue;
    out.push_back({"bicharacter z3^(ij) on <K> in " + name,
                   bicharacter_twist(h, h.grouplikes(), cyclic_product_characters({3}), bilinear_beta(3, {{1}}))});
  }
  return out;
}

void preset_properties(Runner& run, const std::string& name, const SuiteOptions& o) {
  const PresetDescriptor desc = PresetDescriptor::parse(name);
  const HopfAlgebra h = desc.build();
  const std::size_t n = h.dim();

  run.check("Hopf axioms", name, [&] {
    const auto v = validate(h);
    return expect(v.empty(), v.empty() ? "dim " + std::to_string(n) : join(v));
  });

  QexpOptions qo;
  qo.bound = o.bound;
  std::optional<QexpReport> report;
  run.check("quasi-exponent report", name, [&] {
    report = quasi_exponent(h, qo);
    const bool consistent = report->squarefree == squarefree_part(report->min_poly) &&
                            (report->exponent.has_value() == (report->squarefree == report->min_poly)) &&
                            (!report->exponent || *report->exponent == report->qexp);
    return expect(consistent, "qexp " + std::to_string(report->qexp) + ", exponent " +
                                  (report->exponent ? std::to_string(*report->exponent) : "infinite"));
  });
  if (!report) return;
  const long q = report->qexp;

  run.check("expected invariants", name, [&] {
    const ExpectedInvariants e = desc.expected();
    std::vector<std::string> bad;
    if (e.qexp && *e.qexp != q) bad.push_back("qexp " + std::to_string(q) + " != " + std::to_string(*e.qexp));
    if (e.exponent_infinite && report->exponent) bad.push_back("exponent should be infinite");
    if (e.exponent && report->exponent != e.exponent) bad.push_back("exponent differs");
    if (e.s2_order && *e.s2_order != report->s2_order) bad.push_back("|S^2| differs");
    if (e.group_exponent && *e.group_exponent != group_exponent(h, h.grouplikes()))
      bad.push_back("group exponent differs");
    return expect(bad.empty(), join(bad));
  });

  run.check("grouplike orders divide qexp", name, [&] {
    for (const auto& g : h.grouplikes())
      if (q % element_order(h, g) != 0) return fail("grouplike of order " + std::to_string(element_order(h, g)));
    return pass(std::to_string(h.grouplikes().size()) + " grouplikes");
  });
  run.check("qexp of the dual equals qexp", name, [&] {
    const long d = quasi_exponent(dual(h), qo).qexp;
    return expect(d == q, "qexp(H*) = " + std::to_string(d));
  });
  run.check("qexp of the co-opposite dual equals qexp", name, [&] {
    const long d = quasi_exponent(variant(dual(h), Variant::cop), qo).qexp;
    return expect(d == q, "qexp(H*cop) = " + std::to_string(d));
  });
  run.check("S^(2 qexp) = Id", name, [&] { return expect(h.antipode_power(2 * q).is_identity(), {}); });
  run.check("|S^2| divides qexp", name, [&] {
    return expect(q % report->s2_order == 0, "|S^2| = " + std::to_string(report->s2_order));
  });
  run.check("qexp = 1 only for the trivial algebra", name, [&] { return expect((q == 1) == (n == 1), {}); });

  if (desc.pointed()) {
    const long ge = group_exponent(h, h.grouplikes());
    run.check("pointed: qexp = exp G(H)", name,
              [&] { return expect(ge == q, "exp G(H) = " + std::to_string(ge)); });
    run.check("pointed: |S^2| divides exp G(H)", name, [&] { return expect(ge % report->s2_order == 0, {}); });
  }

  if (h.grading()) {
    run.check("graded: qexp = lcm(qexp(H0), |S^2|)", name, [&] {
      std::vector<Vector> degree0;
      for (std::size_t i = 0; i < n; ++i)
        if ((*h.grading())[i] == 0) degree0.push_back(h.basis(i));
      const HopfAlgebra h0 = subalgebra_closure(h, degree0);
      const long q0 = quasi_exponent(h0, qo).qexp;
      return expect(lcm_of(q0, report->s2_order) == q, "qexp(H0) = " + std::to_string(q0));
    });
  }

  const bool small = n * n <= 81;
  if (small || o.deep) {
    run.check("T-operator route equals the double route", name, [&] {
      const Polynomial r = u_min_poly_via_regular(h);
      return expect(r == report->min_poly, r.to_string());
    });
  }
  if (small) {
    const QuasitriangularData d = drinfeld_double(h);
    run.check("double: Hopf axioms and quasitriangularity", name, [&] {
      auto v = validate(d.algebra);
      for (auto& s : verify_quasitriangular(d)) v.push_back(s);
      return expect(v.empty(), v.empty() ? "dim " + std::to_string(d.algebra.dim()) : join(v));
    });
    const Vector u = drinfeld_element(d);
    run.check("double: S^2(x) = u x u^-1", name, [&] { return expect(verify_s2_conjugation(d, u), {}); });
    run.check("double: eps(u) = 1", name, [&] { return expect(d.algebra.counit_of(u).is_one(), {}); });
    if (o.deep) {
      run.check("double: min poly of the left-multiplication matrix of u", name, [&] {
        const Polynomial r = minimal_polynomial(regular_representation(d.algebra, u));
        return expect(r == report->min_poly, r.to_string());
      });
    }

    const DoubleEngine e(h);
    run.check("g u^qexp not unipotent for grouplikes g != 1", name, [&] {
      const Vector uq = e.power(e.drinfeld_element(), static_cast<std::size_t>(q));
      std::size_t tested = 0;
      for (const auto& g : h.grouplikes()) {
        if (g == h.one()) continue;
        ++tested;
        if (is_unipotent_min_poly(min_poly_in_double(e, e.multiply(e.embed_primal(g), uq))))
          return fail("a nontrivial grouplike g makes g u^qexp unipotent");
      }
      return pass(std::to_string(tested) + " grouplikes");
    });

    if (n <= 4) {
      RPowers r(d);
      run.check("m21(Id (x) S)(R_k) = u^k for k <= 4", name, [&] {
        const HopfAlgebra& a = d.algebra;
        const Matrix id = Matrix::identity(a.dim());
        for (std::size_t k = 0; k <= 4; ++k)
          if (!(a.contract_flipped(HopfAlgebra::apply_legs(id, a.antipode(), r[k])) == a.power(u, k)))
            return fail("k = " + std::to_string(k));
        return pass();
      });
      run.check("(T_k (x) Id)(R) = R_k for k <= 3", name, [&] {
        const auto ts = t_maps(h, 4);
        for (std::size_t k = 0; k < ts.size(); ++k)
          if (!(t_on_first_leg(e, ts[k]) == r[k])) return fail("k = " + std::to_string(k));
        return pass();
      });
      run.check("alternating R-sums vanish exactly for multiples of qexp (n <= 12)", name, [&] {
        std::string hits;
        for (std::size_t m = 1; m <= 12; ++m) {
          const bool vanishes = alternating_r_sum_witness(r, m, 6).has_value();
          if (vanishes != (m % static_cast<std::size_t>(q) == 0)) return fail("n = " + std::to_string(m));
          if (vanishes) hits += (hits.empty() ? "" : ",") + std::to_string(m);
        }
        return pass("n in {" + hits + "}");
      });
    }
  }
}

void twist_properties(Runner& run, const NamedTwist& nt, const SuiteOptions& o) {
  const TwistData& t = nt.twist;
  const HopfAlgebra& h = t.parent;
  const std::string& s = nt.subject;
  QexpOptions qo;
  qo.bound = o.bound;
  const long q = quasi_exponent(h, qo).qexp;

  run.check("twist axioms", s, [&] {
    const auto c = is_twist(h, t.j, t.j_inv);
    return expect(c.ok(), join(c.violations));
  });
  std::optional<HopfAlgebra> hj;
  run.check("twisted algebra: Hopf axioms", s, [&] {
    hj = twist_hopf(t);
    const auto v = validate(*hj);
    return expect(v.empty(), join(v));
  });
  run.check("Delta(Q^-1 S(Q)) identity", s, [&] { return expect(check_q_coproduct_identity(t), {}); });
  if (!hj) return;
  run.check("qexp invariant under twisting", s, [&] {
    const long qj = quasi_exponent(*hj, qo).qexp;
    return expect(qj == q, "qexp " + std::to_string(q) + " -> " + std::to_string(qj));
  });
  if (h.dim() * h.dim() <= 81 || o.deep) {
    run.check("u^qexp = (u^J)^qexp in D(H)", s, [&] {
      const DoubleEngine e(h);
      const auto nq = static_cast<std::size_t>(q);
      return expect(e.power(e.drinfeld_element(), nq) == e.power(twisted_drinfeld_element(e, t), nq), {});
    });
  }
  run.check("grouplike built from Q: grouplike in H^J, order divides qexp", s, [&] {
    const long s2 = s2_order(h);
    const Vector g = grouplike_from_twist(t, s2);
    const long ord = element_order(*hj, g);
    return expect(q % ord == 0, "n = " + std::to_string(s2) + ", order " + std::to_string(ord));
  });
  run.check("grouplikes of H^J have order dividing qexp", s, [&] {
    for (const auto& g : hj->grouplikes())
      if (q % element_order(*hj, g) != 0) return fail("order " + std::to_string(element_order(*hj, g)));
    return pass(std::to_string(hj->grouplikes().size()) + " grouplikes");
  });
}

void negative_controls(Runner& run) {
  run.check("negative control: corrupted antipode fails validation", "sweedler", [&] {
    HopfStructure s = sweedler().structure();
    s.antipode(2, 2) = Cyclotomic(1);
    const auto v = validate(HopfAlgebra(s));
    return expect(!v.empty(), join(v));
  });
  run.check("negative control: broken coassociativity rejected on load", "sweedler", [&] {
    Json j = algebra_to_json(sweedler());
    for (auto& entry : j["comult"]) {
      if (entry[0] == 2 && entry[1] == 2) {
        entry[3] = scalar_to_json(Cyclotomic(2), 2);
        break;
      }
    }
    try {
      algebra_from_json(j);
    } catch (const AxiomError& e) {
      for (const auto& v : e.violations())
        if (v.rfind("coassociativity", 0) == 0) return pass(v);
      return fail(e.what());
    }
    return fail("accepted");
  });
  run.check("negative control: non-bicharacter table is not a twist", "group:builtin:Z2xZ2", [&] {
    const HopfAlgebra h = group_algebra(builtin_group("Z2xZ2"), "group:builtin:Z2xZ2");
    auto beta = bilinear_beta(2, {{0, 0}, {0, 0}});
    beta[1][2] = Cyclotomic(-1);
    try {
      bicharacter_twist(h, h.grouplikes(), cyclic_product_characters({2, 2}), beta);
    } catch (const AxiomError& e) {
      return pass(e.what());
    }
    return fail("accepted");
  });
  run.check("negative control: x - 2 has no root-of-unity order", "x - 2", [&] {
    const auto r = root_of_unity_order(Polynomial({Cyclotomic(-2), Cyclotomic(1)}));
    return expect(!r, "not found");
  });
}

}  // namespace

std::vector<SuiteRow> run_suite(const SuiteOptions& options, const std::function<void(const SuiteRow&)>& on_row) {
  Runner run(on_row);
  for (const auto& name : preset_zoo()) {
    const PresetDescriptor d = PresetDescriptor::parse(name);
    if (d.build().dim() > options.max_dim) continue;
    preset_properties(run, name, options);
  }

  QexpOptions qo;
  qo.bound = options.bound;
  for (const std::string name : {"sweedler", "group:builtin:Z2"}) {
    run.check("qexp of the Drinfeld double equals qexp", name, [&] {
      const HopfAlgebra h = make_preset(name);
      const long q = quasi_exponent(h, qo).qexp;
      const long qd = quasi_exponent(drinfeld_double(h).algebra, qo).qexp;
      return expect(q == qd, "qexp(D(H)) = " + std::to_string(qd));
    });
  }
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"sweedler", "group:builtin:Z3"}, {"group:builtin:Z2", "group:builtin:Z3"}, {"taft:3", "group:builtin:Z2"}}) {
    run.check("qexp of a tensor product is the lcm", a + " (x) " + b, [&] {
      const HopfAlgebra ha = make_preset(a), hb = make_preset(b);
      if (ha.dim() * hb.dim() > options.max_dim) return pass("skipped above --max-dim");
      const long qa = quasi_exponent(ha, qo).qexp, qb = quasi_exponent(hb, qo).qexp;
      const long qt = quasi_exponent(tensor(ha, hb), qo).qexp;
      return expect(qt == lcm_of(qa, qb), "qexp = " + std::to_string(qt));
    });
  }

  std::vector<NamedTwist> twists;
  run.check("twist construction", "bicharacter and ansatz twists", [&] {
    twists = constructed_twists(options.max_dim);
    return expect(!twists.empty(), std::to_string(twists.size()) + " twists");
  });
  for (const auto& t : twists) twist_properties(run, t, options);

  negative_controls(run);
  return run.take();
}

std::string format_suite_row(const SuiteRow& row) {
  std::ostringstream os;
  os << (row.passed ? "PASS" : "FAIL") << "  " << row.property << "  [" << row.subject << "]";
  if (!row.detail.empty()) os << "  " << row.detail;
  return os.str();
}

bool all_passed(const std::vector<SuiteRow>& rows) {
  for (const auto& r : rows)
    if (!r.passed) return false;
  return true;
}

}  // namespace hopfqexp
