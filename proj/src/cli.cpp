#include "hopfqexp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hopfqexp/drinfeld_double.hpp"
#include "hopfqexp/error.hpp"
#include "hopfqexp/presets.hpp"
#include "hopfqexp/quasi_exponent.hpp"
#include "hopfqexp/serialize.hpp"
#include "hopfqexp/suite.hpp"
#include "hopfqexp/twist.hpp"

namespace hopfqexp {

namespace {

struct Request {
  std::string subcommand;
  std::string positional;
  std::string preset;
  std::string in;
  std::string twist;
  std::string out;
  std::string format = "text";
  std::optional<long> bound;
  bool cross_check = false;
  bool deep = false;
  std::size_t max_dim = 27;
};

/// Input errors (exit 2) raised by the front end itself.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string element_to_string(const HopfAlgebra& h, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool negative = false;
    if (c.find(' ') != std::string::npos) {
      c = "(" + c + ")";
    } else if (c[0] == '-') {
      negative = true;
      c = c.substr(1);
    }
    if (s.empty()) s = negative ? "-" : "";
    else s += negative ? " - " : " + ";
    s += (c == "1" ? "" : c + "*") + h.labels()[i];
  }
  return s.empty() ? "0" : s;
}

class Command {
 public:
  Command(const Request& r, std::ostream& out, std::ostream& err) : r_(r), out_(out), err_(err) {}

  int run() {
    const auto& s = r_.subcommand;
    if (s == "validate") return validate_cmd();
    if (s == "qexp") return qexp_cmd();
    if (s == "exponent") return exponent_cmd();
    if (s == "s2-order") return s2_cmd();
    if (s == "grouplikes") return grouplikes_cmd();
    if (s == "double") return double_cmd();
    if (s == "twist-check") return twist_check_cmd();
    if (s == "twist-apply") return twist_apply_cmd();
    if (s == "preset") return preset_cmd();
    if (s == "suite") return suite_cmd();
    throw InputError("unknown subcommand '" + s + "'");
  }

 private:
  bool json() const { return r_.format == "json"; }

  HopfAlgebra load() const {
    const int sources = !r_.preset.empty() + !r_.in.empty() + !r_.positional.empty();
    if (sources == 0) throw InputError("no input: give --preset <name>, --in <file> or a file argument");
    if (sources > 1) throw InputError("give exactly one of --preset, --in or a file argument");
    if (!r_.preset.empty()) return make_preset(r_.preset);
    return deserialize(read_text_file(r_.in.empty() ? r_.positional : r_.in));
  }

  void emit(const std::string& text) const {
    if (r_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(r_.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + r_.out + "'");
    f << text;
  }

  static std::string dump(const Json& j) { return j.dump(2) + "\n"; }

  QexpOptions qexp_options() const {
    QexpOptions o;
    o.cross_check = r_.cross_check;
    o.bound = r_.bound;
    return o;
  }

  int validate_cmd() {
    const HopfAlgebra h = load();  // deserialize already ran validate()
    const auto v = validate(h);
    if (json()) {
      Json j;
      j["schema"] = "hopf-qexp/1";
      j["name"] = h.name();
      j["valid"] = v.empty();
      j["violations"] = v;
      emit(dump(j));
    } else {
      std::ostringstream os;
      if (v.empty()) {
        os << "valid: " << h.name() << " (dim " << h.dim() << ", conductor " << h.conductor() << ", "
           << h.grouplikes().size() << " verified grouplikes" << (h.grading() ? ", graded" : "") << ")\n";
      } else {
        os << "invalid: " << h.name() << "\n";
        for (const auto& s : v) os << "  " << s << "\n";
      }
      emit(os.str());
    }
    return v.empty() ? kExitOk : kExitCheckFailed;
  }

  int qexp_cmd() {
    const HopfAlgebra h = load();
    const QexpReport r = quasi_exponent(h, qexp_options());
    emit(json() ? dump(report_to_json(r, h.conductor())) : report_to_text(r));
    return kExitOk;
  }

  int exponent_cmd() {
    const HopfAlgebra h = load();
    const QexpReport r = quasi_exponent(h, qexp_options());
    if (json()) {
      Json j;
      j["schema"] = "hopf-qexp/1";
      j["name"] = h.name();
      if (r.exponent) j["exponent"] = *r.exponent;
      else j["exponent"] = "infinite";
      emit(dump(j));
    } else {
      emit("exponent: " + (r.exponent ? std::to_string(*r.exponent) : std::string("infinite")) + "\n");
    }
    return kExitOk;
  }

  int s2_cmd() {
    const HopfAlgebra h = load();
    const long s2 = s2_order(h);
    if (json()) {
      Json j;
      j["schema"] = "hopf-qexp/1";
      j["name"] = h.name();
      j["s2_order"] = s2;
      emit(dump(j));
    } else {
      emit("|S^2|: " + std::to_string(s2) + "\n");
    }
    return kExitOk;
  }

  int grouplikes_cmd() {
    const HopfAlgebra h = load();
    const auto problems = verify_grouplike_set(h, h.grouplikes());
    const long ge = problems.empty() ? group_exponent(h, h.grouplikes()) : 0;
    if (json()) {
      Json j;
      j["schema"] = "hopf-qexp/1";
      j["name"] = h.name();
      Json list = Json::array();
      for (const auto& g : h.grouplikes()) {
        Json e;
        e["element"] = element_to_string(h, g);
        e["order"] = element_order(h, g);
        list.push_back(e);
      }
      j["grouplikes"] = list;
      j["group_exponent"] = ge;
      j["violations"] = problems;
      emit(dump(j));
    } else {
      std::ostringstream os;
      for (const auto& g : h.grouplikes()) os << "order " << element_order(h, g) << ": " << element_to_string(h, g) << "\n";
      if (problems.empty()) os << "group exponent: " << ge << "\n";
      for (const auto& p : problems) os << "violation: " << p << "\n";
      emit(os.str());
    }
    return problems.empty() ? kExitOk : kExitCheckFailed;
  }

  int double_cmd() {
    const HopfAlgebra h = load();
    const QuasitriangularData d = drinfeld_double(h);
    auto v = validate(d.algebra);
    for (auto& s : verify_quasitriangular(d)) v.push_back(s);
    if (!verify_s2_conjugation(d, drinfeld_element(d))) v.push_back("S^2 is not conjugation by u");
    for (const auto& s : v) err_ << "double check failed: " << s << "\n";
    if (r_.out.empty() && !json()) {
      out_ << "double of " << h.name() << ": dim " << d.algebra.dim() << ", "
           << (v.empty() ? "Hopf axioms, hexagons, intertwiner and S^2 = Ad u verified" : "checks failed") << "\n";
    } else {
      emit(dump(double_to_json(d)));
    }
    return v.empty() ? kExitOk : kExitCheckFailed;
  }

  Json twist_document() const {
    if (r_.twist.empty()) throw InputError("--twist <file> is required");
    Json doc = parse_json(read_text_file(r_.twist), "twist document");
    if (!doc.is_object() || !doc.contains("algebra")) {
      if (r_.preset.empty() && r_.in.empty() && r_.positional.empty())
        throw SchemaError("algebra", "missing field (or give the algebra with --preset/--in)");
      if (!doc.is_object()) throw SchemaError("", "a twist document must be a JSON object");
      doc["algebra"] = algebra_to_json(load());
    }
    // Resolve the algebra now so that malformed algebras are input errors, not twist failures.
    if (doc["algebra"].is_string()) doc["algebra"] = algebra_to_json(make_preset(doc["algebra"].get<std::string>()));
    else algebra_from_json(doc["algebra"]);
    return doc;
  }

  static TwistData twist_from(const Json& doc) {
    return twist_from_json(doc, [](const std::string& name) { return make_preset(name); });
  }

  int twist_check_cmd() {
    const Json doc = twist_document();
    std::vector<std::string> violations;
    std::optional<TwistData> t;
    try {
      t = twist_from(doc);
    } catch (const AxiomError& e) {
      violations = e.violations();
    }
    bool q_identity = false;
    if (t) q_identity = check_q_coproduct_identity(*t);
    if (t && !q_identity) violations.push_back("Delta(Q^-1 S(Q)) identity fails");
    if (json()) {
      Json j;
      j["schema"] = "hopf-qexp/1";
      j["twist"] = violations.empty();
      j["violations"] = violations;
      emit(dump(j));
    } else {
      std::ostringstream os;
      os << (violations.empty() ? "twist: valid\n" : "twist: invalid\n");
      for (const auto& v : violations) os << "  " << v << "\n";
      emit(os.str());
    }
    return violations.empty() ? kExitOk : kExitCheckFailed;
  }

  int twist_apply_cmd() {
    const Json doc = twist_document();
    std::optional<TwistData> t;
    try {
      t = twist_from(doc);
    } catch (const AxiomError& e) {
      for (const auto& v : e.violations()) err_ << "not a twist: " << v << "\n";
      return kExitCheckFailed;
    }
    const HopfAlgebra hj = twist_hopf(*t);
    const auto v = validate(hj);
    for (const auto& s : v) err_ << "twisted algebra fails: " << s << "\n";
    emit(serialize(hj));
    return v.empty() ? kExitOk : kExitCheckFailed;
  }

  int preset_cmd() {
    const std::string name = !r_.preset.empty() ? r_.preset : r_.positional;
    if (name.empty()) throw InputError("preset needs a name, e.g. 'preset taft:3'");
    emit(serialize(make_preset(name)));
    return kExitOk;
  }

  int suite_cmd() {
    SuiteOptions o;
    o.max_dim = r_.max_dim;
    o.deep = r_.deep;
    o.bound = r_.bound;
    std::vector<SuiteRow> rows;
    if (json()) {
      rows = run_suite(o);
      Json list = Json::array();
      for (const auto& row : rows) {
        Json e;
        e["property"] = row.property;
        e["subject"] = row.subject;
        e["result"] = row.passed ? "PASS" : "FAIL";
        e["detail"] = row.detail;
        list.push_back(e);
      }
      Json j;
      j["schema"] = "hopf-qexp/1";
      j["rows"] = list;
      j["all_passed"] = all_passed(rows);
      emit(dump(j));
    } else {
      std::ostringstream os;
      rows = run_suite(o, [&](const SuiteRow& row) {
        if (r_.out.empty()) out_ << format_suite_row(row) << "\n" << std::flush;
        else os << format_suite_row(row) << "\n";
      });
      std::size_t failed = 0;
      for (const auto& row : rows) failed += row.passed ? 0 : 1;
      const std::string summary =
          std::to_string(rows.size() - failed) + " passed, " + std::to_string(failed) + " failed\n";
      if (r_.out.empty()) out_ << summary;
      else emit(os.str() + summary);
    }
    return all_passed(rows) ? kExitOk : kExitCheckFailed;
  }

  const Request& r_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request r;
  if (const char* env = std::getenv("HOPFQEXP_BOUND")) {
    try {
      r.bound = std::stol(env);
    } catch (const std::exception&) {
      err << "error: HOPFQEXP_BOUND must be an integer\n";
      return kExitInputError;
    }
  }

  CLI::App app{"Exact quasi-exponents, Drinfeld doubles and twists of finite-dimensional Hopf algebras", "hopfqexp"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print the version and exit");
  std::optional<long> bound_flag;
  app.add_option("--preset", r.preset, "Preset algebra, e.g. sweedler, taft:3, group:builtin:S3, uqsl2:3");
  app.add_option("--in", r.in, "Algebra JSON file");
  app.add_option("--twist", r.twist, "Twist JSON file");
  app.add_option("--bound", bound_flag, "Root-of-unity search bound (default from HOPFQEXP_BOUND or the degree)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--cross-check", r.cross_check, "Also compute the minimal polynomial of u inside D(H)");
  app.add_option("--format", r.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", r.out, "Write the report or document to this file");
  app.add_flag("--deep", r.deep, "suite: add the expensive cross-checks");
  app.add_option("--max-dim", r.max_dim, "suite: skip presets above this dimension")->check(CLI::PositiveNumber);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check the Hopf axioms, grouplikes and grading"},
      {"qexp", "Quasi-exponent report"},
      {"exponent", "Exponent (order of u), possibly infinite"},
      {"s2-order", "Order of the squared antipode"},
      {"grouplikes", "Verified grouplike elements and their orders"},
      {"double", "Drinfeld double with its R-matrix"},
      {"twist-check", "Check the twist axioms for --twist"},
      {"twist-apply", "Emit the twisted Hopf algebra"},
      {"preset", "Emit a preset as JSON"},
      {"suite", "Run the property suite over the preset zoo"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", r.positional, "Algebra file (or preset name for 'preset')");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (version) {
    out << "hopfqexp " << kVersion << "\n";
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    err << "error: a subcommand is required\n" << app.help();
    return kExitInputError;
  }
  r.subcommand = app.get_subcommands().front()->get_name();
  if (bound_flag) r.bound = bound_flag;

  try {
    return Command(r, out, err).run();
  } catch (const AxiomError& e) {
    err << "error: input violates Hopf axioms:\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kExitInputError;
  } catch (const SchemaError& e) {
    err << "error: schema: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const BoundExceeded& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace hopfqexp
