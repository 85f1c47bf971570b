#include <gtest/gtest.h>

#include "hopfqexp/error.hpp"
#include "hopfqexp/presets.hpp"
#include "hopfqexp/serialize.hpp"
#include "test_support.hpp"

using namespace hopfqexp;
using hopfqexp::testing::dense_comultiplication;
using hopfqexp::testing::dense_multiplication;

namespace {

void expect_same_algebra(const HopfAlgebra& a, const HopfAlgebra& b) {
  EXPECT_EQ(a.name(), b.name());
  EXPECT_EQ(a.conductor(), b.conductor());
  EXPECT_EQ(a.labels(), b.labels());
  EXPECT_EQ(a.unit(), b.unit());
  EXPECT_EQ(a.counit(), b.counit());
  EXPECT_EQ(dense_multiplication(a), dense_multiplication(b));
  EXPECT_EQ(dense_comultiplication(a), dense_comultiplication(b));
  EXPECT_EQ(a.antipode(), b.antipode());
  EXPECT_EQ(a.grouplikes(), b.grouplikes());
  EXPECT_EQ(a.grading(), b.grading());
}

}  // namespace

TEST(Serialize, ScalarsRoundTrip) {
  const auto z = Cyclotomic::zeta(5);
  const auto x = Cyclotomic(Rational(1, 3)) + Cyclotomic(Rational(-7, 2)) * z * z;
  const auto j = scalar_to_json(x, 5);
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0], "1/3");
  EXPECT_EQ(scalar_from_json(j, 5, "x"), x);
  EXPECT_EQ(scalar_from_json(scalar_to_json(Cyclotomic(3), 5), 5, "x"), Cyclotomic(3));
  EXPECT_THROW(scalar_from_json(Json::array({"1", "2"}), 5, "x"), SchemaError);
  EXPECT_THROW(scalar_from_json(Json::array({"1", "a", "0", "0"}), 5, "x"), SchemaError);
}

TEST(Serialize, PresetsRoundTripBitExact) {
  for (const auto& name : {"sweedler", "uqb2:3", "taft:3", "dualgroup:builtin:S3", "tensor:sweedler,group:builtin:Z3"}) {
    const auto h = make_preset(name);
    const auto text = serialize(h);
    const auto back = deserialize(text);
    expect_same_algebra(h, back);
    EXPECT_EQ(serialize(back), text) << name;
  }
}

TEST(Serialize, BrokenCoassociativityIsRejectedByName) {
  Json j = algebra_to_json(sweedler());
  for (auto& entry : j["comult"])
    if (entry[0] == 2 && entry[1] == 2) entry[3] = scalar_to_json(Cyclotomic(2), 2);
  try {
    algebra_from_json(j);
    FAIL() << "accepted";
  } catch (const AxiomError& e) {
    bool named = false;
    for (const auto& v : e.violations()) named = named || v.rfind("coassociativity", 0) == 0;
    EXPECT_TRUE(named) << e.what();
  }
}

TEST(Serialize, SchemaErrorsNameTheField) {
  const Json good = algebra_to_json(sweedler());
  auto expect_field = [](Json j, const std::string& field) {
    try {
      algebra_from_json(j);
      ADD_FAILURE() << "accepted, expected error at " << field;
    } catch (const SchemaError& e) {
      EXPECT_NE(e.field().find(field), std::string::npos) << e.what();
    }
  };
  Json missing = good;
  missing.erase("antipode");
  expect_field(missing, "antipode");
  Json bad_dim = good;
  bad_dim["dim"] = "four";
  expect_field(bad_dim, "dim");
  Json bad_mult = good;
  bad_mult["mult"][0][0] = 17;
  expect_field(bad_mult, "mult");
  Json bad_labels = good;
  bad_labels["basis_labels"] = Json::array({"1"});
  expect_field(bad_labels, "basis_labels");
  EXPECT_THROW(parse_json("{\"dim\": ", "input"), SchemaError);
}

TEST(Serialize, DoubleDocument) {
  const auto q = drinfeld_double(sweedler());
  const auto j = double_to_json(q);
  EXPECT_EQ(j["base_dim"], 4);
  EXPECT_EQ(j["dim"], 16);
  EXPECT_EQ(j["r_matrix"].size(), 16u);
}

TEST(Serialize, TwistRoundTrip) {
  const auto h = sweedler();
  Matrix j = h.tensor_one();
  j(2, 3) = Cyclotomic(1);
  const auto t = make_twist(h, j);
  const auto doc = twist_to_json(t);
  const auto back = twist_from_json(doc, [](const std::string& n) { return make_preset(n); });
  EXPECT_EQ(back.j, t.j);
  EXPECT_EQ(back.j_inv, t.j_inv);
  // Preset reference without an inverse.
  Json by_name = {{"algebra", "sweedler"}, {"J", doc["J"]}};
  const auto resolved = twist_from_json(by_name, [](const std::string& n) { return make_preset(n); });
  EXPECT_EQ(resolved.j_inv, t.j_inv);
  Json not_twist = by_name;
  not_twist["J"][2][2] = scalar_to_json(Cyclotomic(1), 2);
  EXPECT_THROW(twist_from_json(not_twist, [](const std::string& n) { return make_preset(n); }), AxiomError);
}

TEST(Serialize, ReportDocument) {
  const auto r = quasi_exponent(sweedler());
  const auto j = report_to_json(r, 2);
  EXPECT_EQ(j["schema"], "hopf-qexp/1");
  EXPECT_EQ(j["qexp"], 2);
  EXPECT_EQ(j["exponent"], "infinite");
  EXPECT_EQ(j["s2_order"], 2);
  EXPECT_EQ(j["min_poly"].size(), 5u);
  const auto g = report_to_json(quasi_exponent(group_algebra(builtin_group("Z6"), "Z6")), 1);
  EXPECT_EQ(g["exponent"], 6);
  EXPECT_NE(report_to_text(r).find("qexp:             2"), std::string::npos);
}
