#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfqexp/cli.hpp"
#include "hopfqexp/presets.hpp"
#include "hopfqexp/serialize.hpp"

using namespace hopfqexp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hopfqexp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
    unsetenv("HOPFQEXP_BOUND");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, QexpTextReport) {
  const auto r = run({"qexp", "--preset", "sweedler"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("qexp:             2"), std::string::npos);
  EXPECT_NE(r.out.find("exponent:         infinite"), std::string::npos);
}

TEST_F(CliTest, QexpJsonReport) {
  const auto r = run({"qexp", "--preset", "sweedler", "--format", "json", "--cross-check"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "hopf-qexp/1");
  EXPECT_EQ(j["qexp"], 2);
  EXPECT_EQ(j["exponent"], "infinite");
  EXPECT_EQ(j["cross_checked"], true);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const auto a = run({"qexp", "--preset", "taft:3", "--format", "json"});
  const auto b = run({"qexp", "--preset", "taft:3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"preset", "uqb2:3"}).out, run({"preset", "uqb2:3"}).out);
}

TEST_F(CliTest, SmallCommands) {
  EXPECT_EQ(run({"exponent", "--preset", "group:builtin:S3"}).out, "exponent: 6\n");
  EXPECT_EQ(run({"s2-order", "--preset", "taft:3"}).out, "|S^2|: 3\n");
  const auto g = run({"grouplikes", "--preset", "dualgroup:builtin:S3", "--format", "json"});
  EXPECT_EQ(Json::parse(g.out)["group_exponent"], 2);
  EXPECT_EQ(run({"double", "--preset", "sweedler"}).code, kExitOk);
  EXPECT_EQ(run({"--version"}).out, std::string("hopfqexp ") + kVersion + "\n");
}

TEST_F(CliTest, PresetFileRoundTripsThroughValidate) {
  const auto path = (dir_ / "taft3.json").string();
  ASSERT_EQ(run({"preset", "taft:3", "--out", path}).code, kExitOk);
  const auto v = run({"validate", path});
  EXPECT_EQ(v.code, kExitOk) << v.err;
  EXPECT_NE(v.out.find("valid: taft:3"), std::string::npos);
  EXPECT_EQ(run({"qexp", "--in", path}).code, kExitOk);
}

TEST_F(CliTest, BrokenFileExitsWithInputErrorNamingAxiom) {
  Json j = algebra_to_json(sweedler());
  for (auto& entry : j["comult"])
    if (entry[0] == 2 && entry[1] == 2) entry[3] = scalar_to_json(Cyclotomic(2), 2);
  const auto path = write("broken.json", j.dump());
  const auto r = run({"validate", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("coassociativity"), std::string::npos) << r.err;
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"qexp"}).code, kExitInputError);
  EXPECT_EQ(run({"qexp", "--preset", "nonsense"}).code, kExitInputError);
  EXPECT_EQ(run({"qexp", "--in", (dir_ / "missing.json").string()}).code, kExitInputError);
  EXPECT_EQ(run({"qexp", "--in", write("garbage.json", "{not json")}).code, kExitInputError);
  EXPECT_EQ(run({"qexp", "--preset", "sweedler", "--format", "xml"}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"twist-check", "--preset", "sweedler"}).code, kExitInputError);
}

TEST_F(CliTest, BoundFailureIsCheckFailure) {
  EXPECT_EQ(run({"qexp", "--preset", "group:builtin:S3", "--bound", "5"}).code, kExitCheckFailed);
  setenv("HOPFQEXP_BOUND", "5", 1);
  EXPECT_EQ(run({"qexp", "--preset", "group:builtin:S3"}).code, kExitCheckFailed);
  // The flag overrides the environment.
  EXPECT_EQ(run({"qexp", "--preset", "group:builtin:S3", "--bound", "6"}).code, kExitOk);
  setenv("HOPFQEXP_BOUND", "many", 1);
  EXPECT_EQ(run({"qexp", "--preset", "sweedler"}).code, kExitInputError);
  unsetenv("HOPFQEXP_BOUND");
}

TEST_F(CliTest, TwistCheckAndApply) {
  const auto h = sweedler();
  Matrix jm = h.tensor_one();
  jm(2, 3) = Cyclotomic(1);
  Json doc = twist_to_json(make_twist(h, jm));
  const auto good = write("twist.json", doc.dump());
  const auto c = run({"twist-check", "--twist", good});
  EXPECT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(c.out, "twist: valid\n");
  const auto a = run({"twist-apply", "--twist", good});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(deserialize(a.out).dim(), 4u);

  Json by_name = {{"algebra", "sweedler"}, {"J", doc["J"]}};
  by_name["J"][2][2] = scalar_to_json(Cyclotomic(1), 2);
  const auto bad = run({"twist-check", "--twist", write("bad.json", by_name.dump())});
  EXPECT_EQ(bad.code, kExitCheckFailed);
  EXPECT_NE(bad.out.find("cocycle"), std::string::npos) << bad.out;
}

TEST_F(CliTest, SuiteSmallRun) {
  const auto r = run({"suite", "--max-dim", "4", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["all_passed"], true);
  EXPECT_GT(j["rows"].size(), 20u);
}
