#include <gtest/gtest.h>

#include <set>

#include "hopfqexp/suite.hpp"

using namespace hopfqexp;

TEST(Suite, SmallZooPassesAndIsDeterministic) {
  SuiteOptions o;
  o.max_dim = 9;
  std::size_t streamed = 0;
  const auto rows = run_suite(o, [&](const SuiteRow&) { ++streamed; });
  EXPECT_TRUE(all_passed(rows));
  EXPECT_EQ(streamed, rows.size());
  for (const auto& row : rows) EXPECT_TRUE(row.passed) << format_suite_row(row);

  const auto again = run_suite(o);
  ASSERT_EQ(again.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(again[i].property, rows[i].property);
    EXPECT_EQ(again[i].subject, rows[i].subject);
    EXPECT_EQ(again[i].detail, rows[i].detail);
  }
}

TEST(Suite, CoversEveryPropertyFamily) {
  SuiteOptions o;
  o.max_dim = 9;
  std::set<std::string> properties;
  for (const auto& row : run_suite(o)) properties.insert(row.property);
  for (const auto& expected : {"Hopf axioms", "twist axioms", "qexp invariant under twisting",
                               "negative control: x - 2 has no root-of-unity order"})
    EXPECT_TRUE(properties.count(expected)) << expected;
}

TEST(Suite, RowFormatting) {
  EXPECT_EQ(format_suite_row({"Hopf axioms", "sweedler", true, "dim 4"}), "PASS  Hopf axioms  [sweedler]  dim 4");
  EXPECT_EQ(format_suite_row({"Hopf axioms", "sweedler", false, "x"}).substr(0, 4), "FAIL");
  EXPECT_FALSE(all_passed({{"a", "b", true, ""}, {"c", "d", false, ""}}));
  EXPECT_TRUE(all_passed({}));
}
