#include <gtest/gtest.h>

#include <random>

#include "hopfqexp/drinfeld_double.hpp"
#include "hopfqexp/presets.hpp"
#include "test_support.hpp"

using namespace hopfqexp;
using hopfqexp::testing::random_element;
using hopfqexp::testing::unit_vector;

namespace {

// In D(C[G]) with basis delta_a (x) g at index a * |G| + g:
// (delta_a (x) g)(delta_b (x) h) = [a = g b g^{-1}] delta_a (x) gh.
Vector group_double_product(const CayleyTable& t, std::size_t a, std::size_t g, std::size_t b, std::size_t h) {
  const std::size_t n = t.order();
  Vector out(n * n, Cyclotomic(0));
  const std::size_t conj = t.table[t.table[g][b]][t.inverse(g)];
  if (conj == a) out[a * n + t.table[g][h]] = Cyclotomic(1);
  return out;
}

}  // namespace

TEST(DrinfeldDouble, GroupDoubleMatchesClosedForm) {
  const auto t = builtin_group("S3");
  const DoubleEngine d(group_algebra(t, "S3"));
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t h = 0; h < n; ++h)
          ASSERT_EQ(d.multiply(unit_vector(n * n, a * n + g), unit_vector(n * n, b * n + h)),
                    group_double_product(t, a, g, b, h));
}

TEST(DrinfeldDouble, GroupDrinfeldElementAndPowers) {
  // u = sum_g delta_{g^{-1}} (x) g and u^k = sum_g delta_{g^{-1}} (x) g^k.
  const auto t = builtin_group("S3");
  const DoubleEngine d(group_algebra(t, "S3"));
  const std::size_t n = t.order();
  const auto u = d.drinfeld_element();
  for (std::size_t k = 1; k <= 7; ++k) {
    Vector expect(n * n, Cyclotomic(0));
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t gk = t.identity();
      for (std::size_t i = 0; i < k; ++i) gk = t.table[gk][g];
      expect[t.inverse(g) * n + gk] += Cyclotomic(1);
    }
    EXPECT_EQ(d.power(u, k), expect) << k;
  }
  EXPECT_EQ(d.power(u, 6), d.one());
}

TEST(DrinfeldDouble, EngineAgreesWithMaterializedDouble) {
  std::mt19937 rng(31);
  for (const auto& name : {"sweedler", "dualgroup:builtin:Z3", "taft:3"}) {
    const auto h = make_preset(name);
    const DoubleEngine engine(h);
    const auto q = drinfeld_double(h);
    EXPECT_EQ(q.algebra.dim(), h.dim() * h.dim());
    EXPECT_EQ(q.algebra.one(), engine.one()) << name;
    EXPECT_EQ(drinfeld_element(q), engine.drinfeld_element()) << name;
    for (int it = 0; it < 3; ++it) {
      const auto x = random_element(rng, q.algebra, 2), y = random_element(rng, q.algebra, 2);
      EXPECT_EQ(engine.multiply(x, y), q.algebra.multiply(x, y)) << name;
      EXPECT_EQ(engine.antipode(x), q.algebra.apply_antipode(x)) << name;
    }
  }
}

TEST(DrinfeldDouble, EmbeddingsAreAlgebraMaps) {
  std::mt19937 rng(41);
  const auto h = taft(3);
  const DoubleEngine d(h);
  for (int it = 0; it < 3; ++it) {
    const auto a = random_element(rng, h, 2), b = random_element(rng, h, 2);
    EXPECT_EQ(d.multiply(d.embed_primal(a), d.embed_primal(b)), d.embed_primal(h.multiply(a, b)));
    const auto fa = random_element(rng, d.dual_base(), 2), fb = random_element(rng, d.dual_base(), 2);
    EXPECT_EQ(d.multiply(d.embed_dual(fa), d.embed_dual(fb)), d.embed_dual(d.dual_base().multiply(fa, fb)));
  }
  // f_j (x) h_i = (f_j (x) 1)(1 (x) h_i)
  const std::size_t n = h.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_EQ(d.multiply(d.embed_dual(unit_vector(n, j)), d.embed_primal(unit_vector(n, i))),
                unit_vector(n * n, d.index(j, i)));
}

TEST(DrinfeldDouble, QuasitriangularOnSmallPresets) {
  for (const auto& name : preset_zoo()) {
    const auto h = make_preset(name);
    if (h.dim() > 9) continue;
    const auto q = drinfeld_double(h);
    EXPECT_TRUE(validate(q.algebra).empty()) << name;
    EXPECT_TRUE(verify_quasitriangular(q).empty()) << name;
    const auto u = drinfeld_element(q);
    EXPECT_TRUE(verify_s2_conjugation(q, u)) << name;
    EXPECT_TRUE(q.algebra.counit_of(u).is_one()) << name;
  }
}

TEST(DrinfeldDouble, CorruptedRMatrixIsDetected) {
  auto q = drinfeld_double(sweedler());
  q.r_matrix(0, 0) += Cyclotomic(1);
  EXPECT_FALSE(verify_quasitriangular(q).empty());
}

TEST(DrinfeldDouble, ElementInverse) {
  const auto q = drinfeld_double(sweedler());
  const auto u = drinfeld_element(q);
  const auto inv = element_inverse(q.algebra, u);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(q.algebra.multiply(u, *inv), q.algebra.one());
  EXPECT_FALSE(element_inverse(q.algebra, Vector(q.algebra.dim(), Cyclotomic(0))).has_value());
}
