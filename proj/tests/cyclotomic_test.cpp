#include <gtest/gtest.h>

#include <complex>
#include <map>
#include <numeric>
#include <random>

#include "hopfqexp/cyclotomic.hpp"
#include "hopfqexp/error.hpp"
#include "test_support.hpp"

using namespace hopfqexp;
using hopfqexp::testing::random_cyclotomic;
using hopfqexp::testing::to_complex;

namespace {

constexpr int kIterations = 200;
constexpr double kTol = 1e-9;

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < kTol * (1.0 + std::abs(b)); }

}  // namespace

TEST(Cyclotomic, EulerPhiMatchesCount) {
  for (int m = 1; m <= 40; ++m) {
    int count = 0;
    for (int k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) ++count;
    EXPECT_EQ(euler_phi(m), count) << "m = " << m;
  }
}

TEST(Cyclotomic, SumOfPrimitiveCubeRootsIsMinusOne) {
  const auto z = Cyclotomic::zeta(3);
  EXPECT_EQ(z + z * z, Cyclotomic(-1));
  EXPECT_TRUE((z * z * z).is_one());
}

TEST(Cyclotomic, InverseOfZeta4IsMinusZeta4) {
  const auto i = Cyclotomic::zeta(4);
  EXPECT_EQ(i.inverse(), -i);
  EXPECT_EQ(Cyclotomic::zeta(4, -1), -i);
}

TEST(Cyclotomic, ZetaPowersWrapAround) {
  for (int m : {1, 2, 3, 5, 6, 8, 12}) {
    for (long k = -2 * m; k <= 2 * m; ++k) {
      EXPECT_EQ(Cyclotomic::zeta(m, k), Cyclotomic::zeta(m).pow(k)) << m << " " << k;
      EXPECT_EQ(Cyclotomic::zeta(m, k), Cyclotomic::zeta(m, k + m));
    }
  }
}

TEST(Cyclotomic, PrimitiveRootsSumToMoebius) {
  // Sum of the primitive m-th roots of unity is mu(m).
  const std::map<int, int> mobius = {{1, 1}, {2, -1}, {3, -1}, {4, 0}, {5, -1}, {6, 1}, {8, 0}, {9, 0}, {10, 1}, {12, 0}};
  for (const auto& [m, mu] : mobius) {
    Cyclotomic s = Cyclotomic::zero(m);
    for (int k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) s += Cyclotomic::zeta(m, k);
    EXPECT_EQ(s, Cyclotomic(mu)) << "m = " << m;
  }
}

TEST(Cyclotomic, RationalsEmbedIntoEveryField) {
  const auto z5 = Cyclotomic::zeta(5);
  const Cyclotomic half(Rational(1, 2));
  EXPECT_EQ((z5 + half) - half, z5);
  EXPECT_EQ((half * z5).conductor(), 5);
  EXPECT_TRUE(Cyclotomic::rational(7, Rational(3, 4)).is_rational());
  EXPECT_EQ(Cyclotomic::rational(7, Rational(3, 4)), Cyclotomic(Rational(3, 4)));
}

TEST(Cyclotomic, MixedConductorsNeedExplicitLift) {
  const auto z3 = Cyclotomic::zeta(3);
  const auto z4 = Cyclotomic::zeta(4);
  EXPECT_THROW((void)(z3 + z4), ConductorMismatch);
  EXPECT_THROW((void)(z3 * z4), ConductorMismatch);
  const auto sum = z3.lift(12) + z4.lift(12);
  EXPECT_TRUE(near(to_complex(sum), to_complex(z3) + to_complex(z4)));
  EXPECT_EQ(z3.lift(12), Cyclotomic::zeta(12, 4));
  EXPECT_EQ(z4.lift(12), Cyclotomic::zeta(12, 3));
}

TEST(Cyclotomic, DivisionByZeroThrows) {
  EXPECT_THROW((void)Cyclotomic::zero(5).inverse(), DivisionByZero);
  EXPECT_THROW((void)(Cyclotomic(1) / Cyclotomic(0)), DivisionByZero);
}

TEST(Cyclotomic, RationalParsingAndFormatting) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

class CyclotomicFieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(CyclotomicFieldAxioms, RingAxiomsHoldExactly) {
  const int m = GetParam();
  std::mt19937 rng(1234 + m);
  for (int it = 0; it < kIterations; ++it) {
    const auto a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m), c = random_cyclotomic(rng, m);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one()) << a.to_string();
      EXPECT_EQ((b / a) * a, b);
    }
    auto acc = c;
    acc.add_product(a, b);
    EXPECT_EQ(acc, c + a * b);
  }
}

TEST_P(CyclotomicFieldAxioms, ComplexEmbeddingIsAHomomorphism) {
  // Oracle: the field operations agree with complex arithmetic under zeta_m -> e^{2 pi i/m}.
  const int m = GetParam();
  std::mt19937 rng(99 + m);
  for (int it = 0; it < kIterations; ++it) {
    const auto a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m);
    EXPECT_TRUE(near(to_complex(a + b), to_complex(a) + to_complex(b)));
    EXPECT_TRUE(near(to_complex(a * b), to_complex(a) * to_complex(b)));
    if (!a.is_zero()) EXPECT_TRUE(near(to_complex(a.inverse()), 1.0 / to_complex(a)));
  }
}

TEST_P(CyclotomicFieldAxioms, LiftPreservesValue) {
  const int m = GetParam();
  std::mt19937 rng(7 + m);
  for (int it = 0; it < 50; ++it) {
    const auto a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m);
    for (int k : {2, 3}) {
      const auto la = a.lift(m * k), lb = b.lift(m * k);
      EXPECT_TRUE(near(to_complex(la), to_complex(a)));
      EXPECT_EQ(la * lb, (a * b).lift(m * k));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Conductors, CyclotomicFieldAxioms, ::testing::Values(1, 2, 3, 4, 5, 6, 8, 9, 12, 15));
