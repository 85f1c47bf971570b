#include <gtest/gtest.h>

#include "hopfqexp/error.hpp"
#include "hopfqexp/presets.hpp"
#include "hopfqexp/quasi_exponent.hpp"
#include "test_support.hpp"

using namespace hopfqexp;
using hopfqexp::testing::dense_comultiplication;
using hopfqexp::testing::dense_multiplication;

namespace {

// m_n and Delta_n assembled from Kronecker products of the dense tables.
std::pair<Matrix, Matrix> kron_iterated(const HopfAlgebra& h, std::size_t n) {
  const auto id = Matrix::identity(h.dim());
  Matrix m = id, d = id;
  for (std::size_t k = 2; k <= n; ++k) {
    m = dense_multiplication(h) * kron(m, id);
    d = kron(d, id) * dense_comultiplication(h);
  }
  return {m, d};
}

// T_n = m_n (Id (x) S^{-2} (x) ... (x) S^{-2n+2}) Delta_n from dense matrices.
Matrix kron_t_map(const HopfAlgebra& h, std::size_t n) {
  if (n == 0) {
    Matrix t(h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t j = 0; j < h.dim(); ++j) t(i, j) = h.unit()[i] * h.counit()[j];
    return t;
  }
  const auto s_inv2 = inverse(h.antipode() * h.antipode()).value();
  Matrix legs = Matrix::identity(h.dim()), power = Matrix::identity(h.dim());
  for (std::size_t k = 1; k < n; ++k) {
    power = power * s_inv2;
    legs = kron(legs, power);
  }
  const auto [m, d] = kron_iterated(h, n);
  return m * legs * d;
}

Polynomial poly(std::vector<long> c) {
  std::vector<Cyclotomic> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

TEST(QuasiExponent, IteratedMapsMatchKroneckerRecursion) {
  for (const auto& name : {"sweedler", "group:builtin:S3", "taft:3"}) {
    const auto h = make_preset(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto maps = iterated_maps(h, n);
      const auto [m, d] = kron_iterated(h, n);
      EXPECT_EQ(maps.multiplication, m) << name << " " << n;
      EXPECT_EQ(maps.comultiplication, d) << name << " " << n;
    }
    const auto zero = iterated_maps(h, 0);
    EXPECT_EQ(zero.multiplication.cols(), 1u);
    EXPECT_EQ(zero.comultiplication.rows(), 1u);
  }
}

TEST(QuasiExponent, TMapsMatchKroneckerOracle) {
  const auto sw = sweedler();
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(t_map(sw, n), kron_t_map(sw, n)) << n;
  const auto t3 = taft(3);
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(t_map(t3, n), kron_t_map(t3, n)) << n;
  const auto maps = t_maps(sw, 5);
  ASSERT_EQ(maps.size(), 5u);
  EXPECT_EQ(maps[3], t_map(sw, 3));
}

TEST(QuasiExponent, SweedlerOperatorIdentity) {
  const auto t = t_maps(sweedler(), 5);
  EXPECT_TRUE((t[0] - Cyclotomic(2) * t[2] + t[4]).is_zero());
  EXPECT_FALSE((t[0] - t[2]).is_zero());
}

TEST(QuasiExponent, SweedlerMinimalPolynomial) {
  const auto f = u_min_poly_via_t(sweedler());
  EXPECT_EQ(f, poly({1, 0, -2, 0, 1}));
  EXPECT_EQ(u_min_poly_via_regular(sweedler()), f);
}

TEST(QuasiExponent, RoutesAgreeOnSmallPresets) {
  for (const auto& name : {"trivial", "group:builtin:Z2", "group:builtin:Z3", "group:builtin:S3", "sweedler", "taft:3",
                           "dualgroup:builtin:S3", "uqb2:3"}) {
    const auto h = make_preset(name);
    EXPECT_EQ(u_min_poly_via_t(h), u_min_poly_via_regular(h)) << name;
  }
}

TEST(QuasiExponent, RegularRepresentationLiteral) {
  // Minimal polynomial of the N^2 x N^2 matrix of left multiplication by u.
  for (const auto& name : {"sweedler", "group:builtin:Z3"}) {
    const auto h = make_preset(name);
    const auto q = drinfeld_double(h);
    const auto lu = regular_representation(q.algebra, drinfeld_element(q));
    EXPECT_EQ(minimal_polynomial(lu), u_min_poly_via_t(h)) << name;
  }
}

TEST(QuasiExponent, GroupAlgebraQexpIsGroupExponent) {
  for (const auto& g : {"Z2", "Z3", "Z4", "Z6", "Z2xZ2", "S3"}) {
    const auto t = builtin_group(g);
    const auto r = quasi_exponent(group_algebra(t, g));
    EXPECT_EQ(r.qexp, t.exponent()) << g;
    ASSERT_TRUE(r.exponent.has_value()) << g;
    EXPECT_EQ(*r.exponent, t.exponent()) << g;
    EXPECT_EQ(r.unipotency_index, 1) << g;
  }
}

TEST(QuasiExponent, ZooMatchesExpectedInvariants) {
  for (const auto& name : preset_zoo()) {
    const auto d = PresetDescriptor::parse(name);
    const auto r = quasi_exponent(d.build());
    const auto ex = d.expected();
    if (ex.qexp) EXPECT_EQ(r.qexp, *ex.qexp) << name;
    if (ex.exponent) EXPECT_EQ(r.exponent, ex.exponent) << name;
    if (ex.exponent_infinite) EXPECT_FALSE(r.exponent.has_value()) << name;
    if (ex.s2_order) EXPECT_EQ(r.s2_order, *ex.s2_order) << name;
    EXPECT_EQ(r.qexp % r.s2_order, 0) << name;
  }
}

TEST(QuasiExponent, ReportFields) {
  const auto r = quasi_exponent(uq_sl2(3));
  EXPECT_EQ(r.qexp, 3);
  EXPECT_FALSE(r.exponent.has_value());
  EXPECT_EQ(r.unipotency_index, 3);
  EXPECT_EQ(r.min_poly, poly({-1, 0, 0, 3, 0, 0, -3, 0, 0, 1}));
  EXPECT_EQ(r.route, "t-operators");
  const auto s3 = quasi_exponent(group_algebra(builtin_group("S3"), "S3"), {.cross_check = true});
  EXPECT_TRUE(s3.cross_checked);
  EXPECT_EQ(s3.route, "t-operators+regular");
  EXPECT_EQ(s3.min_poly, poly({-1, -1, 0, 1, 1}));
  EXPECT_EQ(s3.squarefree, s3.min_poly);
}

TEST(QuasiExponent, BoundIsHonoured) {
  EXPECT_THROW(quasi_exponent(group_algebra(builtin_group("S3"), "S3"), {.bound = 5}), BoundExceeded);
  EXPECT_EQ(quasi_exponent(group_algebra(builtin_group("S3"), "S3"), {.bound = 6}).qexp, 6);
}

TEST(QuasiExponent, UnipotencyHelpers) {
  const auto x_minus_1 = poly({-1, 1});
  EXPECT_TRUE(is_unipotent_min_poly(x_minus_1 * x_minus_1 * x_minus_1));
  EXPECT_FALSE(is_unipotent_min_poly(poly({1, 1})));
  const auto f = poly({1, 0, -2, 0, 1});  // (x^2 - 1)^2
  EXPECT_EQ(unipotency_index(f, 2), 2);
  EXPECT_EQ(unipotency_index(f, 4), 2);
  EXPECT_FALSE(unipotency_index(f, 3).has_value());
  EXPECT_EQ(unipotency_index(poly({-1, 0, 0, 1}), 3), 1);
}

TEST(QuasiExponent, ElementMinPoly) {
  const auto h = taft(3);
  const auto mult = [&](const Vector& a, const Vector& b) { return h.multiply(a, b); };
  EXPECT_EQ(element_min_poly(mult, h.one(), h.basis(1), 10), poly({-1, 0, 0, 1}));
  EXPECT_EQ(element_min_poly(mult, h.one(), h.basis(3), 10), poly({0, 0, 0, 1}));
}

TEST(QuasiExponent, RPowersAndDrinfeldPowers) {
  const auto q = drinfeld_double(sweedler());
  RPowers r(q);
  const auto& a = q.algebra;
  const auto s = a.antipode();
  const auto u = drinfeld_element(q);
  EXPECT_TRUE(r[0] == a.tensor_one());
  EXPECT_EQ(r[1], q.r_matrix);
  for (std::size_t k = 1; k <= 3; ++k) {
    // m_21 (Id (x) S)(R_k) = u^k
    EXPECT_EQ(a.contract_flipped(HopfAlgebra::apply_legs(Matrix::identity(a.dim()), s, r[k])), a.power(u, k)) << k;
    EXPECT_EQ(r_n(q, k), r[k]);
  }
  // (T_k (x) Id)(R) = R_k
  for (std::size_t k = 0; k <= 2; ++k)
    EXPECT_EQ(HopfAlgebra::apply_legs(t_map(a, k), Matrix::identity(a.dim()), q.r_matrix), r[k]) << k;
}

TEST(QuasiExponent, AlternatingBinomialSums) {
  for (const auto& [name, qexp] : std::vector<std::pair<std::string, std::size_t>>{{"sweedler", 2}, {"group:builtin:Z3", 3}}) {
    const auto q = drinfeld_double(make_preset(name));
    RPowers r(q);
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto witness = alternating_r_sum_witness(r, n, 6);
      EXPECT_EQ(witness.has_value(), n % qexp == 0) << name << " n = " << n;
    }
  }
}
