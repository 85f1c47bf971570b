#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfqexp/drinfeld_double.hpp"
#include "hopfqexp/hopf_algebra.hpp"

namespace hopfqexp {

/// A verified twist J of `parent` together with J^{-1}.
struct TwistData {
  HopfAlgebra parent;
  Matrix j;
  Matrix j_inv;
};

struct TwistCheck {
  std::vector<std::string> violations;
  /// J^{-1}, when J is invertible.
  std::optional<Matrix> j_inv;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks invertibility, (Delta (x) Id)(J)(J (x) 1) = (Id (x) Delta)(J)(1 (x) J)
/// and (eps (x) Id)(J) = (Id (x) eps)(J) = 1. A supplied inverse is verified on
/// both sides; otherwise J^{-1} is solved for in H (x) H.
TwistCheck is_twist(const HopfAlgebra& h, const Matrix& j, const std::optional<Matrix>& j_inv = std::nullopt);

/// Brings H and J into a common field and verifies J; throws AxiomError on failure.
TwistData make_twist(const HopfAlgebra& h, const Matrix& j, const std::optional<Matrix>& j_inv = std::nullopt);

/// Q = m (S (x) Id)(J) and Q^{-1} = m (Id (x) S)(J^{-1}); throws CheckFailure unless Q Q^{-1} = 1.
struct QElements {
  Vector q;
  Vector q_inv;
};
QElements q_elements(const TwistData& t);

/// H^J: Delta^J(x) = J^{-1} Delta(x) J, S^J(x) = Q^{-1} S(x) Q. Parent grouplikes that
/// stay grouplike are kept; the grading is dropped.
HopfAlgebra twist_hopf(const TwistData& t);

/// Delta(Q^{-1} S(Q)) = J (Q^{-1}S(Q) (x) Q^{-1}S(Q)) (S^2 (x) S^2)(J^{-1}).
bool check_q_coproduct_identity(const TwistData& t);

/// u^J = Q^{-1} S(Q) u in D(H), with Q in the primal copy. The engine must be built on t.parent.
Vector twisted_drinfeld_element(const DoubleEngine& d, const TwistData& t);

/// g = S^{2n-1}(Q^{-1}) S^{2n-2}(Q) ... S(Q^{-1}) Q, which satisfies g (u^J)^n = u^n.
/// Requires S^{2n} = Id; throws CheckFailure if g is not grouplike in H^J.
Vector grouplike_from_twist(const TwistData& t, long n);

/// J = sum beta(chi, psi) e_chi (x) e_psi over the characters of an abelian group of
/// grouplikes, with e_chi = (1/|G|) sum_g chi(g)^{-1} g and
/// J^{-1} = sum beta(chi, psi)^{-1} e_chi (x) e_psi.
/// characters[c][g] is chi_c at group[g]; beta[c][d] pairs characters c and d.
/// Throws AxiomError if the result is not a twist (e.g. beta is not a bicharacter).
TwistData bicharacter_twist(const HopfAlgebra& h, const std::vector<Vector>& group,
                            const std::vector<std::vector<Cyclotomic>>& characters,
                            const std::vector<std::vector<Cyclotomic>>& beta);

/// beta(b, c) = zeta_n^{b^T M c} on the characters of (Z_n)^k, indexed as in cyclic_product_group.
std::vector<std::vector<Cyclotomic>> bilinear_beta(int n, const std::vector<std::vector<int>>& m);

/// Twists of the form J = 1 (x) 1 + sum c_p E_p: solves the linear part of the twist
/// equations exactly, then looks for zeros of the quadratic part along kernel basis
/// vectors and along lines v_i + lambda v_j. Every returned twist passed is_twist.
std::vector<TwistData> solve_twist_ansatz(const HopfAlgebra& h, const std::vector<Matrix>& directions);

/// The four directions x (x) x, x (x) gx, gx (x) x, gx (x) gx of the Sweedler algebra.
std::vector<Matrix> sweedler_twist_directions(const HopfAlgebra& sweedler);

}  // namespace hopfqexp
