#pragma once

#include <optional>
#include <vector>

#include "qpbw/cyclotomic.hpp"
#include "qpbw/roots.hpp"

namespace qpbw {

using RatMatrix = std::vector<std::vector<RatFunc>>;

/// n x n matrix of pairing values between degree-(r delta) imaginary root
/// vectors, indexed by I_0 x I_0, tagged with the formula that built it.
struct GramMatrix {
  enum class Source { ImaginaryPairing, DualityNormalized };
  long r = 1;
  Source source = Source::ImaginaryPairing;
  RatMatrix entries;
};

/// The tabulated closed form for det(([a_ij]_{q_i^r})_{i,j in I_0}), per
/// type.  This is the published claim; delta_det below is the ground truth,
/// and the two are compared by the table diagnostic.
LaurentPoly delta_closed(const CartanData& data, long r);

/// det(([a_ij]_{q_i^r})_{i,j in I_0}), exact, over the finite Cartan block.
LaurentPoly delta_det(const CartanData& data, long r);

struct DeltaTableDiagnostic {
  bool matches = false;
  int sign = 0;  // +1/-1 when matches, 0 otherwise
  LaurentPoly determinant;
  LaurentPoly closed_form;
};
DeltaTableDiagnostic delta_table_check(const CartanData& data, long r);

/// pi(E_{(r delta,i)}, F_{(s delta,j)}) =
///   delta_{r,s} (o(i)o(j))^r [r a_ij]_{q_i} / (r (q_j^{-1} - q_j)).
GramMatrix gram_imaginary(const CartanData& data, long r, long s);

/// M_r = ((o(i)o(j))^r [a_ij]_{q_i^r}), its exact inverse mu, and the
/// orthonormality verdict Sum_j M[i][j] mu[j][k] = delta_ik.
struct DualityReport {
  GramMatrix m;
  RatMatrix mu;
  LaurentPoly det;
  bool det_matches_delta = false;  // det == +- delta_det
  bool orthonormal = false;        // M * mu == identity, exact
};
DualityReport m_matrix_and_dual(const CartanData& data, long r);

/// Exact determinant / inverse of a RatFunc matrix (fraction-free Bareiss on
/// the cleared numerator matrix).  inverse throws std::domain_error when the
/// matrix is singular.
RatFunc rat_matrix_det(const RatMatrix& m);
RatMatrix rat_matrix_inverse(const RatMatrix& m);
bool rat_matrix_is_identity(const RatMatrix& m);
RatMatrix rat_matrix_mul(const RatMatrix& a, const RatMatrix& b);

/// Factor normalization for ordered PBW monomials (matching the divided
/// power conventions: q-factorial for real roots, plain factorial for
/// imaginary ones; Bare pairs unnormalized power monomials).
enum class PairNormalization { Bare, DividedDual };

/// The diagonal pairing values pi(x_{r,i}, y_{r,i}) of the chosen orthogonal
/// imaginary bases; the identity map (all ones) corresponds to the dual pair
/// of basis vectors produced by m_matrix_and_dual.
using ImDiag = std::vector<std::vector<RatFunc>>;  // [r][i-1], 1-based r offset by caller

struct MonomialFactor {
  Root root;
  unsigned long exp_left = 0;   // exponent on the E side
  unsigned long exp_right = 0;  // exponent on the F side
};

/// Orthogonality pairing of two ordered monomials given by matching factor
/// lists.  Off-diagonal (any exp_left != exp_right) gives 0.  In Bare mode
/// real factors contribute q_alpha^C(n,2) [n]_{q_alpha}! / (q_alpha^{-1}-q_alpha)^n
/// and imaginary factors n! * imdiag^n; in DividedDual mode the factorials
/// and the check-scaling cancel, leaving q_alpha^C(n,2) resp. imdiag^n.
RatFunc pair_monomials(const CartanData& data, const std::vector<MonomialFactor>& factors,
                       PairNormalization norm,
                       const std::optional<ImDiag>& imdiag = std::nullopt);

/// pi(K_lambda, K_mu) = q^{-(lambda|mu)}.
RatFunc pair_toral(const CartanData& data, const LatticeVec& lambda, const LatticeVec& mu);

/// Root-of-unity orders at which the integral form specializes: 1 and odd
/// ell, with gcd(ell, n+1) = 1 in type A and ell not divisible by 3 in types
/// E_6 and G_2.
bool is_admissible_order(const CartanData& data, unsigned long ell);
std::vector<unsigned long> admissible_orders(const CartanData& data, unsigned long bound);

struct NonvanishingReport {
  std::string type;
  unsigned long ell = 1;
  long checked_r = 0;
  bool all_nonzero = true;            // determinant Delta_r at eps
  std::optional<long> counterexample_r;
  bool closed_all_nonzero = true;     // tabulated closed form at eps
  std::optional<long> closed_counterexample_r;
};

/// For admissible ell, verifies Delta_r(eps) != 0 for 1 <= r <= r_max (hard
/// failure when violated); for non-admissible ell, reports the first
/// vanishing r of the determinant and of the closed form as negative
/// controls.
NonvanishingReport check_delta_nonvanishing(const CartanData& data, unsigned long ell,
                                            long r_max);

}  // namespace qpbw
