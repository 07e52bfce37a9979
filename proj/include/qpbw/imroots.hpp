#pragma once

#include "qpbw/impoly.hpp"
#include "qpbw/series.hpp"

namespace qpbw {

/// Imaginary root-vector families for one fixed multiplicity index, modeled
/// in the free commutative ring on the degree-graded generators (index s is
/// the vector of weight s*delta).  All vectors attached to imaginary roots
/// commute, so every identity below is faithfully represented here.
///
/// Conventions: q_i = q^{d_i}; irf_E(d_i, T)[r] is the r-th family member for
/// 1 <= r <= T (families with a degree-0 member store it at index 0).

/// E-family: the log transform of the generators,
///   (q_i - q_i^{-1}) sum_r E_r z^r = log(1 - (q_i - q_i^{-1}) sum_s G_s z^s).
/// Grading forces the s-th term of the log argument to carry z^s.
/// Index 0 holds 0 by convention; E_r at index r.
std::vector<ImPoly> irf_E(long d_i, long order);

/// Edot-family by the defining recursion
///   Edot_0 = 1,  Edot_r = q_i^r / [r]_{q_i} * sum_{s=1}^r G_s Edot_{r-s}.
std::vector<ImPoly> irf_Edot(long d_i, long order);

/// Same family computed the independent way, from the E-family:
///   Edot_r = -(1/r) sum_{s=1}^r q_i^s (s/[s]_{q_i}) E_s Edot_{r-s}.
std::vector<ImPoly> irf_Edot_from_E(long d_i, long order);

/// Ehat-family: Ehat_r = (r / [r]_{q_i}) E_r.
std::vector<ImPoly> irf_Ehat(long d_i, long order);

/// Divided power Ehat_r^k / k! (plain factorial).
ImPoly irf_divided_power_hat(long d_i, long r, unsigned long k);

/// Bracket family, by the recursion
///   X_0 = 1,  X_r = -(1/r) sum_{s=1}^r q_i^{ks} (sk/[sk]_{q_i}) E_{sk} X_{r-s}.
/// Requires generators up to k*order.
std::vector<ImPoly> irf_Edot_bracket(long d_i, long k, long order);

/// Same family via Psi applied to { -q_i^{kr}/r * Ehat_{rk} }.
std::vector<ImPoly> irf_Edot_bracket_psi(long d_i, long k, long order);

/// Angle family, by
///   (r)_{q_i^{-2}} X_r = q_i sum_{s=1}^r G_{sk} X_{r-s}.
std::vector<ImPoly> irf_Edot_angle(long d_i, long k, long order);

/// Classical family: Psi applied to { (1/r) g_{rk} } over constant
/// coefficients (generators reinterpreted classically).
std::vector<ImPoly> classical_Lambda(long k, long order);

/// Coefficientwise q -> 1 of a whole family.
std::vector<ImPoly> specialize_family_q1(const std::vector<ImPoly>& family);

/// Report for the closing generating-series identity: with X the angle
/// family, X(q_i^{-2} z) = (1 - (q_i - q_i^{-1}) sum_r G_{rk} z^r) X(z).
struct SeriesRelationReport {
  bool holds = true;
  long first_failing_degree = -1;
  ImPoly lhs_at_failure;
  ImPoly rhs_at_failure;
};
SeriesRelationReport check_series_relation(long d_i, long k, long order);

}  // namespace qpbw
