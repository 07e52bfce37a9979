#pragma once

#include <string>
#include <vector>

#include "qpbw/laurent.hpp"

namespace qpbw {

enum class TypeLabel { A, B, C, D, E, F, G };

TypeLabel type_label_from_char(char c);
char type_label_char(TypeLabel t);

/// Vector in Q_infinity = Z<alpha_0,...,alpha_n> + Z<alpha_inf>.
struct LatticeVec {
  std::vector<long> coords;  // over alpha_0..alpha_n
  long c_inf = 0;

  bool operator==(const LatticeVec& o) const = default;
};

/// Cartan datum of an untwisted affine Kac-Moody algebra, in the standard
/// geometric normalization: d_i = (alpha_i|alpha_i)/2 with short roots of the
/// finite part normalized to d = 1.  Node 0 is the affine node attached via
/// the highest root, so d_0 equals the half-norm of the highest root (1 for
/// the simply laced types, 2 or 3 otherwise).
///
/// Invariants, all checked on construction:
///   * a_ii = 2, a_ij <= 0 off the diagonal, a_ij = 0 iff a_ji = 0;
///   * diag(d) * a is symmetric and the d_i are coprime positive integers;
///   * the delta marks span the kernel of a;
///   * a_ij < 0 implies o(i) o(j) = -1 on the finite diagram.
struct CartanData {
  TypeLabel type;
  int rank = 0;                        // finite rank n; indices 0..n are affine
  std::vector<std::vector<int>> a;     // (n+1) x (n+1) affine Cartan matrix
  std::vector<int> d;                  // symmetrizers, indices 0..n
  std::vector<int> marks;              // delta = sum marks[i] * alpha_i
  std::vector<int> o;                  // o[i] in {+1,-1} for i in 1..n; o[0] = 0

  std::string type_string() const;
  int n_nodes() const { return rank + 1; }

  /// Simple root alpha_i as a lattice vector.
  LatticeVec alpha(int i) const;
  LatticeVec delta() const;
  LatticeVec alpha_inf() const;
};

/// Construct the affine Cartan datum for an untwisted type.  Valid inputs:
/// A_n (n>=1), B_n (n>=3), C_n (n>=2), D_n (n>=4), E_6, E_7, E_8, F_4, G_2.
CartanData cartan_affine(TypeLabel type, int rank);
CartanData cartan_affine(const std::string& type, int rank);

/// Invariant bilinear form on Q_infinity:
///   (alpha_i|alpha_j) = d_i a_ij,  (alpha_inf|Q_0) = 0,
///   (alpha_inf|alpha_inf) = 0,  (alpha_inf|delta) = 1.
long bilinear(const CartanData& data, const LatticeVec& mu, const LatticeVec& nu);

/// Simple reflection s_i, i in 0..n, acting by
/// s_i(mu) = mu - 2 (mu|alpha_i)/(alpha_i|alpha_i) alpha_i.
/// An involution and an isometry of the form; fixes delta.
LatticeVec reflect(const CartanData& data, int i, const LatticeVec& mu);

/// Finite positive roots of the underlying finite diagram, as coordinate
/// vectors over alpha_1..alpha_n, generated by reflection closure and
/// cross-checked against the known cardinality.
std::vector<std::vector<long>> finite_positive_roots(const CartanData& data);

std::size_t finite_positive_root_count(TypeLabel type, int rank);

}  // namespace qpbw
