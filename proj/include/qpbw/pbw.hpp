#pragma once

#include <map>
#include <optional>

#include "qpbw/gram.hpp"
#include "qpbw/imroots.hpp"
#include "qpbw/roots.hpp"

namespace qpbw {

/// Which index set the toral basis block ranges over.  The source
/// conventions are ambiguous between I_0 and I (and the group-like basis of
/// the toral subalgebra uses the extended set), so the choice is a
/// parameter; the default everywhere is the full affine set I.
enum class ToralIndexSet { Finite, Affine, AffineExtended };  // I_0, I, I_infinity

/// The (node, d) pairs the toral product ranges over under the given choice;
/// the extension node carries d = 1.
std::vector<std::pair<int, long>> toral_index_nodes(const CartanData& data,
                                                    ToralIndexSet set = ToralIndexSet::Affine);

enum class FactorNormalization { QDivided, PlainDivided, Bare };

/// One factor of an ordered PBW monomial index: no algebra element is ever
/// formed, only the bookkeeping the pairing formulas need.
struct ExpVecEntry {
  Root root;
  unsigned long exp = 0;
  FactorNormalization normalization = FactorNormalization::Bare;
};

/// Ordered exponent vector over the enumerated positive roots.  Iteration
/// order is the convex order; construction validates it against the
/// enumeration's comparator and rejects zero exponents (finite support only).
class ExpVec {
 public:
  ExpVec() = default;
  ExpVec(const OrderedRoots& order, std::vector<ExpVecEntry> entries);

  const std::vector<ExpVecEntry>& entries() const { return entries_; }

  /// Default normalizations: q-divided on real roots, plain-divided on
  /// imaginary roots.
  static ExpVec divided(const OrderedRoots& order,
                        std::vector<std::pair<Root, unsigned long>> support);

 private:
  std::vector<ExpVecEntry> entries_;
};

/// weight(v) = sum n_alpha p(alpha), in root-lattice coordinates.
LatticeVec weight(const CartanData& data, const ExpVec& v);

/// Laurent polynomial in one toral generator K with RatFunc coefficients.
using ToralElement = std::map<long, RatFunc>;  // K-degree -> coefficient

/// [K_i; c, t] = prod_{s=1}^t (q_i^{c-s+1} K_i - q_i^{-(c-s+1)} K_i^{-1})
///             / (q_i^s - q_i^{-s})
ToralElement toral_element(long c, unsigned long t, long d_i);

/// K_i^{-floor(t/2)} [K_i; 0, t], the basis element of the toral block.
ToralElement basis_toral(unsigned long t, long d_i);

struct ToralRegularityReport {
  bool all_regular = true;
  unsigned long failing_t = 0;
  unsigned long failing_order = 0;
};

/// Checks every coefficient of basis_toral(t), t <= t_max, for regularity at
/// each sampled admissible order.
ToralRegularityReport toral_regularity_report(unsigned long t_max, long d_i,
                                              const std::vector<unsigned long>& sample_orders);

/// Round trip between the two spanning families of the fixed-k imaginary
/// block in each delta-degree: divided powers of the rescaled hat family
/// versus monomials in the bracket family.  For degree D = R*k the block is
/// indexed by partitions of R on both sides.
struct BlockTransitionReport {
  long d_i = 1;
  long k = 1;
  long max_degree = 0;
  bool roundtrip_identity = true;     // A * B = identity, exact, every block
  bool classical_match = true;        // A at q = 1 equals the classical transition
  std::vector<std::size_t> block_sizes;
};
BlockTransitionReport block_transition_roundtrip(long d_i, long k, long max_degree);

/// All partitions of n (each as multiplicity vector m, m[z-1] = count of
/// part z), lexicographic.
std::vector<std::vector<unsigned>> partitions_of(unsigned n);

}  // namespace qpbw
