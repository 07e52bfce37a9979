#pragma once

#include <stdexcept>
#include <vector>

#include "qpbw/cartan.hpp"

namespace qpbw {

enum class RootKind { Real, Imaginary };

/// Positive root of the affine system, with multiplicity index for imaginary
/// roots: (r delta, i) with i in 1..n.  Real roots have mult_index = 0.
struct Root {
  std::vector<long> coords;  // over alpha_0..alpha_n
  RootKind kind = RootKind::Real;
  int mult_index = 0;

  bool operator==(const Root& o) const = default;
  bool operator<(const Root& o) const {
    if (coords != o.coords) return coords < o.coords;
    return mult_index < o.mult_index;
  }
};

Root real_root(std::vector<long> coords);
Root imaginary_root(const CartanData& data, long level, int mult_index);

/// delta-level of a root: the coefficient of delta (coords = level*marks + finite part).
long delta_level(const CartanData& data, const std::vector<long>& coords);

/// Doubly infinite word iota: Z -> I, stored as the two cyclic generators.
/// period_pos[j] gives iota(1+j mod ...), period_nonpos[j] gives iota(-j ...).
struct IotaWord {
  std::vector<int> period_pos;
  std::vector<int> period_nonpos;

  int at(long k) const;  // iota(k) for any k
};

struct IotaValidationError : std::runtime_error {
  long offending_k;
  IotaValidationError(long k, const std::string& what)
      : std::runtime_error(what), offending_k(k) {}
};

/// beta_k as defined from iota by prefix reflections:
///   k >= 1: s_{iota(1)} ... s_{iota(k-1)} (alpha_{iota(k)})
///   k <= 0: s_{iota(0)} ... s_{iota(k+1)} (alpha_{iota(k)})
std::vector<std::vector<long>> beta_positive_side(const CartanData& data, const IotaWord& iota,
                                                  long count);
std::vector<std::vector<long>> beta_nonpositive_side(const CartanData& data, const IotaWord& iota,
                                                     long count);

/// Checks over a window large enough to cover delta-level <= level_bound:
/// all beta_k are distinct positive real roots, the k >= 1 side lies in
/// {r delta - alpha}, the k <= 0 side in {r delta + alpha}, and both sides
/// cover every root of level <= level_bound (resp. < level_bound).
/// Throws IotaValidationError naming the first offending k.
void validate_iota(const CartanData& data, const IotaWord& iota, long level_bound = 6);

/// Default word: a reduced word of the translation by a strictly dominant
/// coroot-lattice element, repeated cyclically (nonpositive side reversed).
/// Shipped pre-verified words for the small-rank types; every other type gets
/// the generic construction.  The result is always validated.
IotaWord build_iota(const CartanData& data, long level_bound = 6);

/// Build from a user-supplied period word, validating before use.
IotaWord build_iota_from_word(const CartanData& data, const std::vector<int>& period_pos,
                              long level_bound = 6);

/// The total order on positive roots with multiplicity, materialized up to
/// delta-level N: first beta_1, beta_2, ... (level <= N), then imaginary
/// (r delta, i) with r descending and i ascending, then ..., beta_-1, beta_0
/// (level < N).
class OrderedRoots {
 public:
  OrderedRoots(const CartanData& data, const IotaWord& iota, long level_bound);

  const std::vector<Root>& roots() const { return roots_; }
  long level_bound() const { return level_bound_; }

  /// -1, 0, +1 for precedes / equal / follows.  Both roots must be in the
  /// enumerated range.
  int compare(const Root& x, const Root& y) const;
  std::size_t position(const Root& x) const;

 private:
  std::vector<Root> roots_;
  std::vector<std::pair<Root, std::size_t>> index_;  // sorted by Root
  long level_bound_;
};

/// q_alpha: q^{(alpha|alpha)/2} for real roots, q^{d_i} for (r delta, i).
LaurentPoly q_alpha(const CartanData& data, const Root& root);
long q_alpha_exponent(const CartanData& data, const Root& root);

}  // namespace qpbw
