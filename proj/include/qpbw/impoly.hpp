#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpbw/ratfunc.hpp"

namespace qpbw {

/// Exponent vector over the commuting generators: entry at index s-1 is the
/// exponent of the degree-s generator.  Trailing zeros are trimmed, so equal
/// monomials have identical vectors.
using MultiExp = std::vector<unsigned>;

long multiexp_delta_degree(const MultiExp& e);

/// Polynomial in the commuting formal generators with RatFunc coefficients;
/// the generator of index s carries delta-degree s.  This is the free
/// commutative model housing the imaginary root-vector families attached to
/// one multiplicity index.
class ImPoly {
 public:
  ImPoly() = default;
  explicit ImPoly(const RatFunc& c);

  static const ImPoly& zero();
  static const ImPoly& one();
  /// The generator of degree s (s >= 1).
  static ImPoly generator(unsigned s);

  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiExp, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const MultiExp& e) const;

  ImPoly operator-() const;
  ImPoly operator+(const ImPoly& o) const;
  ImPoly operator-(const ImPoly& o) const;
  ImPoly operator*(const ImPoly& o) const;
  ImPoly& operator+=(const ImPoly& o);
  ImPoly& operator-=(const ImPoly& o);
  bool operator==(const ImPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ImPoly& o) const { return !(*this == o); }

  ImPoly scaled(const RatFunc& c) const;
  ImPoly scaled(const Rational& c) const;
  ImPoly pow(unsigned long k) const;

  /// -1 when zero; otherwise the common delta-degree, or throws when the
  /// polynomial is not homogeneous.
  long homogeneous_degree() const;
  bool is_homogeneous() const;

  /// q -> 1 applied coefficientwise (throws on a pole at 1).  The result has
  /// constant coefficients; generators are reinterpreted classically.
  ImPoly specialize_q1() const;
  /// q -> q^{-1} coefficientwise.
  ImPoly bar() const;

  void set_coeff(MultiExp e, const RatFunc& c);

  std::string to_string(const std::string& sym = "Et") const;

 private:
  std::map<MultiExp, RatFunc> terms_;
};

inline ImPoly ring_scale(const ImPoly& c, const Rational& r) { return c.scaled(r); }
inline ImPoly ring_scale(const ImPoly& c, const RatFunc& f) { return c.scaled(f); }
inline bool ring_is_one(const ImPoly& c) {
  return c.terms().size() == 1 && c.terms().begin()->first.empty() &&
         c.terms().begin()->second.is_one();
}

}  // namespace qpbw
