#pragma once

#include <string>

#include "qpbw/laurent.hpp"
#include "qpbw/qcombinatorics.hpp"

namespace qpbw {

/// Element of the rational function field Q(q), kept in canonical form:
///   * gcd(num, den) = 1 over Q[q] after shifting den to minimal exponent 0
///     (num absorbs the leftover power of q and may have negative exponents),
///   * den has coprime integer coefficients with positive lowest-degree
///     coefficient.
/// Two values are equal iff their canonical forms are structurally identical.
class RatFunc {
 public:
  RatFunc() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);
  explicit RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
  explicit RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
  explicit RatFunc(long c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}

  static const RatFunc& zero();
  static const RatFunc& one();
  /// c * q^e
  static RatFunc q_power(long e, const Rational& c = Rational(1));

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on zero divisor
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const;  // arbitrary total order for map keys

  RatFunc inverse() const;  // throws on zero
  RatFunc pow(long n) const;
  RatFunc scaled(const Rational& c) const;

  /// q -> q^{-1} applied to numerator and denominator.
  RatFunc bar() const;

  std::string to_string(const std::string& var = "q") const;

 private:
  struct AlreadyReduced {};
  RatFunc(LaurentPoly num, LaurentPoly den, AlreadyReduced);

  LaurentPoly num_;
  LaurentPoly den_;
  void canonicalize();
  void normalize_units();  // shift/content/sign normalization, no gcd
};

RatFunc operator*(const Rational& c, const RatFunc& f);

/// [s]_{q^d} as a RatFunc.
inline RatFunc q_int_rf(long s, long d = 1) { return RatFunc(q_int(s, d)); }

/// (n)_x at x = base, as a RatFunc (the spec-level paren_q).
RatFunc paren_q(unsigned long n, const RatFunc& base);

/// Parse the canonical textual forms accepted by the CLI:
///   polynomials like "q^2-3*q+1+q^-1", "-2", "q", or an explicitly
///   parenthesized quotient "(q^2-1)/(q-1)".  Unparenthesized division is
///   rejected as ambiguous.
RatFunc parse_ratfunc(const std::string& text);
LaurentPoly parse_laurent(const std::string& text);

}  // namespace qpbw
