#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpbw/rational.hpp"

namespace qpbw {

/// Exact Laurent polynomial in one variable q with rational coefficients.
///
/// Invariant: the term map never stores a zero coefficient, so structural
/// equality of maps is arithmetic equality.  Values are immutable in spirit:
/// every operation returns a fresh polynomial, which makes concurrent use of
/// shared values safe.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  explicit LaurentPoly(long constant);

  /// c * q^e
  static LaurentPoly term(long exponent, const Rational& c = Rational(1));
  static const LaurentPoly& zero();
  static const LaurentPoly& one();
  static const LaurentPoly& q();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial is a single term c * q^e.
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  Rational coeff(long exponent) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<long, Rational>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }
  // Total order so polynomials can key maps (lexicographic on term maps).
  bool operator<(const LaurentPoly& o) const;

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(long k) const;  // multiply by q^k
  LaurentPoly pow(unsigned long n) const;

  /// q -> q^k for k != 0 (k may be negative; k = -1 is the bar involution).
  LaurentPoly substitute_q_power(long k) const;
  /// q -> q^{-1}
  LaurentPoly bar() const { return substitute_q_power(-1); }

  Rational eval_at_one() const;

  /// Exact division; returns nullopt when the division leaves a remainder.
  std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& divisor) const;

  /// Content: positive rational c such that (*this)/c has coprime integer
  /// coefficients.  Zero polynomial has content 0.
  Rational content() const;

  std::string to_string(const std::string& var = "q") const;

  void set_coeff(long exponent, const Rational& c);

 private:
  std::map<long, Rational> terms_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

/// Quotient and remainder of ordinary polynomial division after both operands
/// are shifted to minimal exponent zero; remainder is with respect to the
/// shifted divisor.  divisor must be nonzero.
struct LaurentDivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};
LaurentDivMod divmod_shifted(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Monic gcd in Q[q] of the two polynomials shifted to minimal exponent zero.
/// gcd(0, p) = monic shift of p.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Cheap one-prime modular filter: true certifies gcd(a, b) = 1 over Q.
/// False is inconclusive.
bool laurent_coprime_mod_filter(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qpbw
