#pragma once

#include <gmpxx.h>
#include <string>

namespace qpbw {

/// Arbitrary-precision rational scalar. All coefficient arithmetic in this
/// library is exact; no floating point is used anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string num_str(const Rational& r) { return r.get_num().get_str(); }
inline std::string den_str(const Rational& r) { return r.get_den().get_str(); }

inline Rational rat_from_strings(const std::string& num, const std::string& den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace qpbw
