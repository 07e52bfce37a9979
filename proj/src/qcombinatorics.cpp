#include "qpbw/qcombinatorics.hpp"

#include <stdexcept>

namespace qpbw {

LaurentPoly q_int(long s, long d) {
  if (d <= 0) throw std::domain_error("q_int: d must be positive");
  if (s == 0) return LaurentPoly::zero();
  long n = s > 0 ? s : -s;
  Rational sign(s > 0 ? 1 : -1);
  LaurentPoly p;
  // [n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
  for (long j = 0; j < n; ++j) p.set_coeff(d * (n - 1 - 2 * j), sign);
  return p;
}

LaurentPoly q_factorial(unsigned long m, long d) {
  LaurentPoly p = LaurentPoly::one();
  for (unsigned long k = 2; k <= m; ++k) p *= q_int(static_cast<long>(k), d);
  return p;
}

LaurentPoly q_binom(unsigned long m, unsigned long n, long d) {
  if (n > m) throw std::domain_error("q_binom: n > m");
  if (n == 0 || n == m) return LaurentPoly::one();
  // [m choose n] = prod_{k=1}^{n} [m-n+k]/[k], each step an exact division
  LaurentPoly acc = LaurentPoly::one();
  for (unsigned long k = 1; k <= n; ++k) {
    acc *= q_int(static_cast<long>(m - n + k), d);
    auto div = acc.divided_exactly_by(q_int(static_cast<long>(k), d));
    if (!div) throw std::logic_error("q_binom: non-exact division");
    acc = *div;
  }
  return acc;
}

LaurentPoly paren_q_poly(unsigned long n, const LaurentPoly& base) {
  if (base.is_one()) return LaurentPoly(static_cast<long>(n));
  LaurentPoly acc, p = LaurentPoly::one();
  for (unsigned long j = 0; j < n; ++j) {
    acc += p;
    p *= base;
  }
  return acc;
}

}  // namespace qpbw
