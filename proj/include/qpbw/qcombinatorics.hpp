#pragma once

#include "qpbw/laurent.hpp"

namespace qpbw {

/// [s]_{q^d} = (q^{ds} - q^{-ds}) / (q^d - q^{-d}), expanded exactly.
/// s may be negative: [-s] = -[s].  [0] = 0.
LaurentPoly q_int(long s, long d = 1);

/// [m]_{q^d}! = prod_{k=1}^m [k]_{q^d}
LaurentPoly q_factorial(unsigned long m, long d = 1);

/// Gaussian binomial [m choose n]_{q^d}; requires n <= m.
LaurentPoly q_binom(unsigned long m, unsigned long n, long d = 1);

/// (n)_x = 1 + x + ... + x^{n-1} evaluated at x = base; (0)_x = 0.
/// By convention (n)_1 = n (the x -> 1 limit).
LaurentPoly paren_q_poly(unsigned long n, const LaurentPoly& base);

}  // namespace qpbw
