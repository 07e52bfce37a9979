#pragma once

#include <stdexcept>
#include <vector>

#include "qpbw/ratfunc.hpp"

namespace qpbw {

/// Truncated coefficient sequence c_0..c_T of a formal power series over a
/// commutative ring C containing the rationals.  C must provide +, *, ==,
/// a default zero state, and scaling via ring_scale(c, Rational) /
/// ring_scale(c, RatFunc); RatFunc and ImPoly both qualify.
template <class C>
struct SeriesVec {
  long order = 0;              // T
  std::vector<C> coeff;        // size T + 1

  static SeriesVec with_unit_head(long order, const C& one) {
    SeriesVec s;
    s.order = order;
    s.coeff.assign(static_cast<std::size_t>(order + 1), C{});
    s.coeff[0] = one;
    return s;
  }

  bool operator==(const SeriesVec& o) const { return order == o.order && coeff == o.coeff; }
};

inline RatFunc ring_scale(const RatFunc& c, const Rational& r) { return c.scaled(r); }
inline RatFunc ring_scale(const RatFunc& c, const RatFunc& f) { return c * f; }
inline bool ring_is_one(const RatFunc& c) { return c.is_one(); }

/// Y = Psi(X):  sum Y_s z^s = exp(sum_{r>=1} X_r z^r), computed by the
/// division-light recursion  r Y_r = sum_{s=1}^{r} s X_s Y_{r-s}.
/// Requires X_0 = 1.
template <class C>
SeriesVec<C> psi_transform(const SeriesVec<C>& x) {
  if (x.coeff.empty() || !ring_is_one(x.coeff[0]))
    throw std::domain_error("psi_transform: constant term must be 1");
  SeriesVec<C> y;
  y.order = x.order;
  y.coeff.assign(x.coeff.size(), C{});
  y.coeff[0] = x.coeff[0];
  for (long r = 1; r <= x.order; ++r) {
    C acc{};
    for (long s = 1; s <= r; ++s)
      acc = acc + ring_scale(x.coeff[static_cast<std::size_t>(s)] *
                                 y.coeff[static_cast<std::size_t>(r - s)],
                             Rational(s));
    y.coeff[static_cast<std::size_t>(r)] = ring_scale(acc, Rational(1, static_cast<unsigned long>(r)));
  }
  return y;
}

/// X = Phi(Y):  sum_{r>=1} X_r z^r = log(sum Y_s z^s), the inverse of Psi,
/// computed by  r X_r = r Y_r - sum_{s=1}^{r-1} (r-s) Y_s X_{r-s}.
/// Requires Y_0 = 1.
template <class C>
SeriesVec<C> phi_transform(const SeriesVec<C>& y) {
  if (y.coeff.empty() || !ring_is_one(y.coeff[0]))
    throw std::domain_error("phi_transform: constant term must be 1");
  SeriesVec<C> x;
  x.order = y.order;
  x.coeff.assign(y.coeff.size(), C{});
  x.coeff[0] = y.coeff[0];
  for (long r = 1; r <= y.order; ++r) {
    C acc = ring_scale(y.coeff[static_cast<std::size_t>(r)], Rational(r));
    for (long s = 1; s < r; ++s)
      acc = acc - ring_scale(y.coeff[static_cast<std::size_t>(s)] *
                                 x.coeff[static_cast<std::size_t>(r - s)],
                             Rational(r - s));
    x.coeff[static_cast<std::size_t>(r)] = ring_scale(acc, Rational(1, static_cast<unsigned long>(r)));
  }
  return x;
}

/// Skew derivation D_x with x = base:
///   (D f)(z) = (f(x z) - f(z)) / ((x - 1) z),
/// so the coefficient of z^{n-1} in D f is (n)_base * c_n.  When base = 1
/// this degenerates to the ordinary derivative d/dz.
template <class C>
SeriesVec<C> skew_derive(const SeriesVec<C>& f, const RatFunc& base) {
  SeriesVec<C> out;
  out.order = f.order > 0 ? f.order - 1 : 0;
  out.coeff.assign(static_cast<std::size_t>(out.order + 1), C{});
  for (long n = 1; n <= f.order; ++n)
    out.coeff[static_cast<std::size_t>(n - 1)] =
        ring_scale(f.coeff[static_cast<std::size_t>(n)], paren_q(static_cast<unsigned long>(n), base));
  return out;
}

/// Test oracle: directly compose exp(sum_{r>=1} X_r z^r) as a truncated
/// series, term by term.  Kept separate from psi_transform so the two paths
/// stay independent.
template <class C>
SeriesVec<C> exp_compose_oracle(const SeriesVec<C>& x, const C& one) {
  SeriesVec<C> acc = SeriesVec<C>::with_unit_head(x.order, one);  // exp(0)
  SeriesVec<C> power = acc;                                       // u^k / k!
  // u = sum_{r>=1} X_r z^r; exp(u) = sum_k u^k / k!
  for (long k = 1; k <= x.order; ++k) {
    // power := power * u / k, truncated
    SeriesVec<C> next;
    next.order = x.order;
    next.coeff.assign(static_cast<std::size_t>(x.order + 1), C{});
    for (long a = 0; a <= x.order; ++a)
      for (long b = 1; a + b <= x.order; ++b)
        next.coeff[static_cast<std::size_t>(a + b)] =
            next.coeff[static_cast<std::size_t>(a + b)] +
            power.coeff[static_cast<std::size_t>(a)] * x.coeff[static_cast<std::size_t>(b)];
    for (auto& c : next.coeff) c = ring_scale(c, Rational(1, static_cast<unsigned long>(k)));
    power = next;
    for (long t = 0; t <= x.order; ++t)
      acc.coeff[static_cast<std::size_t>(t)] =
          acc.coeff[static_cast<std::size_t>(t)] + power.coeff[static_cast<std::size_t>(t)];
  }
  return acc;
}

/// Test oracle: truncated log(Y(z)) via log(1+u) = sum (-1)^{k+1} u^k / k.
template <class C>
SeriesVec<C> log_compose_oracle(const SeriesVec<C>& y, const C& one) {
  SeriesVec<C> u = y;
  u.coeff[0] = C{};  // u = Y - 1
  SeriesVec<C> acc;
  acc.order = y.order;
  acc.coeff.assign(y.coeff.size(), C{});
  SeriesVec<C> power = SeriesVec<C>::with_unit_head(y.order, one);
  for (long k = 1; k <= y.order; ++k) {
    SeriesVec<C> next;
    next.order = y.order;
    next.coeff.assign(y.coeff.size(), C{});
    for (long a = 0; a <= y.order; ++a)
      for (long b = 1; a + b <= y.order; ++b)
        next.coeff[static_cast<std::size_t>(a + b)] =
            next.coeff[static_cast<std::size_t>(a + b)] +
            power.coeff[static_cast<std::size_t>(a)] * u.coeff[static_cast<std::size_t>(b)];
    power = next;
    Rational sign = (k % 2 == 1) ? Rational(1, static_cast<unsigned long>(k))
                                 : Rational(-1, static_cast<unsigned long>(k));
    for (long t = 1; t <= y.order; ++t)
      acc.coeff[static_cast<std::size_t>(t)] =
          acc.coeff[static_cast<std::size_t>(t)] +
          ring_scale(power.coeff[static_cast<std::size_t>(t)], sign);
  }
  acc.coeff[0] = one;  // convention: unit head, matching phi_transform output
  return acc;
}

}  // namespace qpbw
