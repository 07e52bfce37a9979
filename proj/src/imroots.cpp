#include "qpbw/imroots.hpp"

#include <stdexcept>

#include "qpbw/qcombinatorics.hpp"

namespace qpbw {

namespace {

RatFunc qi_power(long d_i, long e) { return RatFunc::q_power(d_i * e); }

// q_i - q_i^{-1}
RatFunc qi_minus_inv(long d_i) {
  return RatFunc(LaurentPoly::term(d_i) - LaurentPoly::term(-d_i));
}

void require_positive(long d_i, long order) {
  if (d_i < 1) throw std::invalid_argument("d_i must be positive");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
}

}  // namespace

std::vector<ImPoly> irf_E(long d_i, long order) {
  require_positive(d_i, order);
  RatFunc c = qi_minus_inv(d_i);
  SeriesVec<ImPoly> y;
  y.order = order;
  y.coeff.assign(static_cast<std::size_t>(order + 1), ImPoly());
  y.coeff[0] = ImPoly::one();
  for (long s = 1; s <= order; ++s)
    y.coeff[static_cast<std::size_t>(s)] =
        ImPoly::generator(static_cast<unsigned>(s)).scaled(-c);
  SeriesVec<ImPoly> x = phi_transform(y);
  std::vector<ImPoly> out(static_cast<std::size_t>(order + 1));
  out[0] = ImPoly::zero();
  RatFunc cinv = c.inverse();
  for (long r = 1; r <= order; ++r)
    out[static_cast<std::size_t>(r)] = x.coeff[static_cast<std::size_t>(r)].scaled(cinv);
  return out;
}

std::vector<ImPoly> irf_Edot(long d_i, long order) {
  require_positive(d_i, order);
  std::vector<ImPoly> dot(static_cast<std::size_t>(order + 1));
  dot[0] = ImPoly::one();
  for (long r = 1; r <= order; ++r) {
    ImPoly acc;
    for (long s = 1; s <= r; ++s)
      acc += ImPoly::generator(static_cast<unsigned>(s)) * dot[static_cast<std::size_t>(r - s)];
    RatFunc factor = qi_power(d_i, r) / RatFunc(q_int(r, d_i));
    dot[static_cast<std::size_t>(r)] = acc.scaled(factor);
  }
  return dot;
}

std::vector<ImPoly> irf_Edot_from_E(long d_i, long order) {
  require_positive(d_i, order);
  std::vector<ImPoly> e = irf_E(d_i, order);
  std::vector<ImPoly> dot(static_cast<std::size_t>(order + 1));
  dot[0] = ImPoly::one();
  for (long r = 1; r <= order; ++r) {
    ImPoly acc;
    for (long s = 1; s <= r; ++s) {
      RatFunc factor = qi_power(d_i, s) * RatFunc(Rational(s)) / RatFunc(q_int(s, d_i));
      acc += (e[static_cast<std::size_t>(s)] * dot[static_cast<std::size_t>(r - s)]).scaled(factor);
    }
    dot[static_cast<std::size_t>(r)] = acc.scaled(Rational(-1, static_cast<unsigned long>(r)));
  }
  return dot;
}

std::vector<ImPoly> irf_Ehat(long d_i, long order) {
  std::vector<ImPoly> e = irf_E(d_i, order);
  std::vector<ImPoly> hat(e.size());
  hat[0] = ImPoly::zero();
  for (long r = 1; r <= order; ++r)
    hat[static_cast<std::size_t>(r)] =
        e[static_cast<std::size_t>(r)].scaled(RatFunc(Rational(r)) / RatFunc(q_int(r, d_i)));
  return hat;
}

ImPoly irf_divided_power_hat(long d_i, long r, unsigned long k) {
  if (k == 0) return ImPoly::one();
  std::vector<ImPoly> hat = irf_Ehat(d_i, r);
  Rational kfact(1);
  for (unsigned long j = 2; j <= k; ++j) kfact *= Rational(static_cast<long>(j));
  return hat[static_cast<std::size_t>(r)].pow(k).scaled(Rational(1) / kfact);
}

std::vector<ImPoly> irf_Edot_bracket(long d_i, long k, long order) {
  require_positive(d_i, order);
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<ImPoly> e = irf_E(d_i, order * k);
  std::vector<ImPoly> out(static_cast<std::size_t>(order + 1));
  out[0] = ImPoly::one();
  for (long r = 1; r <= order; ++r) {
    ImPoly acc;
    for (long s = 1; s <= r; ++s) {
      RatFunc factor =
          qi_power(d_i, k * s) * RatFunc(Rational(s * k)) / RatFunc(q_int(s * k, d_i));
      acc +=
          (e[static_cast<std::size_t>(s * k)] * out[static_cast<std::size_t>(r - s)]).scaled(factor);
    }
    out[static_cast<std::size_t>(r)] = acc.scaled(Rational(-1, static_cast<unsigned long>(r)));
  }
  return out;
}

std::vector<ImPoly> irf_Edot_bracket_psi(long d_i, long k, long order) {
  require_positive(d_i, order);
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<ImPoly> hat = irf_Ehat(d_i, order * k);
  SeriesVec<ImPoly> x;
  x.order = order;
  x.coeff.assign(static_cast<std::size_t>(order + 1), ImPoly());
  x.coeff[0] = ImPoly::one();
  for (long r = 1; r <= order; ++r) {
    RatFunc factor = -qi_power(d_i, k * r).scaled(Rational(1, static_cast<unsigned long>(r)));
    x.coeff[static_cast<std::size_t>(r)] = hat[static_cast<std::size_t>(r * k)].scaled(factor);
  }
  SeriesVec<ImPoly> y = psi_transform(x);
  return y.coeff;
}

std::vector<ImPoly> irf_Edot_angle(long d_i, long k, long order) {
  require_positive(d_i, order);
  if (k < 1) throw std::invalid_argument("k must be positive");
  RatFunc qi = RatFunc::q_power(d_i);
  RatFunc qi_m2 = RatFunc::q_power(-2 * d_i);
  std::vector<ImPoly> out(static_cast<std::size_t>(order + 1));
  out[0] = ImPoly::one();
  for (long r = 1; r <= order; ++r) {
    ImPoly acc;
    for (long s = 1; s <= r; ++s)
      acc += ImPoly::generator(static_cast<unsigned>(s * k)) * out[static_cast<std::size_t>(r - s)];
    RatFunc factor = qi / paren_q(static_cast<unsigned long>(r), qi_m2);
    out[static_cast<std::size_t>(r)] = acc.scaled(factor);
  }
  return out;
}

std::vector<ImPoly> classical_Lambda(long k, long order) {
  if (k < 1 || order < 1) throw std::invalid_argument("k and order must be positive");
  SeriesVec<ImPoly> x;
  x.order = order;
  x.coeff.assign(static_cast<std::size_t>(order + 1), ImPoly());
  x.coeff[0] = ImPoly::one();
  for (long r = 1; r <= order; ++r)
    x.coeff[static_cast<std::size_t>(r)] =
        ImPoly::generator(static_cast<unsigned>(r * k)).scaled(Rational(1, static_cast<unsigned long>(r)));
  SeriesVec<ImPoly> y = psi_transform(x);
  return y.coeff;
}

std::vector<ImPoly> specialize_family_q1(const std::vector<ImPoly>& family) {
  std::vector<ImPoly> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) out[i] = family[i].specialize_q1();
  return out;
}

SeriesRelationReport check_series_relation(long d_i, long k, long order) {
  SeriesRelationReport report;
  std::vector<ImPoly> x = irf_Edot_angle(d_i, k, order);
  RatFunc c = qi_minus_inv(d_i);
  for (long r = 0; r <= order; ++r) {
    // X(q_i^{-2} z): coefficient r picks up q_i^{-2r}
    ImPoly lhs = x[static_cast<std::size_t>(r)].scaled(RatFunc::q_power(-2 * d_i * r));
    ImPoly rhs = x[static_cast<std::size_t>(r)];
    for (long s = 1; s <= r; ++s)
      rhs -= (ImPoly::generator(static_cast<unsigned>(s * k)) *
              x[static_cast<std::size_t>(r - s)])
                 .scaled(c);
    if (lhs != rhs) {
      report.holds = false;
      report.first_failing_degree = r;
      report.lhs_at_failure = lhs;
      report.rhs_at_failure = rhs;
      return report;
    }
  }
  return report;
}

}  // namespace qpbw
