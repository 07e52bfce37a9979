#include "qpbw/gram.hpp"

#include <numeric>
#include <stdexcept>

#include "qpbw/qcombinatorics.hpp"

namespace qpbw {

LaurentPoly delta_closed(const CartanData& data, long r) {
  if (r < 1) throw std::invalid_argument("delta_closed: r must be positive");
  long n = data.rank;
  switch (data.type) {
    case TypeLabel::A: return q_int(n + 1, r);
    case TypeLabel::B: return q_int(2, (2 * n - 1) * r);
    case TypeLabel::C: return q_int(2, (n + 1) * r);
    case TypeLabel::D: return q_int(2, (n - 1) * r) * q_int(2, r);
    case TypeLabel::E:
      if (n == 6) return q_int(3, r) * (q_int(2, 4 * r) - LaurentPoly::one());
      if (n == 7) return q_int(2, r) * (q_int(2, 6 * r) - LaurentPoly::one());
      return q_int(2, 8 * r) + q_int(2, 6 * r) - q_int(2, 2 * r) - LaurentPoly::one();
    case TypeLabel::F: return q_int(2, 6 * r) - LaurentPoly::one();
    case TypeLabel::G:
      return q_int(3, r) *
             (q_int(2, 10 * r) + q_int(2, 8 * r) - q_int(2, 2 * r) - LaurentPoly::one());
  }
  throw std::logic_error("unreachable");
}

namespace {

// Bareiss fraction-free determinant of a LaurentPoly matrix.
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  LaurentPoly prev = LaurentPoly::one();
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return LaurentPoly::zero();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto quo = num.divided_exactly_by(prev);
        if (!quo) throw std::logic_error("Bareiss: non-exact division");
        m[i][j] = *quo;
      }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::vector<std::vector<LaurentPoly>> q_cartan_matrix(const CartanData& data, long r) {
  long n = data.rank;
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    m[static_cast<std::size_t>(i - 1)].reserve(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j)
      m[static_cast<std::size_t>(i - 1)].push_back(q_int(data.a[i][j], data.d[i] * r));
  }
  return m;
}

}  // namespace

LaurentPoly delta_det(const CartanData& data, long r) {
  if (r < 1) throw std::invalid_argument("delta_det: r must be positive");
  return bareiss_det(q_cartan_matrix(data, r));
}

DeltaTableDiagnostic delta_table_check(const CartanData& data, long r) {
  DeltaTableDiagnostic d;
  d.determinant = delta_det(data, r);
  d.closed_form = delta_closed(data, r);
  if (d.determinant == d.closed_form) {
    d.matches = true;
    d.sign = 1;
  } else if (d.determinant == -d.closed_form) {
    d.matches = true;
    d.sign = -1;
  }
  return d;
}

GramMatrix gram_imaginary(const CartanData& data, long r, long s) {
  if (r < 1 || s < 1) throw std::invalid_argument("gram_imaginary: r, s must be positive");
  long n = data.rank;
  GramMatrix g;
  g.r = r;
  g.source = GramMatrix::Source::ImaginaryPairing;
  g.entries.assign(static_cast<std::size_t>(n),
                   std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc::zero()));
  if (r != s) return g;
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      int osign = data.o[static_cast<std::size_t>(i)] * data.o[static_cast<std::size_t>(j)];
      Rational sign((r % 2 == 0 || osign == 1) ? 1 : -1);
      LaurentPoly num = q_int(r * data.a[i][j], data.d[i]).scaled(sign);
      LaurentPoly den =
          (LaurentPoly::term(-data.d[j]) - LaurentPoly::term(data.d[j])).scaled(Rational(r));
      g.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          RatFunc(num, den);
    }
  return g;
}

RatFunc rat_matrix_det(const RatMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<LaurentPoly>> num(n, std::vector<LaurentPoly>(n));
  RatFunc scale = RatFunc::one();
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly row_den = LaurentPoly::one();
    for (std::size_t j = 0; j < n; ++j) row_den = row_den * m[i][j].den();
    for (std::size_t j = 0; j < n; ++j) {
      auto quo = (m[i][j].num() * row_den).divided_exactly_by(m[i][j].den());
      if (!quo) throw std::logic_error("rat_matrix_det: clearing failed");
      num[i][j] = *quo;
    }
    scale = scale * RatFunc(LaurentPoly::one(), row_den);
  }
  return RatFunc(bareiss_det(std::move(num))) * scale;
}

RatMatrix rat_matrix_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size();
  RatMatrix c(n, std::vector<RatFunc>(n, RatFunc::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool rat_matrix_is_identity(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!(i == j ? m[i][j].is_one() : m[i][j].is_zero())) return false;
  return true;
}

RatMatrix rat_matrix_inverse(const RatMatrix& m) {
  std::size_t n = m.size();
  RatFunc det = rat_matrix_det(m);
  if (det.is_zero()) throw std::domain_error("matrix inverse: singular matrix");
  RatMatrix inv(n, std::vector<RatFunc>(n, RatFunc::zero()));
  if (n == 1) {
    inv[0][0] = det.inverse();
    return inv;
  }
  // adjugate via cofactor determinants, each one fraction-free; n <= 8 here
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix minor(n - 1, std::vector<RatFunc>(n - 1, RatFunc::zero()));
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc] = m[r][c];
          ++cc;
        }
        ++rr;
      }
      RatFunc cof = rat_matrix_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[j][i] = cof / det;
    }
  return inv;
}

DualityReport m_matrix_and_dual(const CartanData& data, long r) {
  if (r < 1) throw std::invalid_argument("m_matrix_and_dual: r must be positive");
  long n = data.rank;
  DualityReport rep;
  rep.m.r = r;
  rep.m.source = GramMatrix::Source::DualityNormalized;
  rep.m.entries.assign(static_cast<std::size_t>(n),
                       std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc::zero()));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      int osign = data.o[static_cast<std::size_t>(i)] * data.o[static_cast<std::size_t>(j)];
      Rational sign((r % 2 == 0 || osign == 1) ? 1 : -1);
      rep.m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          RatFunc(q_int(data.a[i][j], data.d[i] * r).scaled(sign));
    }
  RatFunc det = rat_matrix_det(rep.m.entries);
  if (det.is_zero()) throw std::domain_error("M_r is singular");
  if (!det.is_polynomial()) throw std::logic_error("M_r determinant not polynomial");
  rep.det = det.num();
  LaurentPoly delta = delta_det(data, r);
  rep.det_matches_delta = (rep.det == delta) || (rep.det == -delta);
  rep.mu = rat_matrix_inverse(rep.m.entries);
  rep.orthonormal = rat_matrix_is_identity(rat_matrix_mul(rep.m.entries, rep.mu));
  return rep;
}

RatFunc pair_monomials(const CartanData& data, const std::vector<MonomialFactor>& factors,
                       PairNormalization norm, const std::optional<ImDiag>& imdiag) {
  RatFunc acc = RatFunc::one();
  for (const auto& f : factors) {
    if (f.exp_left != f.exp_right) return RatFunc::zero();
    unsigned long n = f.exp_left;
    if (n == 0) continue;
    long choose2 = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
    if (f.root.kind == RootKind::Real) {
      long da = q_alpha_exponent(data, f.root);
      RatFunc qpow = RatFunc::q_power(da * choose2);
      if (norm == PairNormalization::DividedDual) {
        acc = acc * qpow;
      } else {
        LaurentPoly qfact = q_factorial(n, da);
        LaurentPoly denom = (LaurentPoly::term(-da) - LaurentPoly::term(da)).pow(n);
        acc = acc * qpow * RatFunc(qfact, denom);
      }
    } else {
      long r = delta_level(data, f.root.coords);
      RatFunc diag = RatFunc::one();
      if (imdiag) {
        const auto& table = *imdiag;
        std::size_t ri = static_cast<std::size_t>(r - 1);
        std::size_t ii = static_cast<std::size_t>(f.root.mult_index - 1);
        if (ri >= table.size() || ii >= table[ri].size())
          throw std::invalid_argument("pair_monomials: imdiag table too small");
        diag = table[ri][ii];
      }
      RatFunc diag_pow = diag.pow(static_cast<long>(n));
      if (norm == PairNormalization::DividedDual) {
        acc = acc * diag_pow;
      } else {
        Rational fact(1);
        for (unsigned long t = 2; t <= n; ++t) fact *= Rational(static_cast<long>(t));
        acc = acc * diag_pow.scaled(fact);
      }
    }
  }
  return acc;
}

RatFunc pair_toral(const CartanData& data, const LatticeVec& lambda, const LatticeVec& mu) {
  return RatFunc::q_power(-bilinear(data, lambda, mu));
}

bool is_admissible_order(const CartanData& data, unsigned long ell) {
  if (ell == 1) return true;
  if (ell % 2 == 0) return false;
  if (data.type == TypeLabel::A &&
      std::gcd(ell, static_cast<unsigned long>(data.rank + 1)) != 1)
    return false;
  if ((data.type == TypeLabel::E && data.rank == 6) || data.type == TypeLabel::G)
    if (ell % 3 == 0) return false;
  return true;
}

std::vector<unsigned long> admissible_orders(const CartanData& data, unsigned long bound) {
  std::vector<unsigned long> out;
  for (unsigned long ell = 1; ell <= bound; ++ell)
    if (is_admissible_order(data, ell)) out.push_back(ell);
  return out;
}

NonvanishingReport check_delta_nonvanishing(const CartanData& data, unsigned long ell,
                                            long r_max) {
  NonvanishingReport rep;
  rep.type = data.type_string();
  rep.ell = ell;
  rep.checked_r = r_max;
  bool admissible = is_admissible_order(data, ell);
  for (long r = 1; r <= r_max; ++r) {
    if (rep.all_nonzero && eval_at_root_of_unity(delta_det(data, r), ell).is_zero()) {
      rep.all_nonzero = false;
      rep.counterexample_r = r;
    }
    if (rep.closed_all_nonzero &&
        eval_at_root_of_unity(delta_closed(data, r), ell).is_zero()) {
      rep.closed_all_nonzero = false;
      rep.closed_counterexample_r = r;
    }
  }
  if (admissible && !rep.all_nonzero)
    throw std::logic_error("Delta_" + std::to_string(*rep.counterexample_r) +
                           " vanishes at admissible order " + std::to_string(ell) +
                           " for type " + rep.type);
  return rep;
}

}  // namespace qpbw
