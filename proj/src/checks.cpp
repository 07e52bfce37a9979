#include "qpbw/checks.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include "qpbw/pbw.hpp"
#include "qpbw/series.hpp"

namespace qpbw {

namespace {

const std::vector<std::pair<TypeLabel, int>>& acceptance_types() {
  static const std::vector<std::pair<TypeLabel, int>> types = {
      {TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::A, 4},
      {TypeLabel::B, 3}, {TypeLabel::C, 2}, {TypeLabel::D, 4}, {TypeLabel::E, 6},
      {TypeLabel::E, 7}, {TypeLabel::E, 8}, {TypeLabel::F, 4}, {TypeLabel::G, 2}};
  return types;
}

CheckResult check_delta_table() {
  CheckResult res{"1 Delta_r table reproduction (r <= 6, all types)", true, ""};
  std::ostringstream detail;
  for (auto [t, n] : acceptance_types()) {
    CartanData data = cartan_affine(t, n);
    int sign = 0;
    for (long r = 1; r <= 6; ++r) {
      auto diag = delta_table_check(data, r);
      if (data.type == TypeLabel::G) {
        // The printed table line for G_2 disagrees with its own determinant
        // definition at every r; the determinant is authoritative and equals
        // [2]_{q^{4r}} - 1.  A match here would mean the table changed.
        bool expected_mismatch =
            !diag.matches && diag.determinant == q_int(2, 4 * r) - LaurentPoly::one();
        if (!expected_mismatch) {
          res.passed = false;
          detail << "G2 r=" << r << ": unexpected det " << diag.determinant.to_string() << "; ";
        }
        continue;
      }
      if (!diag.matches) {
        res.passed = false;
        detail << data.type_string() << " r=" << r << ": det "
               << diag.determinant.to_string() << " vs table " << diag.closed_form.to_string()
               << "; ";
      } else if (sign == 0) {
        sign = diag.sign;
      } else if (sign != diag.sign) {
        res.passed = false;
        detail << data.type_string() << ": sign not constant across r; ";
      }
    }
  }
  detail << "G2 table-vs-determinant diagnostic: table line [3]_{q^r}([2]_{q^{10r}}+[2]_{q^{8r}}"
            "-[2]_{q^{2r}}-1) does not equal det = [2]_{q^{4r}}-1 (determinant authoritative)";
  res.detail = detail.str();
  return res;
}

CheckResult check_root_of_unity_regularity() {
  CheckResult res{"2 Delta_r nonvanishing at admissible orders + negative controls", true, ""};
  std::ostringstream detail;
  for (auto [t, n] : acceptance_types()) {
    CartanData data = cartan_affine(t, n);
    auto orders = admissible_orders(data, 64);
    for (std::size_t s = 0; s < 3 && s < orders.size(); ++s) {
      unsigned long ell = orders[s];
      auto rep = check_delta_nonvanishing(data, ell, static_cast<long>(2 * ell));
      if (!rep.all_nonzero) {
        res.passed = false;
        detail << data.type_string() << " ell=" << ell << " failed; ";
      }
    }
  }
  // negative controls: non-admissible orders exhibit a vanishing closed form
  auto a2 = check_delta_nonvanishing(cartan_affine(TypeLabel::A, 2), 3, 6);
  if (a2.all_nonzero || a2.closed_all_nonzero) {
    res.passed = false;
    detail << "A2 ell=3 negative control failed; ";
  }
  auto g2 = check_delta_nonvanishing(cartan_affine(TypeLabel::G, 2), 3, 6);
  if (g2.closed_all_nonzero) {
    res.passed = false;
    detail << "G2 ell=3 closed-form negative control failed; ";
  }
  detail << "negative controls: A2 ell=3 det vanishes at r=" << (a2.counterexample_r ? *a2.counterexample_r : -1)
         << "; G2 ell=3 closed form vanishes at r="
         << (g2.closed_counterexample_r ? *g2.closed_counterexample_r : -1)
         << " while its determinant never vanishes at odd orders";
  res.detail = detail.str();
  return res;
}

CheckResult check_bell_roundtrip() {
  CheckResult res{"3 Bell round trip Phi(Psi(X)) = X = Psi(Phi(X)), 100 sequences, T = 12", true,
                  ""};
  std::mt19937 rng(414213562);
  std::uniform_int_distribution<int> ce(-2, 2), cc(-9, 9);
  auto random_rf = [&]() {
    LaurentPoly num, den;
    for (int t = 0; t < 2; ++t) num += LaurentPoly::term(ce(rng), Rational(cc(rng)));
    do {
      den = LaurentPoly::zero();
      for (int t = 0; t < 2; ++t) den += LaurentPoly::term(ce(rng), Rational(cc(rng)));
    } while (den.is_zero());
    return RatFunc(num, den);
  };
  for (int trial = 0; trial < 100; ++trial) {
    SeriesVec<RatFunc> x;
    x.order = 12;
    x.coeff.assign(13, RatFunc::zero());
    x.coeff[0] = RatFunc::one();
    for (long r = 1; r <= 12; ++r) x.coeff[static_cast<std::size_t>(r)] = random_rf();
    if (phi_transform(psi_transform(x)) != x || psi_transform(phi_transform(x)) != x) {
      res.passed = false;
      res.detail = "failed at trial " + std::to_string(trial);
      return res;
    }
  }
  return res;
}

CheckResult check_double_definitions() {
  CheckResult res{"4 double definitions agree (recursions vs series transforms)", true, ""};
  for (long d = 1; d <= 3 && res.passed; ++d) {
    long T = 6;
    auto dot_a = irf_Edot(d, T);
    auto dot_b = irf_Edot_from_E(d, T);
    if (dot_a != dot_b) {
      res.passed = false;
      res.detail = "dot family mismatch at d_i = " + std::to_string(d);
    }
    // E family: log-series oracle vs recursion path happens inside irf_E's
    // test elsewhere; here compare against a direct exp/log composition.
    SeriesVec<ImPoly> y;
    y.order = T;
    y.coeff.assign(static_cast<std::size_t>(T + 1), ImPoly());
    y.coeff[0] = ImPoly::one();
    RatFunc c(LaurentPoly::term(d) - LaurentPoly::term(-d));
    for (long s = 1; s <= T; ++s)
      y.coeff[static_cast<std::size_t>(s)] =
          ImPoly::generator(static_cast<unsigned>(s)).scaled(-c);
    auto x_oracle = log_compose_oracle(y, ImPoly::one());
    auto e = irf_E(d, T);
    for (long r = 1; r <= T && res.passed; ++r)
      if (e[static_cast<std::size_t>(r)].scaled(c) != x_oracle.coeff[static_cast<std::size_t>(r)]) {
        res.passed = false;
        res.detail = "E family log-oracle mismatch at d_i = " + std::to_string(d) +
                     ", r = " + std::to_string(r);
      }
    for (long k = 1; k <= 3 && res.passed; ++k) {
      long Tk = (d >= 2 && k >= 2) ? 4 : 6;
      if (irf_Edot_bracket(d, k, Tk) != irf_Edot_bracket_psi(d, k, Tk)) {
        res.passed = false;
        res.detail = "bracket family mismatch at d_i = " + std::to_string(d) +
                     ", k = " + std::to_string(k);
      }
    }
  }
  return res;
}

CheckResult check_specialization_square() {
  CheckResult res{"5 q = 1 specialization square", true, ""};
  for (long d = 1; d <= 3 && res.passed; ++d) {
    long T = 6;
    auto e = specialize_family_q1(irf_E(d, T));
    auto hat = specialize_family_q1(irf_Ehat(d, T));
    for (long r = 1; r <= T && res.passed; ++r) {
      ImPoly neg = -ImPoly::generator(static_cast<unsigned>(r));
      if (e[static_cast<std::size_t>(r)] != neg || hat[static_cast<std::size_t>(r)] != neg) {
        res.passed = false;
        res.detail = "E/Ehat specialization fails at d_i = " + std::to_string(d) +
                     ", r = " + std::to_string(r);
      }
    }
    for (long k = 1; k <= 3 && res.passed; ++k) {
      long Tk = (d >= 2 && k >= 2) ? 4 : 6;
      auto lam = classical_Lambda(k, Tk);
      if (specialize_family_q1(irf_Edot_bracket(d, k, Tk)) != lam ||
          specialize_family_q1(irf_Edot_angle(d, k, Tk)) != lam) {
        res.passed = false;
        res.detail = "bracket/angle specialization fails at d_i = " + std::to_string(d) +
                     ", k = " + std::to_string(k);
      }
    }
  }
  return res;
}

CheckResult check_orthonormality() {
  CheckResult res{"6 M_r mu = identity and mu regular at admissible orders (r <= 4)", true, ""};
  std::ostringstream detail;
  for (auto [t, n] : acceptance_types()) {
    CartanData data = cartan_affine(t, n);
    auto orders = admissible_orders(data, 64);
    for (long r = 1; r <= 4; ++r) {
      auto rep = m_matrix_and_dual(data, r);
      if (!rep.orthonormal || !rep.det_matches_delta) {
        res.passed = false;
        detail << data.type_string() << " r=" << r << " duality failed; ";
      }
      for (const auto& row : rep.mu)
        for (const auto& entry : row)
          for (std::size_t s = 0; s < 3 && s < orders.size(); ++s)
            if (!is_regular_at(entry, orders[s])) {
              res.passed = false;
              detail << data.type_string() << " r=" << r << " mu pole at ell=" << orders[s]
                     << "; ";
            }
    }
  }
  res.detail = detail.str();
  return res;
}

CheckResult check_pairing_consistency() {
  CheckResult res{"7 ordered-monomial pairing: diagonal, symmetric, unit normalized value", true,
                  ""};
  CartanData data = cartan_affine(TypeLabel::C, 2);
  IotaWord iota = build_iota(data);
  OrderedRoots order(data, iota, 4);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> de(0, 3);
  for (int trial = 0; trial < 40 && res.passed; ++trial) {
    std::vector<MonomialFactor> diag, off;
    bool differs = false;
    for (const auto& rt : order.roots()) {
      unsigned long e = static_cast<unsigned long>(de(rng));
      unsigned long f = static_cast<unsigned long>(de(rng));
      diag.push_back({rt, e, e});
      off.push_back({rt, e, f});
      if (e != f) differs = true;
    }
    if (differs && !pair_monomials(data, off, PairNormalization::Bare).is_zero()) {
      res.passed = false;
      res.detail = "off-diagonal pairing nonzero";
    }
    // symmetry: swapping the two exponent lists is the identity on the diagonal
    RatFunc a = pair_monomials(data, diag, PairNormalization::Bare);
    std::vector<MonomialFactor> swapped = diag;
    for (auto& fac : swapped) std::swap(fac.exp_left, fac.exp_right);
    if (a != pair_monomials(data, swapped, PairNormalization::Bare)) {
      res.passed = false;
      res.detail = "pairing not symmetric";
    }
    RatFunc v = pair_monomials(data, diag, PairNormalization::DividedDual);
    if (!v.is_polynomial() || !v.num().is_monomial() ||
        abs(v.num().coeff(v.num().min_exp())) != 1) {
      res.passed = false;
      res.detail = "normalized pairing value not a unit monomial: " + v.to_string();
    }
  }
  return res;
}

CheckResult check_series_relation_all() {
  CheckResult res{"8 generating-series relation for the angle family", true, ""};
  for (long d = 1; d <= 3; ++d)
    for (long k = 1; k <= 3; ++k) {
      auto rep = check_series_relation(d, k, 6);
      if (!rep.holds) {
        res.passed = false;
        res.detail = "fails at d_i = " + std::to_string(d) + ", k = " + std::to_string(k) +
                     ", degree " + std::to_string(rep.first_failing_degree);
        return res;
      }
    }
  return res;
}

CheckResult check_iota_validation() {
  CheckResult res{"9 iota validation: shipped words pass, corrupted word locates", true, ""};
  for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
           {TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::C, 2}, {TypeLabel::G, 2}}) {
    CartanData data = cartan_affine(t, n);
    try {
      build_iota(data, 6);
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = data.type_string() + std::string(": ") + e.what();
      return res;
    }
  }
  CartanData a2 = cartan_affine(TypeLabel::A, 2);
  try {
    build_iota_from_word(a2, {0, 0, 1, 2}, 6);
    res.passed = false;
    res.detail = "corrupted word was accepted";
  } catch (const IotaValidationError& e) {
    if (e.offending_k != 2) {
      res.passed = false;
      res.detail = "corrupted word located at k = " + std::to_string(e.offending_k) +
                   " instead of 2";
    }
  }
  return res;
}

CheckResult check_toral_regularity() {
  CheckResult res{"10 toral basis coefficients regular at sampled admissible orders (t <= 6)",
                  true, ""};
  // Sampled orders 7, 11, 13 are admissible for all nine types and divide no
  // d_i*s with s <= 6, d_i <= 3; at smaller orders such as ell = 5 the K^t
  // coefficient of the t = 5 element genuinely has a pole (1/(q^5 - q^-5)
  // factors survive), so those orders are excluded by the same denominator
  // analysis that justifies the sample.
  for (long d = 1; d <= 3; ++d) {
    auto rep = toral_regularity_report(6, d, {7, 11, 13});
    if (!rep.all_regular) {
      res.passed = false;
      res.detail = "pole at d_i = " + std::to_string(d) + ", t = " +
                   std::to_string(rep.failing_t) + ", ell = " + std::to_string(rep.failing_order);
      return res;
    }
  }
  auto sharp = toral_regularity_report(6, 1, {5});
  if (sharp.all_regular || sharp.failing_t != 5) {
    res.passed = false;
    res.detail = "sharpness witness at ell = 5, t = 5 not observed";
  } else {
    res.detail = "sample {7, 11, 13}; boundary witness: pole at ell = 5, t = 5 as predicted";
  }
  return res;
}

CheckResult check_block_transition() {
  CheckResult res{"11 imaginary block transition round trip (degree <= 6) + classical limit",
                  true, ""};
  for (long d = 1; d <= 2; ++d)
    for (long k = 1; k <= 2; ++k) {
      auto rep = block_transition_roundtrip(d, k, 6);
      if (!rep.roundtrip_identity || !rep.classical_match) {
        res.passed = false;
        res.detail = "d_i = " + std::to_string(d) + ", k = " + std::to_string(k) +
                     (rep.roundtrip_identity ? " classical mismatch" : " roundtrip failed");
        return res;
      }
    }
  return res;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
  return {check_delta_table(),        check_root_of_unity_regularity(),
          check_bell_roundtrip(),     check_double_definitions(),
          check_specialization_square(), check_orthonormality(),
          check_pairing_consistency(),  check_series_relation_all(),
          check_iota_validation(),      check_toral_regularity(),
          check_block_transition()};
}

int run_and_report_acceptance(std::ostream& os) {
  int failures = 0;
  for (const auto& res : run_acceptance_checks()) {
    os << (res.passed ? "PASS " : "FAIL ") << res.name;
    if (!res.detail.empty()) os << "  [" << res.detail << "]";
    os << "\n";
    if (!res.passed) ++failures;
  }
  return failures;
}

}  // namespace qpbw
