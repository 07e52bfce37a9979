#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpbw/gram.hpp"

using namespace qpbw;

namespace {

const std::vector<std::pair<TypeLabel, int>> kAllTypes = {
    {TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::A, 4},
    {TypeLabel::B, 3}, {TypeLabel::C, 2}, {TypeLabel::D, 4}, {TypeLabel::E, 6},
    {TypeLabel::E, 7}, {TypeLabel::E, 8}, {TypeLabel::F, 4}, {TypeLabel::G, 2}};

}  // namespace

TEST_CASE("delta_det small cases") {
  CartanData a1 = cartan_affine(TypeLabel::A, 1);
  CHECK(delta_det(a1, 1) == q_int(2, 1));
  CartanData a2 = cartan_affine(TypeLabel::A, 2);
  CHECK(delta_det(a2, 1) == q_int(3, 1));
  CHECK(delta_closed(a2, 3) == q_int(3, 3));
}

TEST_CASE("delta table reproduction with per-type sign; G_2 line is the known exception") {
  for (auto [t, n] : kAllTypes) {
    CartanData d = cartan_affine(t, n);
    if (t == TypeLabel::G) {
      // the printed table line does not equal the determinant for G_2;
      // the determinant itself is [2]_{q^{4r}} - 1
      for (long r = 1; r <= 6; ++r) {
        auto diag = delta_table_check(d, r);
        CHECK(!diag.matches);
        CHECK(diag.determinant == q_int(2, 4 * r) - LaurentPoly::one());
      }
      continue;
    }
    int sign = 0;
    for (long r = 1; r <= 6; ++r) {
      auto diag = delta_table_check(d, r);
      CHECK(diag.matches);
      if (r == 1)
        sign = diag.sign;
      else
        CHECK(diag.sign == sign);  // per-type sign constant
    }
    CHECK(sign == 1);
  }
}

TEST_CASE("gram_imaginary") {
  CartanData a1 = cartan_affine(TypeLabel::A, 1);
  auto off = gram_imaginary(a1, 2, 3);
  CHECK(off.entries[0][0].is_zero());
  auto g = gram_imaginary(a1, 1, 1);
  // [2]_q / (q^{-1} - q)
  CHECK(g.entries[0][0] ==
        RatFunc(q_int(2, 1), LaurentPoly::term(-1) - LaurentPoly::term(1)));
  // zero Cartan entries give zero entries
  CartanData a3 = cartan_affine(TypeLabel::A, 3);
  auto g3 = gram_imaginary(a3, 2, 2);
  CHECK(g3.entries[0][2].is_zero());
  // relation to M_r: gram(i,j) = M_r(i,j) * [r]_{q_i} / (r (q_j^{-1} - q_j))
  for (auto [t, n] : {std::pair{TypeLabel::A, 2}, {TypeLabel::C, 2}, {TypeLabel::G, 2}}) {
    CartanData d = cartan_affine(t, n);
    for (long r = 1; r <= 6; ++r) {
      auto gram = gram_imaginary(d, r, r);
      auto dual = m_matrix_and_dual(d, r);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          RatFunc lhs = gram.entries[i - 1][j - 1];
          RatFunc scale = RatFunc(q_int(r, d.d[i]),
                                  (LaurentPoly::term(-d.d[j]) - LaurentPoly::term(d.d[j]))
                                      .scaled(Rational(r)));
          CHECK(lhs == dual.m.entries[i - 1][j - 1] * scale);
        }
    }
  }
}

TEST_CASE("M_r duality: examples") {
  CartanData a1 = cartan_affine(TypeLabel::A, 1);
  for (long r = 1; r <= 4; ++r) {
    auto rep = m_matrix_and_dual(a1, r);
    CHECK(rep.mu[0][0] == RatFunc(LaurentPoly::one(), q_int(2, r)));
  }
  CartanData a2 = cartan_affine(TypeLabel::A, 2);
  auto rep = m_matrix_and_dual(a2, 1);
  CHECK(rep.m.entries[0][0] == RatFunc(q_int(2, 1)));
  CHECK(rep.m.entries[0][1] == RatFunc::one());  // (o(1)o(2))^1 [(-1)]_q = (-1)(-1) = 1
  CHECK(rep.det == q_int(3, 1));
}

TEST_CASE("M_r inverse is exact for every type, small r") {
  for (auto [t, n] : kAllTypes) {
    CartanData d = cartan_affine(t, n);
    long rmax = (n >= 6) ? 2 : 4;  // big E types at r <= 4 run in acceptance
    for (long r = 1; r <= rmax; ++r) {
      auto rep = m_matrix_and_dual(d, r);
      CHECK(rep.orthonormal);
      CHECK(rep.det_matches_delta);
    }
  }
}

TEST_CASE("mu entries regular at admissible orders, with cyclotomic factor audit") {
  for (auto [t, n] : {std::pair{TypeLabel::A, 2}, {TypeLabel::C, 2}, {TypeLabel::G, 2},
                      {TypeLabel::B, 3}}) {
    CartanData d = cartan_affine(t, n);
    auto orders = admissible_orders(d, 30);
    std::vector<unsigned long> sample(orders.begin(),
                                      orders.begin() + std::min<std::size_t>(3, orders.size()));
    for (long r = 1; r <= 3; ++r) {
      auto rep = m_matrix_and_dual(d, r);
      LaurentPoly delta = delta_det(d, r);
      for (const auto& row : rep.mu)
        for (const auto& entry : row) {
          for (unsigned long ell : sample) CHECK(is_regular_at(entry, ell));
          // every cyclotomic factor of the denominator divides Delta_r
          if (!entry.is_zero())
            for (unsigned long m : cyclotomic_factors(entry.den()))
              CHECK(eval_at_root_of_unity(delta, m).is_zero());
        }
    }
  }
}

TEST_CASE("pair_monomials") {
  CartanData a1 = cartan_affine(TypeLabel::A, 1);
  Root alpha = real_root({0, 1});
  // mismatch anywhere gives zero
  CHECK(pair_monomials(a1, {{alpha, 2, 3}}, PairNormalization::Bare).is_zero());
  // single real root, n = m = 2: q_a [2]_{q_a}! / (q_a^{-1} - q_a)^2
  RatFunc v = pair_monomials(a1, {{alpha, 2, 2}}, PairNormalization::Bare);
  LaurentPoly den = (LaurentPoly::term(-1) - LaurentPoly::term(1)).pow(2);
  CHECK(v == RatFunc(LaurentPoly::q() * q_int(2, 1), den));
  // symmetry under exchanging the two sides
  CHECK(v == pair_monomials(a1, {{alpha, 2, 2}}, PairNormalization::Bare));
  // divided-power normalized value with unit imdiag is a pure power of q
  CartanData c2 = cartan_affine(TypeLabel::C, 2);
  IotaWord iota = build_iota(c2);
  OrderedRoots order(c2, iota, 3);
  std::vector<MonomialFactor> factors;
  unsigned long e = 1;
  for (const auto& rt : order.roots()) {
    factors.push_back({rt, e % 4, e % 4});
    ++e;
  }
  RatFunc val = pair_monomials(c2, factors, PairNormalization::DividedDual);
  CHECK(val.is_polynomial());
  CHECK(val.num().is_monomial());
  bool unit_coeff = val.num().coeff(val.num().min_exp()) == 1 ||
                    val.num().coeff(val.num().min_exp()) == -1;
  CHECK(unit_coeff);
  // imaginary factors with nontrivial imdiag in bare mode pick up n! diag^n
  ImDiag diag(3, std::vector<RatFunc>(2, RatFunc::q_power(2)));
  Root im = imaginary_root(c2, 2, 1);
  RatFunc bare = pair_monomials(c2, {{im, 3, 3}}, PairNormalization::Bare, diag);
  CHECK(bare == RatFunc::q_power(6).scaled(Rational(6)));
}

TEST_CASE("pair_toral") {
  for (auto [t, n] : {std::pair{TypeLabel::A, 2}, {TypeLabel::G, 2}}) {
    CartanData d = cartan_affine(t, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(pair_toral(d, d.alpha(i), d.alpha(j)) ==
              RatFunc::q_power(-d.d[i] * d.a[i][j]));
    LatticeVec zero;
    zero.coords.assign(d.marks.size(), 0);
    LatticeVec mu = d.alpha(1);
    CHECK(pair_toral(d, zero, mu).is_one());
    CHECK(pair_toral(d, d.alpha_inf(), d.delta()) == RatFunc::q_power(-1));
  }
}

TEST_CASE("admissible orders") {
  CHECK(admissible_orders(cartan_affine(TypeLabel::A, 2), 10) ==
        std::vector<unsigned long>{1, 5, 7});
  CHECK(admissible_orders(cartan_affine(TypeLabel::A, 1), 7) ==
        std::vector<unsigned long>{1, 3, 5, 7});
  CHECK(admissible_orders(cartan_affine(TypeLabel::A, 4), 9) ==
        std::vector<unsigned long>{1, 3, 7, 9});
  CHECK(!is_admissible_order(cartan_affine(TypeLabel::G, 2), 9));
  CHECK(!is_admissible_order(cartan_affine(TypeLabel::E, 6), 3));
  CHECK(is_admissible_order(cartan_affine(TypeLabel::E, 7), 3));
}

TEST_CASE("nonvanishing checks and negative controls") {
  CartanData a2 = cartan_affine(TypeLabel::A, 2);
  auto rep = check_delta_nonvanishing(a2, 5, 8);
  CHECK(rep.all_nonzero);
  // ell = 3 not admissible for A_2: Delta_1 = [3]_q vanishes
  auto neg = check_delta_nonvanishing(a2, 3, 4);
  CHECK(!neg.all_nonzero);
  CHECK(*neg.counterexample_r == 1);
  // G_2 at ell = 3: the closed form vanishes, the determinant does not
  CartanData g2 = cartan_affine(TypeLabel::G, 2);
  auto gneg = check_delta_nonvanishing(g2, 3, 6);
  CHECK(!gneg.closed_all_nonzero);
  CHECK(*gneg.closed_counterexample_r == 1);
  CHECK(gneg.all_nonzero);
}
