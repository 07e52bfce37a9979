#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpbw/cyclotomic.hpp"
#include "qpbw/qcombinatorics.hpp"
#include "qpbw/ratfunc.hpp"

using namespace qpbw;

namespace {

LaurentPoly LP(const std::string& s) { return parse_laurent(s); }

LaurentPoly random_poly(std::mt19937& rng, int max_span = 3, int max_coeff = 9) {
  std::uniform_int_distribution<int> ce(-max_span, max_span), cc(-max_coeff, max_coeff);
  LaurentPoly p;
  for (int t = 0; t < 3; ++t) p += LaurentPoly::term(ce(rng), Rational(cc(rng)));
  return p;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  LaurentPoly den;
  do {
    den = random_poly(rng);
  } while (den.is_zero());
  return RatFunc(random_poly(rng), den);
}

}  // namespace

TEST_CASE("ring basics") {
  CHECK(LP("q+q^-1") * LP("q-q^-1") == LP("q^2-q^-2"));
  RatFunc f(LP("q^3+2*q-7"), LP("q^2+1"));
  CHECK(f / f == RatFunc::one());
  CHECK(RatFunc(LP("q^2-1"), LP("q-1")) == RatFunc(LP("q+1")));
  CHECK_THROWS_AS(f / RatFunc::zero(), std::domain_error);
  CHECK_THROWS_AS(RatFunc(LP("1"), LP("0")), std::domain_error);
}

TEST_CASE("canonical form") {
  // den gets content 1, positive lowest coefficient, min exponent 0
  RatFunc f(LP("2*q^3"), LP("-4*q^2+4*q^4"));
  CHECK(f.den().coeff(f.den().min_exp()) > 0);
  CHECK(f.den().min_exp() == 0);
  CHECK(f == RatFunc(LP("-q"), LP("2-2*q^2")));
  // canonicalization is idempotent
  RatFunc g(f.num(), f.den());
  CHECK(g == f);
  // equality is an equivalence relation on random samples
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    RatFunc a = random_ratfunc(rng);
    RatFunc b = a * RatFunc(LP("q^2-3"), LP("q^2-3"));
    CHECK(a == b);
    CHECK(b == a);
  }
}

TEST_CASE("q_int") {
  CHECK(q_int(1, 1) == LaurentPoly::one());
  CHECK(q_int(2, 1) == LP("q+q^-1"));
  CHECK(q_int(-1, 1) == LP("-1"));
  CHECK(q_int(3, 2) == LP("q^4+1+q^-4"));
  // [s]_{q^d} (q^d - q^-d) = q^{ds} - q^{-ds}
  for (long d = 1; d <= 4; ++d)
    for (long s = -20; s <= 20; ++s)
      CHECK(q_int(s, d) * (LP("q^" + std::to_string(d)) - LP("q^" + std::to_string(-d))) ==
            LaurentPoly::term(d * s) - LaurentPoly::term(-d * s));
}

TEST_CASE("q_binom") {
  CHECK(q_binom(5, 0, 2) == LaurentPoly::one());
  CHECK(q_binom(2, 1, 1) == q_int(2, 1));
  CHECK(q_binom(4, 2, 1) == LP("q^4+q^2+2+q^-2+q^-4"));
  CHECK_THROWS_AS(q_binom(2, 3, 1), std::domain_error);
  // integrality over Z[q, q^-1]
  for (unsigned long m = 0; m <= 10; ++m)
    for (unsigned long n = 0; n <= m; ++n) {
      LaurentPoly b = q_binom(m, n, 1);
      for (const auto& [e, c] : b.terms()) {
        bool integral = (c.get_den() == 1);
        CHECK(integral);
      }
    }
  // Pascal identity [m n] = q^n [m-1 n] + q^{n-m} [m-1 n-1]
  for (unsigned long m = 1; m <= 12; ++m)
    for (unsigned long n = 1; n < m; ++n)
      CHECK(q_binom(m, n, 1) ==
            q_binom(m - 1, n, 1).shifted(static_cast<long>(n)) +
                q_binom(m - 1, n - 1, 1).shifted(static_cast<long>(n) - static_cast<long>(m)));
}

TEST_CASE("q_int multiplicativity [ra]/[r] = [a]_{q^r}") {
  for (long r = 1; r <= 8; ++r)
    for (long a = -4; a <= 4; ++a)
      for (long d = 1; d <= 3; ++d) {
        auto lhs = q_int(r * a, d).divided_exactly_by(q_int(r, d));
        REQUIRE(lhs.has_value());
        CHECK(*lhs == q_int(a, d * r));
      }
}

TEST_CASE("paren_q") {
  CHECK(paren_q(1, RatFunc(LP("q^5-3"))) == RatFunc::one());
  CHECK(paren_q(3, RatFunc(LP("q"))) == RatFunc(LP("q^2+q+1")));
  CHECK(paren_q(2, RatFunc(LP("q^-2"))) == RatFunc(LP("1+q^-2")));
  CHECK(paren_q(5, RatFunc::one()) == RatFunc(5));
}

TEST_CASE("eval at roots of unity") {
  // [2]_q at ell = 3: eps + eps^2 = -1
  CycloElement v = eval_at_root_of_unity(RatFunc(q_int(2, 1)), 3);
  CHECK(v == eval_at_root_of_unity(RatFunc(LP("-1")), 3));
  // [ell]_q vanishes at primitive ell-th roots, ell odd > 1
  for (unsigned long ell : {3ul, 5ul, 7ul, 9ul})
    CHECK(eval_at_root_of_unity(RatFunc(q_int(static_cast<long>(ell), 1)), ell).is_zero());
  // ell = 1 means q = 1
  CHECK(eval_at_root_of_unity(RatFunc(LP("q^4+q-3")), 1) ==
        eval_at_root_of_unity(RatFunc(LP("-1")), 1));
  // pole detection: 1/[3]_q at ell = 3... [3]_q = Phi_3 * unit? [3]_q = q^2+1+q^-2? no:
  // [3]_q = q^2 + 1 + q^-2, vanishes at primitive 12th? check the honest one: 1/(q^2+q+1)
  RatFunc f(LaurentPoly::one(), LP("q^2+q+1"));
  CHECK_THROWS_AS(eval_at_root_of_unity(f, 3), PoleAtRootOfUnity);
  CHECK(!is_regular_at(f, 3));
  CHECK(is_regular_at(f, 5));
  // multiplicativity where both regular
  std::mt19937 rng(11);
  for (int t = 0; t < 25; ++t) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    for (unsigned long ell : {1ul, 3ul, 5ul}) {
      if (!is_regular_at(a, ell) || !is_regular_at(b, ell)) continue;
      CHECK(eval_at_root_of_unity(a * b, ell) ==
            eval_at_root_of_unity(a, ell) * eval_at_root_of_unity(b, ell));
    }
  }
}

TEST_CASE("specialize at q = 1") {
  for (long n = -6; n <= 6; ++n) CHECK(specialize_q1(q_int_rf(n, 1)) == Rational(n));
  CHECK(specialize_q1(RatFunc::q_power(17)) == Rational(1));
  for (unsigned long n = 1; n <= 6; ++n)
    CHECK(specialize_q1(paren_q(n, RatFunc::q_power(-2))) == Rational(static_cast<long>(n)));
  RatFunc pole(LaurentPoly::one(), LP("q^2-2*q+1"));
  CHECK_THROWS_WITH_AS(specialize_q1(pole), doctest::Contains("(q-1)^2"), PoleAtRootOfUnity);
}

TEST_CASE("cyclotomic factor detection") {
  LaurentPoly p = LP("q^2+q+1") * LP("q-1") * LP("q^4");
  auto f = cyclotomic_factors(p);
  CHECK(f == std::vector<unsigned long>{1, 3});
}

TEST_CASE("string round trip") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    LaurentPoly p = random_poly(rng);
    CHECK(parse_laurent(p.to_string()) == p);
    RatFunc f = random_ratfunc(rng);
    CHECK(parse_ratfunc(f.to_string()) == f);
  }
  CHECK_THROWS_AS(parse_ratfunc("q^2-1/q-1"), std::invalid_argument);
}
