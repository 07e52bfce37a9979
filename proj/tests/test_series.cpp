#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpbw/impoly.hpp"
#include "qpbw/series.hpp"

using namespace qpbw;

namespace {

SeriesVec<RatFunc> series_of(std::initializer_list<std::string> texts) {
  SeriesVec<RatFunc> s;
  s.coeff.reserve(texts.size());
  for (const auto& t : texts) s.coeff.push_back(parse_ratfunc(t));
  s.order = static_cast<long>(s.coeff.size()) - 1;
  return s;
}

RatFunc random_rf(std::mt19937& rng) {
  std::uniform_int_distribution<int> ce(-2, 2), cc(-9, 9);
  LaurentPoly num, den;
  for (int t = 0; t < 2; ++t) num += LaurentPoly::term(ce(rng), Rational(cc(rng)));
  do {
    den = LaurentPoly::zero();
    for (int t = 0; t < 2; ++t) den += LaurentPoly::term(ce(rng), Rational(cc(rng)));
  } while (den.is_zero());
  return RatFunc(num, den);
}

}  // namespace

TEST_CASE("psi on exp(x zeta)") {
  auto x = series_of({"1", "q", "0", "0", "0"});
  auto y = psi_transform(x);
  // Y_s = x^s / s!
  Rational fact(1);
  for (long s = 1; s <= 4; ++s) {
    fact *= Rational(s);
    CHECK(y.coeff[static_cast<std::size_t>(s)] == RatFunc::q_power(s).scaled(Rational(1) / fact));
  }
  auto zero = series_of({"1", "0", "0", "0"});
  CHECK(psi_transform(zero) == zero);
  // X = (1, a, b): Y_2 = b + a^2/2
  auto ab = series_of({"1", "q^2", "q-1", "0"});
  auto yab = psi_transform(ab);
  CHECK(yab.coeff[2] == parse_ratfunc("q-1") + RatFunc::q_power(4).scaled(Rational(1, 2)));
}

TEST_CASE("phi examples") {
  // Y = (1, y, y^2/2, y^3/6) -> X = (1, y, 0, 0)
  RatFunc yv = parse_ratfunc("(q-2)/(q+3)");
  SeriesVec<RatFunc> y;
  y.order = 3;
  y.coeff = {RatFunc::one(), yv, (yv * yv).scaled(Rational(1, 2)),
             (yv * yv * yv).scaled(Rational(1, 6))};
  auto x = phi_transform(y);
  CHECK(x.coeff[1] == yv);
  CHECK(x.coeff[2].is_zero());
  CHECK(x.coeff[3].is_zero());
  // Y = (1, 0, c, 0, 0) -> X_2 = c, X_3 = 0, X_4 = -c^2/2
  RatFunc c = parse_ratfunc("(q^2+1)/(q)");
  SeriesVec<RatFunc> y2;
  y2.order = 4;
  y2.coeff = {RatFunc::one(), RatFunc::zero(), c, RatFunc::zero(), RatFunc::zero()};
  auto x2 = phi_transform(y2);
  CHECK(x2.coeff[2] == c);
  CHECK(x2.coeff[3].is_zero());
  CHECK(x2.coeff[4] == (c * c).scaled(Rational(-1, 2)));
  CHECK_THROWS_AS(phi_transform(series_of({"2", "1"})), std::domain_error);
  CHECK_THROWS_AS(psi_transform(series_of({"0", "1"})), std::domain_error);
}

TEST_CASE("psi/phi inverse round trip, exact, random coefficients") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    SeriesVec<RatFunc> x;
    x.order = 12;
    x.coeff.assign(13, RatFunc::zero());
    x.coeff[0] = RatFunc::one();
    for (long r = 1; r <= 12; ++r) x.coeff[static_cast<std::size_t>(r)] = random_rf(rng);
    CHECK(phi_transform(psi_transform(x)) == x);
    SeriesVec<RatFunc> y = x;
    CHECK(psi_transform(phi_transform(y)) == y);
  }
}

TEST_CASE("psi agrees with direct exp composition oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    SeriesVec<RatFunc> x;
    x.order = 10;
    x.coeff.assign(11, RatFunc::zero());
    x.coeff[0] = RatFunc::one();
    for (long r = 1; r <= 10; ++r) x.coeff[static_cast<std::size_t>(r)] = random_rf(rng);
    CHECK(psi_transform(x) == exp_compose_oracle(x, RatFunc::one()));
    auto y = psi_transform(x);
    CHECK(phi_transform(y) == log_compose_oracle(y, RatFunc::one()));
  }
}

TEST_CASE("coefficient-ring genericity: psi commutes with q = 1 specialization") {
  long T = 6;
  SeriesVec<ImPoly> x;
  x.order = T;
  x.coeff.assign(static_cast<std::size_t>(T + 1), ImPoly());
  x.coeff[0] = ImPoly::one();
  for (long r = 1; r <= T; ++r)
    x.coeff[static_cast<std::size_t>(r)] =
        ImPoly::generator(static_cast<unsigned>(r)).scaled(parse_ratfunc("(q^2+q)/(2)"));
  auto y = psi_transform(x);
  SeriesVec<ImPoly> x1;
  x1.order = T;
  for (const auto& c : x.coeff) x1.coeff.push_back(c.specialize_q1());
  auto y1 = psi_transform(x1);
  for (long r = 0; r <= T; ++r)
    CHECK(y.coeff[static_cast<std::size_t>(r)].specialize_q1() ==
          y1.coeff[static_cast<std::size_t>(r)]);
}

TEST_CASE("skew derivation") {
  RatFunc base = parse_ratfunc("(q^3)/(1)");
  // zeta^n -> (n)_base zeta^{n-1}
  for (long n = 1; n <= 5; ++n) {
    SeriesVec<RatFunc> f;
    f.order = 5;
    f.coeff.assign(6, RatFunc::zero());
    f.coeff[static_cast<std::size_t>(n)] = RatFunc::one();
    auto df = skew_derive(f, base);
    CHECK(df.coeff[static_cast<std::size_t>(n - 1)] ==
          paren_q(static_cast<unsigned long>(n), base));
  }
  // constants die
  SeriesVec<RatFunc> c;
  c.order = 3;
  c.coeff = {parse_ratfunc("q^5-2"), RatFunc::zero(), RatFunc::zero(), RatFunc::zero()};
  auto dc = skew_derive(c, base);
  for (const auto& v : dc.coeff) CHECK(v.is_zero());
  // linearity
  std::mt19937 rng(9);
  SeriesVec<RatFunc> f, g;
  f.order = g.order = 6;
  f.coeff.assign(7, RatFunc::zero());
  g.coeff.assign(7, RatFunc::zero());
  for (long r = 0; r <= 6; ++r) {
    f.coeff[static_cast<std::size_t>(r)] = random_rf(rng);
    g.coeff[static_cast<std::size_t>(r)] = random_rf(rng);
  }
  SeriesVec<RatFunc> sum;
  sum.order = 6;
  for (std::size_t i = 0; i < 7; ++i) sum.coeff.push_back(f.coeff[i] + g.coeff[i]);
  auto dsum = skew_derive(sum, base);
  auto df = skew_derive(f, base), dg = skew_derive(g, base);
  for (std::size_t i = 0; i < dsum.coeff.size(); ++i)
    CHECK(dsum.coeff[i] == df.coeff[i] + dg.coeff[i]);
  // base = 1 falls back to the ordinary derivative
  auto d1 = skew_derive(f, RatFunc::one());
  for (long n = 1; n <= 6; ++n)
    CHECK(d1.coeff[static_cast<std::size_t>(n - 1)] ==
          f.coeff[static_cast<std::size_t>(n)].scaled(Rational(n)));
}
