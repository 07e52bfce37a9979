#include "qpbw/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

namespace qpbw {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

const RatFunc& RatFunc::zero() {
  static const RatFunc z;
  return z;
}

const RatFunc& RatFunc::one() {
  static const RatFunc o{LaurentPoly::one()};
  return o;
}

RatFunc RatFunc::q_power(long e, const Rational& c) { return RatFunc(LaurentPoly::term(e, c)); }

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den, AlreadyReduced)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize_units();
}

void RatFunc::normalize_units() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  long dshift = den_.min_exp();
  if (dshift != 0) {
    den_ = den_.shifted(-dshift);
    num_ = num_.shifted(-dshift);
  }
  // den: coprime integer coefficients, positive lowest-degree coefficient
  Rational c = den_.content();
  if (sgn(den_.coeff(0)) < 0) c = -c;
  if (c != 1) {
    den_ = den_.scaled(Rational(1) / c);
    num_ = num_.scaled(Rational(1) / c);
  }
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (!den_.is_constant() && !laurent_coprime_mod_filter(num_, den_)) {
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
      long nshift = num_.min_exp();
      auto nq = num_.shifted(-nshift).divided_exactly_by(g);
      auto dq = den_.shifted(-den_.min_exp()).divided_exactly_by(g);
      if (!nq || !dq) throw std::logic_error("RatFunc: gcd division failed");
      num_ = nq->shifted(nshift);
      long dmin = den_.min_exp();
      den_ = dq->shifted(dmin);
    }
  }
  normalize_units();
}

namespace {

// monic gcd with the cheap coprimality filter in front
LaurentPoly gcd_fast(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() ||
      laurent_coprime_mod_filter(a, b))
    return LaurentPoly::one();
  return laurent_gcd(a, b);
}

LaurentPoly divide_by(const LaurentPoly& p, const LaurentPoly& g) {
  if (g.is_one()) return p;
  long shift = p.min_exp();
  auto quo = p.shifted(-shift).divided_exactly_by(g);
  if (!quo) throw std::logic_error("RatFunc: expected exact division by gcd");
  return quo->shifted(shift);
}

}  // namespace

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  LaurentPoly g = gcd_fast(den_, o.den_);
  if (g.is_one()) {
    // canonical inputs with coprime denominators give a canonical result
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, AlreadyReduced{});
  }
  LaurentPoly d1 = divide_by(den_, g), d2 = divide_by(o.den_, g);
  return RatFunc(num_ * d2 + o.num_ * d1, den_ * d2);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return zero();
  // cross-cancel, then the product of the reduced pieces is canonical
  LaurentPoly g1 = gcd_fast(num_, o.den_);
  LaurentPoly g2 = gcd_fast(o.num_, den_);
  return RatFunc(divide_by(num_, g1) * divide_by(o.num_, g2),
                 divide_by(den_, g2) * divide_by(o.den_, g1), AlreadyReduced{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return *this * o.inverse();
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_, AlreadyReduced{});
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc acc = one(), base = *this;
  unsigned long m = static_cast<unsigned long>(n);
  while (m > 0) {
    if (m & 1) acc *= base;
    base *= base;
    m >>= 1;
  }
  return acc;
}

RatFunc RatFunc::scaled(const Rational& c) const {
  RatFunc r = *this;
  r.num_ = r.num_.scaled(c);
  if (qpbw::is_zero(c)) r.den_ = LaurentPoly::one();
  return r;
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc operator*(const Rational& c, const RatFunc& f) { return f.scaled(c); }

RatFunc paren_q(unsigned long n, const RatFunc& base) {
  if (base.is_one()) return RatFunc(static_cast<long>(n));
  RatFunc acc, p = RatFunc::one();
  for (unsigned long j = 0; j < n; ++j) {
    acc += p;
    p *= base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what +
                                " in \"" + s + "\"");
  }
};

long parse_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.peek() == '-' || c.peek() == '+') ++c.i;
  std::size_t digits = 0;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    ++c.i;
    ++digits;
  }
  if (digits == 0) c.fail("expected integer");
  return std::stol(c.s.substr(start, c.i - start));
}

// integer or integer/integer; "3/q" is rejected as ambiguous division
Rational parse_coefficient(Cursor& c) {
  Rational v(parse_integer(c));
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    if (c.i + 1 < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i + 1]))) {
      ++c.i;
      Rational den(parse_integer(c));
      v /= den;
    } else {
      c.fail("ambiguous '/': write quotients as (num)/(den)");
    }
  }
  return v;
}

// monomial := [int] ['*'] [ q ['^' int] ]
// poly := ['-'] monomial (('+'|'-') monomial)*
LaurentPoly parse_poly(Cursor& c, char stop) {
  LaurentPoly acc;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done() || c.peek() == stop) break;
    Rational sign(1);
    char p = c.peek();
    if (p == '+' || p == '-') {
      c.take();
      if (p == '-') sign = -1;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_coefficient(c);
      saw_number = true;
    }
    c.skip_ws();
    if (c.peek() == '*') {
      c.take();
      c.skip_ws();
    }
    long exp = 0;
    if (c.peek() == 'q') {
      c.take();
      exp = 1;
      if (c.peek() == '^') {
        c.take();
        exp = parse_integer(c);
      }
    } else if (!saw_number) {
      c.fail("expected coefficient or 'q'");
    }
    acc += LaurentPoly::term(exp, sign * coeff);
  }
  return acc;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  Cursor c{text};
  LaurentPoly p = parse_poly(c, '\0');
  if (!c.done()) c.fail("trailing input");
  return p;
}

RatFunc parse_ratfunc(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.peek() == '(') {
    c.take();
    LaurentPoly num = parse_poly(c, ')');
    if (c.peek() != ')') c.fail("expected ')'");
    c.take();
    c.skip_ws();
    if (c.done()) return RatFunc(num);
    if (c.peek() != '/') c.fail("expected '/' after ')'");
    c.take();
    c.skip_ws();
    if (c.peek() != '(') c.fail("quotients require parenthesized denominator");
    c.take();
    LaurentPoly den = parse_poly(c, ')');
    if (c.peek() != ')') c.fail("expected ')'");
    c.take();
    if (!c.done()) c.fail("trailing input");
    if (den.is_zero()) throw std::domain_error("parse_ratfunc: zero denominator");
    return RatFunc(num, den);
  }
  // plain polynomial; rational coefficients like 3/2 are fine, polynomial
  // division without parentheses is not
  LaurentPoly p = parse_poly(c, '\0');
  if (!c.done()) c.fail("trailing input");
  return RatFunc(p);
}

}  // namespace qpbw
