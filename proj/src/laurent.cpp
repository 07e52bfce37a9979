#include "qpbw/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qpbw {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!qpbw::is_zero(constant)) {
    Rational c = constant;
    c.canonicalize();
    terms_[0] = c;
  }
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly LaurentPoly::term(long exponent, const Rational& c) {
  LaurentPoly p;
  if (!qpbw::is_zero(c)) {
    Rational cc = c;
    cc.canonicalize();
    p.terms_[exponent] = cc;
  }
  return p;
}

const LaurentPoly& LaurentPoly::zero() {
  static const LaurentPoly z;
  return z;
}

const LaurentPoly& LaurentPoly::one() {
  static const LaurentPoly o{Rational(1)};
  return o;
}

const LaurentPoly& LaurentPoly::q() {
  static const LaurentPoly p = term(1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long exponent, const Rational& c) {
  if (qpbw::is_zero(c)) {
    terms_.erase(exponent);
  } else {
    Rational cc = c;
    cc.canonicalize();
    terms_[exponent] = cc;
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (qpbw::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (qpbw::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      long e = e1 + e2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rational c = c1 * c2;
        if (!qpbw::is_zero(c)) r.terms_[e] = c;
      } else {
        it->second += c1 * c2;
        if (qpbw::is_zero(it->second)) r.terms_.erase(it);
      }
    }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    int c = cmp(a->second, b->second);
    if (c != 0) return c < 0;
  }
  return a == terms_.end() && b != o.terms_.end();
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (qpbw::is_zero(c)) return r;
  Rational cc = c;
  cc.canonicalize();
  for (const auto& [e, v] : terms_) r.terms_[e] = v * cc;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly base = *this, acc = one();
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute_q_power(long k) const {
  if (k == 0) throw std::domain_error("substitute_q_power: k must be nonzero");
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_[e * k] = v;
  return r;
}

Rational LaurentPoly::eval_at_one() const {
  Rational s(0);
  for (const auto& [e, v] : terms_) s += v;
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return zero();
  auto dm = divmod_shifted(*this, divisor);
  if (!dm.remainder.is_zero()) return std::nullopt;
  // this = q^{m1} P, divisor = q^{m2} D with P = Q*D, so this/divisor = q^{m1-m2} Q.
  return dm.quotient.shifted(min_exp() - divisor.min_exp());
}

Rational LaurentPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, v] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high-to-low degree, the usual human convention
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    long e = it->first;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool unit_coeff = (a == 1);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (!unit_coeff) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scaled(c); }

namespace {

// dense coefficient vector of p shifted to minimal exponent 0
std::vector<Rational> dense_shifted(const LaurentPoly& p) {
  std::vector<Rational> v;
  if (p.is_zero()) return v;
  long lo = p.min_exp(), hi = p.max_exp();
  v.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e - lo)] = c;
  return v;
}

LaurentPoly from_dense(const std::vector<Rational>& v) {
  LaurentPoly p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) p.set_coeff(static_cast<long>(i), v[i]);
  return p;
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && is_zero(v.back())) v.pop_back();
}

}  // namespace

LaurentDivMod divmod_shifted(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> a = dense_shifted(dividend);
  std::vector<Rational> b = dense_shifted(divisor);
  trim(a);
  trim(b);
  std::vector<Rational> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    quot[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    trim(a);
  }
  return {from_dense(quot), from_dense(a)};
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(ZPoly& v) {
  mpz_class g(0);
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) c /= g;
}

// integer-primitive image of p shifted to minimal exponent 0
ZPoly primitive_dense(const LaurentPoly& p) {
  ZPoly v;
  if (p.is_zero()) return v;
  long lo = p.min_exp(), hi = p.max_exp();
  mpz_class lcm(1);
  for (const auto& [e, c] : p.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  v.assign(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
  for (const auto& [e, c] : p.terms())
    v[static_cast<std::size_t>(e - lo)] = c.get_num() * (lcm / c.get_den());
  make_primitive(v);
  return v;
}

// pseudo-remainder of a by b over Z (b nonzero), in place on a
void pseudo_rem(ZPoly& a, const ZPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class lead = a.back();
    std::size_t off = a.size() - b.size();
    for (auto& c : a) c *= b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= lead * b[i];
    ztrim(a);
  }
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  // primitive polynomial-remainder sequence over Z; keeps coefficients tame
  ZPoly x = primitive_dense(a), y = primitive_dense(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    pseudo_rem(x, y);
    make_primitive(x);
    std::swap(x, y);
  }
  if (x.empty()) return LaurentPoly::zero();
  // monic over Q
  LaurentPoly g;
  Rational lead(x.back());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational c(x[i]);
    g.set_coeff(static_cast<long>(i), c / lead);
  }
  return g;
}

namespace {

constexpr unsigned long kFilterPrime = 0xFFFFFFFFFFFFFFC5ull;  // 2^64 - 59, prime

unsigned long mulmod(unsigned long a, unsigned long b) {
  return static_cast<unsigned long>(
      static_cast<unsigned __int128>(a) * b % kFilterPrime);
}

unsigned long submod(unsigned long a, unsigned long b) {
  return a >= b ? a - b : a + (kFilterPrime - b);
}

unsigned long powmod(unsigned long a, unsigned long e) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned long> mod_image(const LaurentPoly& p, bool& ok) {
  std::vector<unsigned long> v;
  long lo = p.min_exp(), hi = p.max_exp();
  v.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : p.terms()) {
    unsigned long num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kFilterPrime);
    unsigned long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kFilterPrime);
    if (den == 0) {
      ok = false;
      return v;
    }
    v[static_cast<std::size_t>(e - lo)] = mulmod(num, powmod(den, kFilterPrime - 2));
  }
  // the image must keep the true degree, or the filter is inconclusive
  if (v.empty() || v.back() == 0) ok = false;
  return v;
}

void zp_trim(std::vector<unsigned long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

bool laurent_coprime_mod_filter(const LaurentPoly& a, const LaurentPoly& b) {
  // True means provably coprime over Q (degree of gcd mod p bounds the true
  // gcd degree from above whenever the leading terms survive reduction).
  if (a.is_zero() || b.is_zero()) return false;
  bool ok = true;
  std::vector<unsigned long> x = mod_image(a, ok), y = mod_image(b, ok);
  if (!ok) return false;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // x mod y over Z/p
    unsigned long inv = powmod(y.back(), kFilterPrime - 2);
    while (x.size() >= y.size() && !x.empty()) {
      unsigned long c = mulmod(x.back(), inv);
      std::size_t off = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i)
        x[off + i] = submod(x[off + i], mulmod(c, y[i]));
      zp_trim(x);
    }
    std::swap(x, y);
  }
  return x.size() == 1;  // gcd mod p is a nonzero constant
}

}  // namespace qpbw
