#include "qpbw/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qpbw {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients, trimmed

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a mod b (b nonzero)
Poly mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    trim(a);
  }
  return a;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  trim(rem);
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational c = rem.back() / b.back();
    std::size_t off = rem.size() - b.size();
    quot[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= c * b[i];
    trim(rem);
  }
  if (!rem.empty()) throw std::logic_error("cyclotomic: non-exact division");
  trim(quot);
  return quot;
}

// extended euclid: returns (g, u) with u*a = g mod b, g monic gcd(a, b)
std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly b) {
  Poly u0{Rational(1)}, u1{};
  trim(a);
  trim(b);
  while (!b.empty()) {
    // quotient of a by b
    Poly rem = a, quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
      Rational c = rem.back() / b.back();
      std::size_t off = rem.size() - b.size();
      quo[off] = c;
      for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= c * b[i];
      trim(rem);
    }
    trim(quo);
    Poly u2 = u0;
    Poly qu = mul(quo, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
    for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    a = b;
    b = rem;
    u0 = u1;
    u1 = u2;
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
  }
  return {a, u0};
}

Poly laurent_to_poly_shifted(const LaurentPoly& p) {
  Poly v;
  if (p.is_zero()) return v;
  long lo = p.min_exp();
  v.assign(static_cast<std::size_t>(p.max_exp() - lo + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e - lo)] = c;
  return v;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_poly(unsigned long ell) {
  static std::map<unsigned long, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;
  // Phi_ell = (q^ell - 1) / prod_{d | ell, d < ell} Phi_d
  Poly num(ell + 1, Rational(0));
  num[0] = -1;
  num[ell] = 1;
  for (unsigned long d = 1; d < ell; ++d) {
    if (ell % d != 0) continue;
    // recursive fill without recursion on the lock: compute iteratively
    // (divisors are < ell, so they are already cached by induction if we
    // fill in increasing order; ensure that here)
    if (!cache.count(d)) {
      Poly nd(d + 1, Rational(0));
      nd[0] = -1;
      nd[d] = 1;
      for (unsigned long e = 1; e < d; ++e)
        if (d % e == 0) nd = divide_exact(nd, cache.at(e));
      cache[d] = nd;
    }
    num = divide_exact(num, cache.at(d));
  }
  return cache[ell] = num;
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  if (order != o.order) throw std::domain_error("CycloElement: mixed orders");
  Poly r = residue;
  if (r.size() < o.residue.size()) r.resize(o.residue.size(), Rational(0));
  for (std::size_t i = 0; i < o.residue.size(); ++i) r[i] += o.residue[i];
  trim(r);
  return {order, r};
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  if (order != o.order) throw std::domain_error("CycloElement: mixed orders");
  Poly r = mod(mul(residue, o.residue), cyclotomic_poly(order));
  return {order, r};
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElement: inverse of zero");
  auto [g, u] = half_ext_gcd(residue, cyclotomic_poly(order));
  // Phi_ell irreducible over Q, so g = 1
  if (g.size() != 1) throw std::logic_error("CycloElement: gcd with cyclotomic not 1");
  Poly inv = u;
  for (auto& c : inv) c /= g[0];
  return {order, mod(inv, cyclotomic_poly(order))};
}

std::string CycloElement::to_string() const {
  if (residue.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = residue.size(); j-- > 0;) {
    if (qpbw::is_zero(residue[j])) continue;
    Rational c = residue[j];
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (j == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "eps";
      if (j != 1) os << "^" << j;
    }
  }
  return os.str();
}

CycloElement eval_at_root_of_unity(const LaurentPoly& p, unsigned long ell) {
  if (ell == 0) throw std::domain_error("root of unity order must be positive");
  const Poly& phi = cyclotomic_poly(ell);
  if (p.is_zero()) return {ell, {}};
  // q^{-1} = q^{ell-1} modulo (q^ell - 1), hence also modulo Phi_ell
  Poly acc;
  long lo = p.min_exp();
  long shift = 0;
  while (shift + lo < 0) shift += static_cast<long>(ell);
  Poly dense = laurent_to_poly_shifted(p);
  Poly shifted(static_cast<std::size_t>(lo + shift), Rational(0));
  shifted.insert(shifted.end(), dense.begin(), dense.end());
  acc = mod(shifted, phi);
  return {ell, acc};
}

CycloElement eval_at_root_of_unity(const RatFunc& f, unsigned long ell) {
  CycloElement den = eval_at_root_of_unity(LaurentPoly(f.den()), ell);
  if (den.is_zero())
    throw PoleAtRootOfUnity(ell, "pole at primitive root of unity of order " +
                                      std::to_string(ell) + ": denominator " +
                                      f.den().to_string() + " vanishes there");
  CycloElement num = eval_at_root_of_unity(f.num(), ell);
  return num * den.inverse();
}

bool is_regular_at(const RatFunc& f, unsigned long ell) {
  // canonical form has gcd(num, den) = 1 and Phi_ell is irreducible, so a
  // vanishing denominator residue is a genuine pole
  return !eval_at_root_of_unity(LaurentPoly(f.den()), ell).is_zero();
}

Rational specialize_q1(const RatFunc& f) {
  Rational den = f.den().eval_at_one();
  if (is_zero(den)) {
    // name the offending factor: largest k with (q-1)^k | den
    LaurentPoly d = f.den();
    LaurentPoly qm1 = LaurentPoly::q() - LaurentPoly::one();
    int k = 0;
    while (true) {
      auto quo = d.divided_exactly_by(qm1);
      if (!quo) break;
      d = *quo;
      ++k;
    }
    throw PoleAtRootOfUnity(1, "pole at q = 1: denominator divisible by (q-1)^" +
                                   std::to_string(k));
  }
  return f.num().eval_at_one() / den;
}

std::vector<unsigned long> cyclotomic_factors(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("cyclotomic_factors of zero polynomial");
  std::vector<unsigned long> out;
  unsigned long deg = static_cast<unsigned long>(p.max_exp() - p.min_exp());
  if (deg == 0) return out;
  // phi(m) >= sqrt(m) for m > 6, so phi(m) <= deg forces m <= max(6, deg^2)
  unsigned long bound = std::max<unsigned long>(6, deg * deg);
  for (unsigned long m = 1; m <= bound; ++m) {
    if (euler_phi(m) > deg) continue;
    if (eval_at_root_of_unity(p, m).is_zero()) out.push_back(m);
  }
  return out;
}

}  // namespace qpbw
