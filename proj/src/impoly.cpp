#include "qpbw/impoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qpbw/cyclotomic.hpp"

namespace qpbw {

long multiexp_delta_degree(const MultiExp& e) {
  long deg = 0;
  for (std::size_t s = 0; s < e.size(); ++s)
    deg += static_cast<long>(e[s]) * (static_cast<long>(s) + 1);
  return deg;
}

namespace {
void trim(MultiExp& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

ImPoly::ImPoly(const RatFunc& c) {
  if (!c.is_zero()) terms_[MultiExp{}] = c;
}

const ImPoly& ImPoly::zero() {
  static const ImPoly z;
  return z;
}

const ImPoly& ImPoly::one() {
  static const ImPoly o{RatFunc::one()};
  return o;
}

ImPoly ImPoly::generator(unsigned s) {
  if (s == 0) throw std::invalid_argument("generator index must be >= 1");
  ImPoly p;
  MultiExp e(s, 0);
  e[s - 1] = 1;
  p.terms_[e] = RatFunc::one();
  return p;
}

RatFunc ImPoly::coeff(const MultiExp& e) const {
  MultiExp key = e;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? RatFunc::zero() : it->second;
}

void ImPoly::set_coeff(MultiExp e, const RatFunc& c) {
  trim(e);
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[std::move(e)] = c;
}

ImPoly ImPoly::operator-() const {
  ImPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

ImPoly& ImPoly::operator+=(const ImPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ImPoly& ImPoly::operator-=(const ImPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ImPoly ImPoly::operator+(const ImPoly& o) const {
  ImPoly r = *this;
  r += o;
  return r;
}

ImPoly ImPoly::operator-(const ImPoly& o) const {
  ImPoly r = *this;
  r -= o;
  return r;
}

ImPoly ImPoly::operator*(const ImPoly& o) const {
  ImPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      MultiExp e(std::max(e1.size(), e2.size()), 0);
      for (std::size_t s = 0; s < e1.size(); ++s) e[s] += e1[s];
      for (std::size_t s = 0; s < e2.size(); ++s) e[s] += e2[s];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        RatFunc c = c1 * c2;
        if (!c.is_zero()) r.terms_[std::move(e)] = c;
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

ImPoly ImPoly::scaled(const RatFunc& c) const {
  ImPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

ImPoly ImPoly::scaled(const Rational& c) const { return scaled(RatFunc(c)); }

ImPoly ImPoly::pow(unsigned long k) const {
  ImPoly acc = one(), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

long ImPoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  long deg = multiexp_delta_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (multiexp_delta_degree(e) != deg) throw std::domain_error("ImPoly: not homogeneous");
  return deg;
}

bool ImPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long deg = multiexp_delta_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (multiexp_delta_degree(e) != deg) return false;
  return true;
}

ImPoly ImPoly::specialize_q1() const {
  ImPoly r;
  for (const auto& [e, c] : terms_) {
    Rational v = qpbw::specialize_q1(c);
    if (!qpbw::is_zero(v)) r.terms_[e] = RatFunc(v);
  }
  return r;
}

ImPoly ImPoly::bar() const {
  ImPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c.bar();
  return r;
}

std::string ImPoly::to_string(const std::string& sym) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      os << "*" << sym << (s + 1);
      if (e[s] > 1) os << "^" << e[s];
    }
  }
  return os.str();
}

}  // namespace qpbw
