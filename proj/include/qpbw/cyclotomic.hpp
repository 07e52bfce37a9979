#pragma once

#include <stdexcept>
#include <vector>

#include "qpbw/ratfunc.hpp"

namespace qpbw {

/// Element of Q[q]/(Phi_ell(q)), i.e. the value f(eps) for eps a primitive
/// ell-th root of unity, represented by the fully reduced residue of degree
/// < phi(ell).  Since Phi_ell is irreducible over Q, the quotient is a field
/// and every nonzero residue is invertible.
struct CycloElement {
  unsigned long order = 1;
  std::vector<Rational> residue;  // coefficient of q^j at index j; trimmed

  bool is_zero() const { return residue.empty(); }
  bool operator==(const CycloElement& o) const = default;

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement inverse() const;  // throws on zero

  std::string to_string() const;
};

struct PoleAtRootOfUnity : std::domain_error {
  unsigned long order;
  explicit PoleAtRootOfUnity(unsigned long ell, const std::string& what)
      : std::domain_error(what), order(ell) {}
};

/// Phi_ell(q) as integer-coefficient polynomial (ascending, constant first).
const std::vector<Rational>& cyclotomic_poly(unsigned long ell);

unsigned long euler_phi(unsigned long n);

/// Evaluate f at a primitive ell-th root of unity.  Throws PoleAtRootOfUnity
/// when the (canonical-form) denominator vanishes there.
CycloElement eval_at_root_of_unity(const RatFunc& f, unsigned long ell);
CycloElement eval_at_root_of_unity(const LaurentPoly& p, unsigned long ell);

/// True iff f has no pole at primitive ell-th roots of unity.
bool is_regular_at(const RatFunc& f, unsigned long ell);

/// Exact f(1); throws PoleAtRootOfUnity (order 1) naming the (q-1)-power of
/// the denominator when f has a pole at q = 1.
Rational specialize_q1(const RatFunc& f);

/// Indices m of all cyclotomic polynomials dividing p (p != 0).  Only finitely
/// many are possible since phi(m) <= deg p.
std::vector<unsigned long> cyclotomic_factors(const LaurentPoly& p);

}  // namespace qpbw
