#include "qpbw/pbw.hpp"

#include <functional>

#include <algorithm>
#include <stdexcept>

#include "qpbw/qcombinatorics.hpp"

namespace qpbw {

ExpVec::ExpVec(const OrderedRoots& order, std::vector<ExpVecEntry> entries)
    : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.exp == 0) throw std::invalid_argument("ExpVec: zero exponent in support");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
    if (order.compare(entries_[i].root, entries_[i + 1].root) >= 0)
      throw std::invalid_argument("ExpVec: factors not strictly increasing in the root order");
}

ExpVec ExpVec::divided(const OrderedRoots& order,
                       std::vector<std::pair<Root, unsigned long>> support) {
  std::sort(support.begin(), support.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) < 0; });
  std::vector<ExpVecEntry> entries;
  entries.reserve(support.size());
  for (auto& [root, exp] : support) {
    FactorNormalization norm = root.kind == RootKind::Real ? FactorNormalization::QDivided
                                                           : FactorNormalization::PlainDivided;
    entries.push_back({root, exp, norm});
  }
  return ExpVec(order, std::move(entries));
}

LatticeVec weight(const CartanData& data, const ExpVec& v) {
  LatticeVec w;
  w.coords.assign(data.marks.size(), 0);
  for (const auto& e : v.entries())
    for (std::size_t j = 0; j < w.coords.size(); ++j)
      w.coords[j] += static_cast<long>(e.exp) * e.root.coords[j];
  return w;
}

std::vector<std::pair<int, long>> toral_index_nodes(const CartanData& data, ToralIndexSet set) {
  std::vector<std::pair<int, long>> nodes;
  int lo = set == ToralIndexSet::Finite ? 1 : 0;
  for (int i = lo; i <= data.rank; ++i) nodes.push_back({i, data.d[static_cast<std::size_t>(i)]});
  if (set == ToralIndexSet::AffineExtended) nodes.push_back({data.rank + 1, 1});
  return nodes;
}

ToralElement toral_element(long c, unsigned long t, long d_i) {
  if (d_i < 1) throw std::invalid_argument("toral_element: d_i must be positive");
  ToralElement acc{{0, RatFunc::one()}};
  for (unsigned long s = 1; s <= t; ++s) {
    long e = d_i * (c - static_cast<long>(s) + 1);
    RatFunc den(LaurentPoly::term(d_i * static_cast<long>(s)) -
                LaurentPoly::term(-d_i * static_cast<long>(s)));
    ToralElement next;
    for (const auto& [deg, coeff] : acc) {
      // (q_i^{c-s+1} K - q_i^{-(c-s+1)} K^{-1}) / (q_i^s - q_i^{-s})
      RatFunc up = coeff * RatFunc::q_power(e) / den;
      RatFunc down = coeff * RatFunc::q_power(-e) / den;
      auto add = [&](long dd, const RatFunc& v) {
        auto it = next.find(dd);
        if (it == next.end()) {
          if (!v.is_zero()) next[dd] = v;
        } else {
          it->second += v;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      add(deg + 1, up);
      add(deg - 1, -down);
    }
    acc = std::move(next);
  }
  return acc;
}

ToralElement basis_toral(unsigned long t, long d_i) {
  ToralElement e = toral_element(0, t, d_i);
  long shift = -static_cast<long>(t / 2);
  if (shift == 0) return e;
  ToralElement out;
  for (const auto& [deg, coeff] : e) out[deg + shift] = coeff;
  return out;
}

ToralRegularityReport toral_regularity_report(unsigned long t_max, long d_i,
                                              const std::vector<unsigned long>& sample_orders) {
  ToralRegularityReport rep;
  for (unsigned long t = 0; t <= t_max; ++t) {
    ToralElement e = basis_toral(t, d_i);
    for (const auto& [deg, coeff] : e)
      for (unsigned long ell : sample_orders)
        if (!is_regular_at(coeff, ell)) {
          rep.all_regular = false;
          rep.failing_t = t;
          rep.failing_order = ell;
          return rep;
        }
  }
  return rep;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> m(n, 0);
  // recursive fill: choose multiplicities of parts n, n-1, ..., 1
  std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned remaining) {
    if (remaining == 0) {
      out.push_back(m);
      return;
    }
    if (part == 0) return;
    for (unsigned cnt = 0; cnt * part <= remaining; ++cnt) {
      m[part - 1] = cnt;
      rec(part - 1, remaining - cnt * part);
    }
    m[part - 1] = 0;
  };
  if (n == 0) {
    out.push_back({});
    return out;
  }
  rec(n, n);
  return out;
}

namespace {

// coordinates of a homogeneous ImPoly on the k-supported monomial basis of
// delta-degree R*k, indexed by partitions of R
std::vector<RatFunc> coords_on_block(const ImPoly& p, long k,
                                     const std::vector<std::vector<unsigned>>& parts) {
  std::vector<RatFunc> row;
  row.reserve(parts.size());
  for (const auto& m : parts) {
    MultiExp e;
    // part z with multiplicity m[z-1] becomes exponent m[z-1] on generator z*k
    std::size_t maxgen = 0;
    for (std::size_t z = 1; z <= m.size(); ++z)
      if (m[z - 1] > 0) maxgen = z * static_cast<std::size_t>(k);
    e.assign(maxgen, 0);
    for (std::size_t z = 1; z <= m.size(); ++z)
      if (m[z - 1] > 0) e[z * static_cast<std::size_t>(k) - 1] = m[z - 1];
    row.push_back(p.coeff(e));
  }
  return row;
}

RatMatrix specialize_matrix_q1(const RatMatrix& m) {
  RatMatrix out(m.size(), std::vector<RatFunc>(m.size(), RatFunc::zero()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out[i][j] = RatFunc(specialize_q1(m[i][j]));
  return out;
}

}  // namespace

BlockTransitionReport block_transition_roundtrip(long d_i, long k, long max_degree) {
  if (d_i < 1 || k < 1 || max_degree < 1)
    throw std::invalid_argument("block_transition_roundtrip: positive arguments required");
  BlockTransitionReport rep;
  rep.d_i = d_i;
  rep.k = k;
  rep.max_degree = max_degree;
  long r_max = max_degree / k;
  if (r_max < 1) {
    rep.block_sizes = {};
    return rep;
  }
  auto hat = irf_Ehat(d_i, r_max * k);
  auto bracket = irf_Edot_bracket(d_i, k, r_max);
  auto lambda = classical_Lambda(k, r_max);

  for (long R = 1; R <= r_max; ++R) {
    auto parts = partitions_of(static_cast<unsigned>(R));
    std::size_t dim = parts.size();
    rep.block_sizes.push_back(dim);
    RatMatrix P(dim), Q(dim), Pc(dim), Qc(dim);
    for (std::size_t row = 0; row < dim; ++row) {
      const auto& m = parts[row];
      // divided-power monomial of the rescaled hat family, and its classical
      // image prod (-g_{zk})^{m_z}/m_z!
      ImPoly hatmon = ImPoly::one();
      ImPoly hatmon_cl = ImPoly::one();
      ImPoly brmon = ImPoly::one();
      ImPoly brmon_cl = ImPoly::one();
      for (std::size_t z = 1; z <= m.size(); ++z) {
        unsigned cnt = m[z - 1];
        if (cnt == 0) continue;
        Rational fact(1);
        for (unsigned t = 2; t <= cnt; ++t) fact *= Rational(t);
        ImPoly factor =
            hat[z * static_cast<std::size_t>(k)].scaled(RatFunc::q_power(d_i * static_cast<long>(z) * k));
        hatmon = hatmon * factor.pow(cnt).scaled(Rational(1) / fact);
        hatmon_cl =
            hatmon_cl *
            (-ImPoly::generator(static_cast<unsigned>(z * static_cast<std::size_t>(k))))
                .pow(cnt)
                .scaled(Rational(1) / fact);
        brmon = brmon * bracket[z].pow(cnt);
        brmon_cl = brmon_cl * lambda[z].pow(cnt);
      }
      P[row] = coords_on_block(hatmon, k, parts);
      Q[row] = coords_on_block(brmon, k, parts);
      Pc[row] = coords_on_block(hatmon_cl, k, parts);
      Qc[row] = coords_on_block(brmon_cl, k, parts);
    }
    // A expresses bracket monomials in hat divided powers: Q = A P
    RatMatrix A = rat_matrix_mul(Q, rat_matrix_inverse(P));
    RatMatrix B = rat_matrix_mul(P, rat_matrix_inverse(Q));
    if (!rat_matrix_is_identity(rat_matrix_mul(A, B)) ||
        !rat_matrix_is_identity(rat_matrix_mul(B, A)))
      rep.roundtrip_identity = false;
    RatMatrix Ac = rat_matrix_mul(Qc, rat_matrix_inverse(Pc));
    if (specialize_matrix_q1(A) != Ac) rep.classical_match = false;
  }
  return rep;
}

}  // namespace qpbw
