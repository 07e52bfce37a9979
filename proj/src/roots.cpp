#include "qpbw/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace qpbw {

Root real_root(std::vector<long> coords) {
  Root r;
  r.coords = std::move(coords);
  r.kind = RootKind::Real;
  r.mult_index = 0;
  return r;
}

Root imaginary_root(const CartanData& data, long level, int mult_index) {
  if (level <= 0) throw std::invalid_argument("imaginary root level must be positive");
  if (mult_index < 1 || mult_index > data.rank)
    throw std::invalid_argument("imaginary multiplicity index out of range");
  Root r;
  r.kind = RootKind::Imaginary;
  r.mult_index = mult_index;
  r.coords.assign(data.marks.size(), 0);
  for (std::size_t j = 0; j < data.marks.size(); ++j) r.coords[j] = level * data.marks[j];
  return r;
}

long delta_level(const CartanData& data, const std::vector<long>& coords) {
  (void)data;
  return coords.empty() ? 0 : coords[0];  // marks[0] = 1 always
}

int IotaWord::at(long k) const {
  if (k >= 1) {
    long m = (k - 1) % static_cast<long>(period_pos.size());
    return period_pos[static_cast<std::size_t>(m)];
  }
  long m = (-k) % static_cast<long>(period_nonpos.size());
  return period_nonpos[static_cast<std::size_t>(m)];
}

namespace {

std::vector<long> alpha_coords(const CartanData& data, int i) {
  std::vector<long> v(data.marks.size(), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

std::vector<std::vector<long>> beta_positive_side(const CartanData& data, const IotaWord& iota,
                                                  long count) {
  // beta_k = s_{iota(1)} ... s_{iota(k-1)}(alpha_{iota(k)}); the prefix
  // product is maintained as its matrix action, one column per simple root.
  int n = data.rank;
  std::vector<std::vector<long>> cols(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) cols[j] = alpha_coords(data, j);
  std::vector<std::vector<long>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 1; k <= count; ++k) {
    int ik = iota.at(k);
    out.push_back(cols[static_cast<std::size_t>(ik)]);
    // prefix := prefix * s_{ik}: column j maps to column of alpha_j - a_{ik,j} alpha_{ik}
    std::vector<std::vector<long>> next = cols;
    for (int j = 0; j <= n; ++j) {
      int aij = data.a[ik][j];
      if (aij == 0) continue;
      for (int t = 0; t <= n; ++t) next[j][t] -= aij * cols[static_cast<std::size_t>(ik)][t];
    }
    cols = std::move(next);
  }
  return out;
}

std::vector<std::vector<long>> beta_nonpositive_side(const CartanData& data, const IotaWord& iota,
                                                     long count) {
  int n = data.rank;
  std::vector<std::vector<long>> cols(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) cols[j] = alpha_coords(data, j);
  std::vector<std::vector<long>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k > -count; --k) {
    int ik = iota.at(k);
    out.push_back(cols[static_cast<std::size_t>(ik)]);
    std::vector<std::vector<long>> next = cols;
    for (int j = 0; j <= n; ++j) {
      int aij = data.a[ik][j];
      if (aij == 0) continue;
      for (int t = 0; t <= n; ++t) next[j][t] -= aij * cols[static_cast<std::size_t>(ik)][t];
    }
    cols = std::move(next);
  }
  return out;
}

void validate_iota(const CartanData& data, const IotaWord& iota, long level_bound) {
  if (iota.period_pos.empty() || iota.period_nonpos.empty())
    throw IotaValidationError(0, "empty iota period");
  for (int i : iota.period_pos)
    if (i < 0 || i > data.rank) throw IotaValidationError(0, "iota letter out of range");
  for (int i : iota.period_nonpos)
    if (i < 0 || i > data.rank) throw IotaValidationError(0, "iota letter out of range");

  auto fin = finite_positive_roots(data);
  std::set<std::vector<long>> finset(fin.begin(), fin.end());
  int n = data.rank;
  long period = static_cast<long>(std::max(iota.period_pos.size(), iota.period_nonpos.size()));
  long window = (level_bound + 2) * period + static_cast<long>(fin.size());

  auto finite_part = [&](const std::vector<long>& v, long r) {
    std::vector<long> w(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) w[j - 1] = v[j] - r * data.marks[j];
    return w;
  };

  {  // positive side: distinct, in {r delta - alpha, r > 0}, covering r <= N
    auto betas = beta_positive_side(data, iota, window);
    std::set<std::vector<long>> seen;
    std::set<std::pair<long, std::vector<long>>> covered;
    for (long k = 1; k <= window; ++k) {
      const auto& v = betas[static_cast<std::size_t>(k - 1)];
      if (!seen.insert(v).second)
        throw IotaValidationError(k, "repeated root beta_k at k = " + std::to_string(k));
      long r = delta_level(data, v);
      std::vector<long> w = finite_part(v, r);
      std::vector<long> neg(w.size());
      std::transform(w.begin(), w.end(), neg.begin(), [](long x) { return -x; });
      if (r <= 0 || !finset.count(neg))
        throw IotaValidationError(
            k, "beta_k not of the form r*delta - alpha at k = " + std::to_string(k));
      covered.insert({r, neg});
    }
    for (long r = 1; r <= level_bound; ++r)
      for (const auto& alpha : fin)
        if (!covered.count({r, alpha}))
          throw IotaValidationError(
              0, "positive side does not cover delta-level " + std::to_string(r));
  }
  {  // nonpositive side: distinct, in {r delta + alpha, r >= 0}, covering r < N
    auto betas = beta_nonpositive_side(data, iota, window);
    std::set<std::vector<long>> seen;
    std::set<std::pair<long, std::vector<long>>> covered;
    for (long k = 0; k > -window; --k) {
      const auto& v = betas[static_cast<std::size_t>(-k)];
      if (!seen.insert(v).second)
        throw IotaValidationError(k, "repeated root beta_k at k = " + std::to_string(k));
      long r = delta_level(data, v);
      std::vector<long> w = finite_part(v, r);
      if (r < 0 || !finset.count(w))
        throw IotaValidationError(
            k, "beta_k not of the form r*delta + alpha at k = " + std::to_string(k));
      covered.insert({r, w});
    }
    for (long r = 0; r < level_bound; ++r)
      for (const auto& alpha : fin)
        if (!covered.count({r, alpha}))
          throw IotaValidationError(
              0, "nonpositive side does not cover delta-level " + std::to_string(r));
  }
}

namespace {

// Shipped period words (positive side; the nonpositive side is the reverse).
// Each is a reduced word of a strictly dominant translation, pre-verified up
// to delta-level 6 and re-validated on every use.
const std::map<std::pair<TypeLabel, int>, std::vector<int>>& shipped_words() {
  static const std::map<std::pair<TypeLabel, int>, std::vector<int>> words = {
      {{TypeLabel::A, 1}, {0, 1}},
      {{TypeLabel::A, 2}, {0, 1, 2, 1}},
      {{TypeLabel::B, 3}, {0, 2, 3, 1, 2, 3, 0, 2, 3, 1, 2, 3, 0, 2, 3, 1, 0, 2, 3, 1, 2, 1}},
      {{TypeLabel::C, 2}, {0, 1, 2, 0, 1, 2, 0, 1, 2, 1}},
      {{TypeLabel::D, 4},
       {0, 2, 3, 1, 2, 4, 0, 2, 3, 1, 0, 2, 4, 1, 0, 2, 3, 2, 1, 0, 2, 4, 1, 2, 3, 1, 2, 1}},
      {{TypeLabel::G, 2}, {0, 2, 1, 2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 2, 1}},
  };
  return words;
}

// Reduced word of the translation by nu(lambda) for a strictly dominant
// lambda = sum c_i alpha_i^vee.  Every mu in Q has (mu|delta) = 0, so the
// translation acts on Q by t(mu) = mu - (mu|nu(lambda)) delta with
// (alpha_j|nu(lambda)) = sum_i c_i a_ij.
std::vector<int> translation_word(const CartanData& data, const std::vector<long>& c) {
  int n = data.rank;
  std::vector<long> pair(static_cast<std::size_t>(n + 1), 0);
  for (int j = 0; j <= n; ++j) {
    long p = 0;
    for (int i = 1; i <= n; ++i) p += c[static_cast<std::size_t>(i - 1)] * data.a[i][j];
    pair[static_cast<std::size_t>(j)] = p;
  }
  std::vector<std::vector<long>> cols(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    cols[j].assign(static_cast<std::size_t>(n + 1), 0);
    cols[j][static_cast<std::size_t>(j)] = 1;
    for (int t = 0; t <= n; ++t) cols[j][t] -= pair[static_cast<std::size_t>(j)] * data.marks[t];
  }
  auto is_negative = [](const std::vector<long>& v) {
    bool any = false;
    for (long x : v) {
      if (x > 0) return false;
      if (x < 0) any = true;
    }
    return any;
  };
  std::vector<int> word;
  for (long guard = 0;; ++guard) {
    if (guard > 2000000) throw std::logic_error("translation word extraction did not terminate");
    int desc = -1;
    for (int i = 0; i <= n; ++i)
      if (is_negative(cols[static_cast<std::size_t>(i)])) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    word.push_back(desc);
    std::vector<std::vector<long>> next = cols;
    for (int j = 0; j <= n; ++j) {
      int aij = data.a[desc][j];
      if (aij == 0) continue;
      for (int t = 0; t <= n; ++t) next[j][t] -= aij * cols[static_cast<std::size_t>(desc)][t];
    }
    cols = std::move(next);
  }
  for (int j = 0; j <= n; ++j)
    for (int t = 0; t <= n; ++t)
      if (cols[j][static_cast<std::size_t>(t)] != (j == t ? 1 : 0))
        throw std::logic_error("translation word extraction left a nontrivial action");
  std::reverse(word.begin(), word.end());
  return word;
}

// Strictly dominant positive integer combination of coroots: the coroot
// coordinates of (a multiple of) rho^vee, obtained by solving A^T c = 1
// exactly and clearing denominators.
std::vector<long> strictly_dominant_coeffs(const CartanData& data) {
  int n = data.rank;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[j][i] = Rational(data.a[i + 1][j + 1]);
    m[j][static_cast<std::size_t>(n)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (!is_zero(m[row][col])) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("singular finite Cartan matrix");
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
    Rational lead = m[col][col];
    for (int t = col; t <= n; ++t) m[col][t] /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col || is_zero(m[row][col])) continue;
      Rational f = m[row][col];
      for (int t = col; t <= n; ++t) m[row][t] -= f * m[col][t];
    }
  }
  mpz_class lcm(1);
  for (int i = 0; i < n; ++i)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][static_cast<std::size_t>(n)].get_den().get_mpz_t());
  std::vector<long> c(static_cast<std::size_t>(n), 0);
  mpz_class g(0);
  for (int i = 0; i < n; ++i) {
    Rational v = m[i][static_cast<std::size_t>(n)] * Rational(lcm);
    v.canonicalize();
    if (sgn(v) <= 0) throw std::logic_error("rho^vee solve gave a nonpositive coordinate");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    c[static_cast<std::size_t>(i)] = v.get_num().get_si();
  }
  long gg = g.get_si();
  if (gg > 1)
    for (auto& x : c) x /= gg;
  return c;
}

}  // namespace

IotaWord build_iota(const CartanData& data, long level_bound) {
  auto it = shipped_words().find({data.type, data.rank});
  std::vector<int> word;
  if (it != shipped_words().end()) {
    word = it->second;
  } else {
    word = translation_word(data, strictly_dominant_coeffs(data));
  }
  return build_iota_from_word(data, word, level_bound);
}

IotaWord build_iota_from_word(const CartanData& data, const std::vector<int>& period_pos,
                              long level_bound) {
  IotaWord iota;
  iota.period_pos = period_pos;
  iota.period_nonpos.assign(period_pos.rbegin(), period_pos.rend());
  validate_iota(data, iota, level_bound);
  return iota;
}

OrderedRoots::OrderedRoots(const CartanData& data, const IotaWord& iota, long level_bound)
    : level_bound_(level_bound) {
  int n = data.rank;
  std::size_t per_side =
      finite_positive_root_count(data.type, data.rank) * static_cast<std::size_t>(level_bound);
  long period = static_cast<long>(std::max(iota.period_pos.size(), iota.period_nonpos.size()));
  long window = (level_bound + 2) * period + static_cast<long>(per_side);

  {  // beta_k for k >= 1, ascending k, level <= N
    auto betas = beta_positive_side(data, iota, window);
    for (const auto& v : betas) {
      if (roots_.size() >= per_side) break;
      if (delta_level(data, v) <= level_bound) roots_.push_back(real_root(v));
    }
  }
  // imaginary block: (r delta, i), r descending, i ascending within each r
  for (long r = level_bound; r >= 1; --r)
    for (int i = 1; i <= n; ++i) roots_.push_back(imaginary_root(data, r, i));
  {  // beta_k for k <= 0, ascending k toward 0, level < N
    auto betas = beta_nonpositive_side(data, iota, window);
    std::vector<Root> tail;
    for (const auto& v : betas) {
      if (tail.size() >= per_side) break;
      if (delta_level(data, v) < level_bound) tail.push_back(real_root(v));
    }
    for (auto it2 = tail.rbegin(); it2 != tail.rend(); ++it2) roots_.push_back(*it2);
  }
  index_.reserve(roots_.size());
  for (std::size_t p = 0; p < roots_.size(); ++p) index_.push_back({roots_[p], p});
  std::sort(index_.begin(), index_.end());
}

std::size_t OrderedRoots::position(const Root& x) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), x,
                             [](const auto& a, const Root& b) { return a.first < b; });
  if (it == index_.end() || !(it->first == x))
    throw std::invalid_argument("root not in enumerated range");
  return it->second;
}

int OrderedRoots::compare(const Root& x, const Root& y) const {
  std::size_t px = position(x), py = position(y);
  return px < py ? -1 : px > py ? 1 : 0;
}

LaurentPoly q_alpha(const CartanData& data, const Root& root) {
  return LaurentPoly::term(q_alpha_exponent(data, root));
}

long q_alpha_exponent(const CartanData& data, const Root& root) {
  if (root.kind == RootKind::Imaginary) return data.d[static_cast<std::size_t>(root.mult_index)];
  LatticeVec v;
  v.coords = root.coords;
  long norm = bilinear(data, v, v);
  if (norm <= 0 || norm % 2 != 0) throw std::invalid_argument("not a real root");
  return norm / 2;
}

}  // namespace qpbw
