#include "qpbw/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qpbw {

TypeLabel type_label_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return TypeLabel::A;
    case 'B': case 'b': return TypeLabel::B;
    case 'C': case 'c': return TypeLabel::C;
    case 'D': case 'd': return TypeLabel::D;
    case 'E': case 'e': return TypeLabel::E;
    case 'F': case 'f': return TypeLabel::F;
    case 'G': case 'g': return TypeLabel::G;
  }
  throw std::invalid_argument(std::string("unknown type label '") + c + "'");
}

char type_label_char(TypeLabel t) {
  switch (t) {
    case TypeLabel::A: return 'A';
    case TypeLabel::B: return 'B';
    case TypeLabel::C: return 'C';
    case TypeLabel::D: return 'D';
    case TypeLabel::E: return 'E';
    case TypeLabel::F: return 'F';
    case TypeLabel::G: return 'G';
  }
  return '?';
}

std::string CartanData::type_string() const {
  return std::string(1, type_label_char(type)) + std::to_string(rank);
}

LatticeVec CartanData::alpha(int i) const {
  LatticeVec v;
  v.coords.assign(static_cast<std::size_t>(rank + 1), 0);
  v.coords[static_cast<std::size_t>(i)] = 1;
  return v;
}

LatticeVec CartanData::delta() const {
  LatticeVec v;
  v.coords.assign(marks.begin(), marks.end());
  return v;
}

LatticeVec CartanData::alpha_inf() const {
  LatticeVec v;
  v.coords.assign(static_cast<std::size_t>(rank + 1), 0);
  v.c_inf = 1;
  return v;
}

namespace {

struct FiniteData {
  std::vector<std::vector<int>> a;  // n x n
  std::vector<int> d;
  std::vector<int> theta;  // highest root coordinates
};

// Finite Cartan matrices in Bourbaki numbering, geometric normalization
// (short roots have d = 1).  The type/numbering identification lives here
// and only here.
FiniteData finite_data(TypeLabel type, int n) {
  auto bad = [&] {
    return std::invalid_argument("invalid untwisted type " +
                                 std::string(1, type_label_char(type)) + "_" +
                                 std::to_string(n));
  };
  FiniteData f;
  f.a.assign(static_cast<std::size_t>(n < 0 ? 0 : n),
             std::vector<int>(static_cast<std::size_t>(n < 0 ? 0 : n), 0));
  if (n < 1) throw bad();
  for (int i = 0; i < n; ++i) f.a[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    f.a[i][j] = aij;
    f.a[j][i] = aji;
  };
  switch (type) {
    case TypeLabel::A: {
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      f.d.assign(n, 1);
      f.theta.assign(n, 1);
      break;
    }
    case TypeLabel::B: {
      if (n < 3) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);  // alpha_n short
      f.d.assign(n, 2);
      f.d[n - 1] = 1;
      f.theta.assign(n, 2);
      f.theta[0] = 1;
      break;
    }
    case TypeLabel::C: {
      if (n < 2) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);  // alpha_n long
      f.d.assign(n, 1);
      f.d[n - 1] = 2;
      f.theta.assign(n, 2);
      f.theta[n - 1] = 1;
      break;
    }
    case TypeLabel::D: {
      if (n < 4) throw bad();
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      f.d.assign(n, 1);
      f.theta.assign(n, 2);
      f.theta[0] = f.theta[n - 2] = f.theta[n - 1] = 1;
      break;
    }
    case TypeLabel::E: {
      if (n < 6 || n > 8) throw bad();
      // chain 1-3-4-...-n with node 2 attached to node 4 (Bourbaki)
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      f.d.assign(n, 1);
      if (n == 6) f.theta = {1, 2, 2, 3, 2, 1};
      if (n == 7) f.theta = {2, 2, 3, 4, 3, 2, 1};
      if (n == 8) f.theta = {2, 3, 4, 6, 5, 4, 3, 2};
      break;
    }
    case TypeLabel::F: {
      if (n != 4) throw bad();
      link(0, 1);
      link(1, 2, -1, -2);  // alpha_1, alpha_2 long
      link(2, 3);
      f.d = {2, 2, 1, 1};
      f.theta = {2, 3, 4, 2};
      break;
    }
    case TypeLabel::G: {
      if (n != 2) throw bad();
      link(0, 1, -3, -1);  // alpha_1 short, alpha_2 long
      f.d = {1, 3};
      f.theta = {3, 2};
      break;
    }
  }
  return f;
}

std::vector<int> two_coloring(const std::vector<std::vector<int>>& a_fin) {
  int n = static_cast<int>(a_fin.size());
  std::vector<int> o(static_cast<std::size_t>(n), 0);
  o[0] = 1;  // convention o(1) = +1
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || a_fin[i][j] == 0) continue;
      if (o[j] == 0) {
        o[j] = -o[static_cast<std::size_t>(i)];
        queue.push_back(j);
      }
    }
  }
  return o;
}

}  // namespace

CartanData cartan_affine(TypeLabel type, int rank) {
  FiniteData fin = finite_data(type, rank);
  int n = rank;
  CartanData data;
  data.type = type;
  data.rank = n;
  data.a.assign(static_cast<std::size_t>(n + 1),
                std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  data.a[0][0] = 2;
  long th_norm2 = 0;
  std::vector<long> th_pair(static_cast<std::size_t>(n), 0);  // (theta|alpha_j)
  for (int j = 0; j < n; ++j) {
    long p = 0;
    for (int k = 0; k < n; ++k) p += static_cast<long>(fin.theta[k]) * fin.d[k] * fin.a[k][j];
    th_pair[static_cast<std::size_t>(j)] = p;
    th_norm2 += p * fin.theta[j];
  }
  long d0 = th_norm2 / 2;
  // alpha_0 = delta - theta, so (alpha_0|alpha_j) = -(theta|alpha_j)
  for (int j = 0; j < n; ++j) {
    data.a[0][j + 1] = static_cast<int>(-th_pair[j] / d0);
    data.a[j + 1][0] = static_cast<int>(-th_pair[j] / fin.d[j]);
    for (int k = 0; k < n; ++k) data.a[j + 1][k + 1] = fin.a[j][k];
  }
  data.d.assign(static_cast<std::size_t>(n + 1), 0);
  data.d[0] = static_cast<int>(d0);
  for (int j = 0; j < n; ++j) data.d[j + 1] = fin.d[j];
  data.marks.assign(static_cast<std::size_t>(n + 1), 0);
  data.marks[0] = 1;
  for (int j = 0; j < n; ++j) data.marks[j + 1] = fin.theta[j];
  data.o.assign(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> col = two_coloring(fin.a);
  for (int j = 0; j < n; ++j) data.o[j + 1] = col[j];

  int g = 0;
  for (int i = 0; i <= n; ++i) g = std::gcd(g, data.d[i]);
  if (g != 1) throw std::logic_error("Cartan symmetrizers not coprime");
  for (int i = 0; i <= n; ++i) {
    if (data.a[i][i] != 2) throw std::logic_error("Cartan diagonal not 2");
    for (int j = 0; j <= n; ++j) {
      if (i != j && data.a[i][j] > 0) throw std::logic_error("positive off-diagonal entry");
      if ((data.a[i][j] == 0) != (data.a[j][i] == 0))
        throw std::logic_error("asymmetric zero pattern");
      if (data.d[i] * data.a[i][j] != data.d[j] * data.a[j][i])
        throw std::logic_error("DA not symmetric");
    }
  }
  for (int i = 0; i <= n; ++i) {
    long s = 0;
    for (int j = 0; j <= n; ++j) s += static_cast<long>(data.a[i][j]) * data.marks[j];
    if (s != 0) throw std::logic_error("delta marks not in kernel of a");
  }
  return data;
}

CartanData cartan_affine(const std::string& type, int rank) {
  if (type.empty()) throw std::invalid_argument("empty type label");
  return cartan_affine(type_label_from_char(type[0]), rank);
}

long bilinear(const CartanData& data, const LatticeVec& mu, const LatticeVec& nu) {
  int n = data.rank;
  if (mu.coords.size() != static_cast<std::size_t>(n + 1) ||
      nu.coords.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("bilinear: coordinate length mismatch");
  long s = 0;
  for (int i = 0; i <= n; ++i) {
    if (mu.coords[i] == 0) continue;
    for (int j = 0; j <= n; ++j)
      s += mu.coords[i] * static_cast<long>(data.d[i]) * data.a[i][j] * nu.coords[j];
  }
  // (alpha_inf|mu) equals the delta coefficient of mu, which is mu's
  // alpha_0 coordinate since alpha_0 is the only simple root carrying delta.
  s += mu.c_inf * nu.coords[0];
  s += nu.c_inf * mu.coords[0];
  return s;
}

LatticeVec reflect(const CartanData& data, int i, const LatticeVec& mu) {
  int n = data.rank;
  if (i < 0 || i > n) throw std::invalid_argument("reflect: node index out of range");
  LatticeVec out = mu;
  // 2 (mu|alpha_i)/(alpha_i|alpha_i) = sum_j a_ij mu_j + [i = 0] c_inf / d_0
  long c = 0;
  for (int j = 0; j <= n; ++j) c += static_cast<long>(data.a[i][j]) * mu.coords[j];
  if (i == 0 && mu.c_inf != 0) {
    if (mu.c_inf % data.d[0] != 0)
      throw std::domain_error("reflect: alpha_inf component does not reflect integrally");
    c += mu.c_inf / data.d[0];
  }
  out.coords[static_cast<std::size_t>(i)] -= c;
  return out;
}

std::size_t finite_positive_root_count(TypeLabel type, int rank) {
  std::size_t n = static_cast<std::size_t>(rank);
  switch (type) {
    case TypeLabel::A: return n * (n + 1) / 2;
    case TypeLabel::B:
    case TypeLabel::C: return n * n;
    case TypeLabel::D: return n * (n - 1);
    case TypeLabel::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case TypeLabel::F: return 24;
    case TypeLabel::G: return 6;
  }
  return 0;
}

std::vector<std::vector<long>> finite_positive_roots(const CartanData& data) {
  int n = data.rank;
  std::set<std::vector<long>> roots;
  std::deque<std::vector<long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    roots.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<long> v = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      long c = 0;
      for (int j = 0; j < n; ++j) c += static_cast<long>(data.a[i + 1][j + 1]) * v[j];
      std::vector<long> w = v;
      w[static_cast<std::size_t>(i)] -= c;
      if (std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; }) && !roots.count(w)) {
        roots.insert(w);
        frontier.push_back(w);
      }
    }
  }
  if (roots.size() != finite_positive_root_count(data.type, data.rank))
    throw std::logic_error("finite positive root count mismatch for " + data.type_string());
  return {roots.begin(), roots.end()};
}

}  // namespace qpbw
