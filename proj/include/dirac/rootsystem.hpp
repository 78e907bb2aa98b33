#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dirac/errors.hpp"
#include "dirac/rational.hpp"
#include "dirac/weight.hpp"

namespace dirac {

using BigInt = boost::multiprecision::cpp_int;

// Cartan data for one simply-laced type, in the fundamental-weight
// coordinate convention: a simple reflection acts on coordinates by
// s_i : lambda -> lambda - lambda_i * (row i of the Cartan matrix).
struct RootDatum {
  std::string type_label;
  int rank = 0;
  std::vector<std::vector<long long>> cartan;
  // Positive roots in the simple-root basis (nonnegative integer vectors).
  std::vector<std::vector<long long>> positive_roots;
  std::vector<std::vector<Rat>> inverse_cartan;
  Weight rho;           // doubled coordinates: all entries 2
  Weight highest_root;  // doubled fundamental-weight coordinates
  std::vector<long long> level_vector;  // entry i = height of varpi_{i+1}
};

namespace detail {

inline std::vector<std::vector<Rat>> invert_matrix(
    const std::vector<std::vector<long long>>& m) {
  const size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw ConfigError("singular matrix in invert_matrix");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (size_t j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Edge list (1-based node pairs) of the Dynkin diagram for a supported label.
inline std::vector<std::pair<int, int>> dynkin_edges(const std::string& label,
                                                     int* rank_out) {
  auto path = [](int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return e;
  };
  if (label.size() == 2 && label[0] == 'A' && label[1] >= '1' &&
      label[1] <= '6') {
    int n = label[1] - '0';
    *rank_out = n;
    return path(n);
  }
  if (label.size() == 2 && label[0] == 'D' && label[1] >= '4' &&
      label[1] <= '6') {
    int n = label[1] - '0';
    *rank_out = n;
    auto e = path(n - 1);
    e.emplace_back(n - 2, n);
    return e;
  }
  if (label == "E6") {
    *rank_out = 6;
    return {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  }
  if (label == "E7") {
    *rank_out = 7;
    return {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
  }
  throw ConfigError("unsupported type label: " + label);
}

}  // namespace detail

inline RootDatum build_root_datum(const std::string& type_label) {
  RootDatum d;
  d.type_label = type_label;
  auto edges = detail::dynkin_edges(type_label, &d.rank);
  const int n = d.rank;
  d.cartan.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  for (auto [a, b] : edges) {
    d.cartan[a - 1][b - 1] = -1;
    d.cartan[b - 1][a - 1] = -1;
  }
  d.inverse_cartan = detail::invert_matrix(d.cartan);

  // Closure of the simple roots under simple reflections, in the root basis:
  // s_i(c)_i -= sum_j c_j * cartan[j][i].
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < n; ++i) {
        long long k = 0;
        for (int j = 0; j < n; ++j) k += r[j] * d.cartan[j][i];
        auto nr = r;
        nr[i] -= k;
        if (roots.insert(nr).second) next.push_back(nr);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& r : roots) {
    bool pos = true;
    for (long long x : r) pos = pos && x >= 0;
    if (pos) d.positive_roots.push_back(r);
  }

  d.rho.assign(n, 2);

  // Fundamental-weight coordinates of a root-basis vector: v_k = (c^T C)_k.
  for (const auto& r : d.positive_roots) {
    Weight v(n, 0);
    bool dominant = true;
    for (int k = 0; k < n; ++k) {
      long long s = 0;
      for (int j = 0; j < n; ++j) s += r[j] * d.cartan[j][k];
      v[k] = 2 * s;  // doubled
      dominant = dominant && s >= 0;
    }
    if (dominant) {
      if (!d.highest_root.empty())
        throw ConfigError("multiple dominant roots in " + type_label);
      d.highest_root = v;
    }
  }
  if (d.highest_root.empty())
    throw ConfigError("no dominant root in " + type_label);

  d.level_vector.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    Rat h(0);
    for (int j = 0; j < n; ++j) h += 2 * d.inverse_cartan[j][i];
    if (h.denominator() != 1)
      throw ConfigError("non-integral level in " + type_label);
    d.level_vector[i] = h.numerator();
  }
  return d;
}

// Exact W-invariant bilinear form, normalized so each root has squared
// length 2: <mu, nu> = mu^T C^{-1} nu on actual coordinates, evaluated here
// on doubled coordinates (hence the division by 4).
inline Rat inner_product(const RootDatum& d, const Weight& mu,
                         const Weight& nu) {
  if (static_cast<int>(mu.size()) != d.rank ||
      static_cast<int>(nu.size()) != d.rank)
    throw UsageError("inner_product: dimension mismatch");
  Rat acc(0);
  for (int i = 0; i < d.rank; ++i) {
    if (mu[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < d.rank; ++j)
      if (nu[j] != 0) row += d.inverse_cartan[i][j] * nu[j];
    row *= mu[i];
    acc += row;
  }
  return acc / 4;
}

inline Rat norm_sq(const RootDatum& d, const Weight& mu) {
  return inner_product(d, mu, mu);
}

// Coordinates c with mu = sum_i c_i alpha_i.
inline std::vector<Rat> to_simple_root_basis(const RootDatum& d,
                                             const Weight& mu) {
  if (static_cast<int>(mu.size()) != d.rank)
    throw UsageError("to_simple_root_basis: dimension mismatch");
  std::vector<Rat> c(d.rank, Rat(0));
  for (int i = 0; i < d.rank; ++i) {
    for (int j = 0; j < d.rank; ++j)
      if (mu[j] != 0) c[i] += d.inverse_cartan[i][j] * mu[j];
    c[i] /= 2;
  }
  return c;
}

inline bool in_root_lattice(const RootDatum& d, const Weight& mu) {
  for (const Rat& c : to_simple_root_basis(d, mu))
    if (c.denominator() != 1) return false;
  return true;
}

// Applies s_i (0-based index) in place on doubled coordinates.
inline void reflect_simple(const RootDatum& d, int i, Weight& v) {
  long long vi = v[i];
  if (vi == 0) return;
  for (int j = 0; j < d.rank; ++j) v[j] -= vi * d.cartan[i][j];
}

// Greedy reflection walk to the dominant chamber. Returns the dominant
// conjugate and a word (1-based letters, leftmost applied last) whose
// composite maps the input to the dominant representative.
inline std::pair<Weight, std::vector<int>> make_dominant_word(
    const RootDatum& d, Weight mu) {
  std::vector<int> applied;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < d.rank; ++i)
      if (mu[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    reflect_simple(d, neg, mu);
    applied.push_back(neg + 1);
  }
  std::reverse(applied.begin(), applied.end());
  return {std::move(mu), std::move(applied)};
}

inline Weight dominant_conjugate(const RootDatum& d, const Weight& mu) {
  return make_dominant_word(d, mu).first;
}

// <mu, alpha> for a positive root alpha in root-basis coordinates equals
// sum_i c_i * mu_i (actual coordinates).
inline bool is_regular(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.size()) != d.rank)
    throw UsageError("is_regular: dimension mismatch");
  for (const auto& r : d.positive_roots) {
    long long p = 0;
    for (int i = 0; i < d.rank; ++i) p += r[i] * mu[i];
    if (p == 0) return false;
  }
  return true;
}

inline BigInt weyl_dimension(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.size()) != d.rank)
    throw UsageError("weyl_dimension: dimension mismatch");
  if (!is_integral(mu)) throw UsageError("weyl_dimension: mu not integral");
  if (!is_dominant_weight(mu)) throw UsageError("weyl_dimension: mu not dominant");
  BigInt num = 1, den = 1;
  for (const auto& r : d.positive_roots) {
    long long a = 0, b = 0;
    for (int i = 0; i < d.rank; ++i) {
      a += r[i] * (mu[i] / 2 + 1);  // <mu+rho, alpha^vee>
      b += r[i];                    // <rho, alpha^vee> = height(alpha)
    }
    num *= a;
    den *= b;
  }
  BigInt q = num / den;
  if (q * den != num) throw ConfigError("weyl_dimension: non-integral result");
  return q;
}

// <mu, 2 rho^vee>, the atlas height statistic.
inline Rat height(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.size()) != d.rank)
    throw UsageError("height: dimension mismatch");
  Rat h(0);
  for (int i = 0; i < d.rank; ++i) h += Rat(mu[i] * d.level_vector[i], 2);
  return h;
}

// Dominant mu lies in the convex hull of W.(2 rho) iff 2 rho - mu is a
// nonnegative rational combination of simple roots.
inline bool is_u_small(const RootDatum& d, const Weight& mu) {
  if (!is_dominant_weight(mu)) throw UsageError("is_u_small: mu not dominant");
  Weight diff = sub(scale(2, d.rho), mu);
  for (const Rat& c : to_simple_root_basis(d, diff))
    if (c < Rat(0)) return false;
  return true;
}

}  // namespace dirac
