#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dirac/errors.hpp"
#include "dirac/rootsystem.hpp"
#include "dirac/weight.hpp"

namespace dirac {

// A Weyl group element as an integer matrix on fundamental-weight
// coordinates: (M v)_i = sum_j M[i][j] v_j.
struct WeylElement {
  int rank = 0;
  std::vector<std::vector<long long>> matrix;
  std::optional<std::vector<int>> word;  // 1-based letters, leftmost first
};

inline WeylElement identity_element(int rank) {
  WeylElement e;
  e.rank = rank;
  e.matrix.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) e.matrix[i][i] = 1;
  e.word = std::vector<int>{};
  return e;
}

inline Weight apply(const WeylElement& w, const Weight& v) {
  if (static_cast<int>(v.size()) != w.rank)
    throw UsageError("apply: dimension mismatch");
  Weight r(w.rank, 0);
  for (int i = 0; i < w.rank; ++i)
    for (int j = 0; j < w.rank; ++j) r[i] += w.matrix[i][j] * v[j];
  return r;
}

// Word convention: [i1,...,ik] denotes s_{i1} ... s_{ik}; applying to a
// weight evaluates the rightmost letter first.
inline Weight apply_word(const RootDatum& d, const std::vector<int>& word,
                         Weight v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (i < 1 || i > d.rank) throw UsageError("word letter out of range");
    reflect_simple(d, i - 1, v);
  }
  return v;
}

inline WeylElement from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElement w;
  w.rank = d.rank;
  w.matrix.assign(d.rank, std::vector<long long>(d.rank, 0));
  for (int k = 0; k < d.rank; ++k) {
    Weight e(d.rank, 0);
    e[k] = 1;
    Weight img = apply_word(d, word, e);
    for (int j = 0; j < d.rank; ++j) w.matrix[j][k] = img[j];
  }
  w.word = word;
  return w;
}

inline WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  if (a.rank != b.rank) throw UsageError("multiply: rank mismatch");
  WeylElement c;
  c.rank = a.rank;
  c.matrix.assign(a.rank, std::vector<long long>(a.rank, 0));
  for (int i = 0; i < a.rank; ++i)
    for (int k = 0; k < a.rank; ++k) {
      long long aik = a.matrix[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < a.rank; ++j) c.matrix[i][j] += aik * b.matrix[k][j];
    }
  if (a.word && b.word) {
    auto w = *a.word;
    w.insert(w.end(), b.word->begin(), b.word->end());
    c.word = std::move(w);
  }
  return c;
}

inline WeylElement inverse(const WeylElement& a) {
  WeylElement inv;
  inv.rank = a.rank;
  // Gauss-Jordan over exact rationals; Weyl matrices are unimodular, so the
  // result is integral.
  const int n = a.rank;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a.matrix[i][j]);
    m[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw UsageError("inverse: singular matrix");
    std::swap(m[piv], m[col]);
    Rat dd = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= dd;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == Rat(0)) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  inv.matrix.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m[i][n + j].denominator() != 1)
        throw UsageError("inverse: non-integral inverse");
      inv.matrix[i][j] = m[i][n + j].numerator();
    }
  if (a.word) {
    auto w = *a.word;
    std::reverse(w.begin(), w.end());
    inv.word = std::move(w);
  }
  return inv;
}

inline bool is_identity(const WeylElement& w) {
  for (int i = 0; i < w.rank; ++i)
    for (int j = 0; j < w.rank; ++j)
      if (w.matrix[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

inline bool is_involution(const WeylElement& w) {
  return is_identity(multiply(w, w));
}

// w s w^{-1}.
inline WeylElement conjugate(const WeylElement& w, const WeylElement& s) {
  return multiply(multiply(w, s), inverse(w));
}

// Recovers the unique w with w.rho = v from a point of the regular orbit.
inline WeylElement from_regular_image(const RootDatum& d, const Weight& v) {
  if (static_cast<int>(v.size()) != d.rank)
    throw UsageError("from_regular_image: dimension mismatch");
  auto [dom, word] = make_dominant_word(d, v);
  if (dom != d.rho)
    throw NotInOrbitError("weight is not in the orbit of rho: " +
                          format_weight(v));
  // word maps v to rho, so its reverse maps rho to v.
  std::reverse(word.begin(), word.end());
  WeylElement w = from_word(d, word);
  return w;
}

struct InvolutionRecord {
  WeylElement element;
  Weight s_rho;                // doubled coordinates of s.rho
  std::vector<int> fixed_set;  // I(s): 1-based i with s(varpi_i) = varpi_i
};

inline std::vector<int> fixed_fundamental_weights(const WeylElement& w) {
  std::vector<int> fs;
  for (int j = 0; j < w.rank; ++j) {
    bool fixed = true;
    for (int i = 0; i < w.rank; ++i)
      if (w.matrix[i][j] != (i == j ? 1 : 0)) fixed = false;
    if (fixed) fs.push_back(j + 1);
  }
  return fs;
}

inline InvolutionRecord make_involution_record(const RootDatum& d,
                                               const WeylElement& s) {
  if (!is_involution(s))
    throw UsageError("make_involution_record: element is not an involution");
  InvolutionRecord r;
  r.element = s;
  r.s_rho = dirac::apply(s, d.rho);
  r.fixed_set = fixed_fundamental_weights(s);
  return r;
}

namespace detail {

// Orbit coordinates of rho are bounded by the Coxeter number minus one
// (at most 17 here); pack rank <= 7 coordinates into 6-bit fields.
inline std::uint64_t pack_orbit_point(const std::array<int8_t, 8>& v,
                                      int rank) {
  std::uint64_t key = 0;
  for (int i = 0; i < rank; ++i)
    key |= static_cast<std::uint64_t>(v[i] + 32) << (6 * i);
  return key;
}

inline std::array<int8_t, 8> unpack_orbit_point(std::uint64_t key, int rank) {
  std::array<int8_t, 8> v{};
  for (int i = 0; i < rank; ++i)
    v[i] = static_cast<int8_t>(((key >> (6 * i)) & 63) - 32);
  return v;
}

}  // namespace detail

// Breadth-first search over the regular orbit of rho, one visit per group
// element (the orbit point w.rho keys w). Frontiers are sorted, so the visit
// order is deterministic. The visitor receives the actual (not doubled)
// coordinates of w.rho.
template <typename Visitor>
inline std::uint64_t enumerate_group(const RootDatum& d, Visitor&& visit) {
  const int n = d.rank;
  std::array<int8_t, 8> start{};
  for (int i = 0; i < n; ++i) start[i] = 1;
  std::array<std::array<int8_t, 8>, 7> cartan_rows{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cartan_rows[i][j] = static_cast<int8_t>(d.cartan[i][j]);

  std::unordered_set<std::uint64_t> visited;
  visited.reserve(1 << 22);
  std::vector<std::uint64_t> frontier{detail::pack_orbit_point(start, n)};
  visited.insert(frontier[0]);
  std::uint64_t count = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : frontier) {
      auto v = detail::unpack_orbit_point(key, n);
      visit(v, n);
      ++count;
      for (int i = 0; i < n; ++i) {
        int8_t vi = v[i];
        if (vi == 0) continue;
        auto u = v;
        for (int j = 0; j < n; ++j)
          u[j] = static_cast<int8_t>(u[j] - vi * cartan_rows[i][j]);
        std::uint64_t k2 = detail::pack_orbit_point(u, n);
        if (visited.insert(k2).second) next.push_back(k2);
      }
    }
    frontier = std::move(next);
  }
  return count;
}

inline std::uint64_t group_order(const RootDatum& d) {
  return enumerate_group(d, [](const std::array<int8_t, 8>&, int) {});
}

// All involutions, sorted lexicographically by s_rho.
inline std::vector<InvolutionRecord> enumerate_involutions(const RootDatum& d) {
  const int n = d.rank;
  std::vector<Weight> srhos;
  enumerate_group(d, [&](const std::array<int8_t, 8>& v, int rank) {
    // w is an involution iff applying w to w.rho returns rho. The greedy
    // dominance walk on v yields a word for w^{-1}; replay its reverse on v.
    std::array<int8_t, 8> u = v;
    int word[128];
    int len = 0;
    for (;;) {
      int neg = -1;
      for (int i = 0; i < rank; ++i)
        if (u[i] < 0) {
          neg = i;
          break;
        }
      if (neg < 0) break;
      int8_t ui = u[neg];
      for (int j = 0; j < rank; ++j)
        u[j] = static_cast<int8_t>(u[j] - ui * static_cast<int8_t>(d.cartan[neg][j]));
      word[len++] = neg;
    }
    // u == rho now; apply w = s_{word[0]} ... s_{word[len-1]} read so that
    // word[len-1] acts first, to v.
    std::array<int8_t, 8> t = v;
    for (int k = len - 1; k >= 0; --k) {
      int i = word[k];
      int8_t ti = t[i];
      if (ti == 0) continue;
      for (int j = 0; j < rank; ++j)
        t[j] = static_cast<int8_t>(t[j] - ti * static_cast<int8_t>(d.cartan[i][j]));
    }
    for (int i = 0; i < rank; ++i)
      if (t[i] != 1) return;
    Weight srho(rank);
    for (int i = 0; i < rank; ++i) srho[i] = 2 * v[i];
    srhos.push_back(std::move(srho));
  });
  std::sort(srhos.begin(), srhos.end());
  std::vector<InvolutionRecord> out;
  out.reserve(srhos.size());
  for (const auto& srho : srhos) {
    WeylElement s = from_regular_image(d, srho);
    InvolutionRecord rec;
    rec.element = std::move(s);
    rec.s_rho = srho;
    rec.fixed_set = fixed_fundamental_weights(rec.element);
    out.push_back(std::move(rec));
  }
  return out;
}

// Dynkin-diagram automorphism as a node permutation: coordinate i of the
// dual weight is coordinate perm[i] of the original.
inline std::vector<int> dual_permutation(const RootDatum& d) {
  std::vector<int> p(d.rank);
  for (int i = 0; i < d.rank; ++i) p[i] = i;
  if (d.type_label[0] == 'A') {
    std::reverse(p.begin(), p.end());
  } else if (d.type_label[0] == 'D') {
    std::swap(p[d.rank - 2], p[d.rank - 1]);
  } else if (d.type_label == "E6") {
    p = {5, 1, 4, 3, 2, 0};
  }  // E7: identity
  return p;
}

inline Weight diagram_dual(const RootDatum& d, const Weight& mu) {
  auto p = dual_permutation(d);
  Weight r(d.rank);
  for (int i = 0; i < d.rank; ++i) r[i] = mu[p[i]];
  return r;
}

inline WeylElement diagram_dual(const RootDatum& d, const WeylElement& w) {
  auto p = dual_permutation(d);
  WeylElement r;
  r.rank = w.rank;
  r.matrix.assign(w.rank, std::vector<long long>(w.rank, 0));
  for (int i = 0; i < w.rank; ++i)
    for (int j = 0; j < w.rank; ++j) r.matrix[i][j] = w.matrix[p[i]][p[j]];
  return r;
}

inline void write_census_tsv(std::ostream& out,
                             const std::vector<InvolutionRecord>& records) {
  out << "srho\tword\tfixed_set\n";
  for (const auto& rec : records) {
    out << format_weight(rec.s_rho) << '\t';
    if (rec.element.word) {
      const auto& w = *rec.element.word;
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ',';
        out << w[i];
      }
    }
    out << '\t';
    for (size_t i = 0; i < rec.fixed_set.size(); ++i) {
      if (i) out << ',';
      out << rec.fixed_set[i];
    }
    out << '\n';
  }
}

}  // namespace dirac
