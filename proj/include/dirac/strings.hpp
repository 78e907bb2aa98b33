#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirac/errors.hpp"
#include "dirac/levi.hpp"
#include "dirac/rational.hpp"
#include "dirac/rootsystem.hpp"
#include "dirac/sieve.hpp"
#include "dirac/tables.hpp"
#include "dirac/weight.hpp"
#include "dirac/weylgroup.hpp"

namespace dirac {

// A vector of affine forms in the free variables. Entry [i][0] is the
// constant term of coordinate i in *actual* coordinates; entry [i][1 + v]
// multiplies free variable v, where each variable ranges over the doubled
// value of its coordinate.
struct AffineWeight {
  std::vector<std::vector<Rat>> coords;
};

inline std::string format_affine(const AffineWeight& w,
                                 const std::vector<std::string>& var_names) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out << ',';
    const auto& row = w.coords[i];
    bool printed = false;
    for (size_t v = 1; v < row.size(); ++v) {
      if (row[v] == Rat(0)) continue;
      if (printed && row[v] > Rat(0)) out << '+';
      if (row[v] == Rat(-1))
        out << '-';
      else if (row[v] != Rat(1))
        out << to_string(row[v]) << '*';
      out << var_names[v - 1];
      printed = true;
    }
    if (!printed) {
      out << to_string(row[0]);
    } else if (row[0] != Rat(0)) {
      if (row[0] > Rat(0)) out << '+';
      out << to_string(row[0]);
    }
  }
  out << ']';
  return out.str();
}

// A string of representations: an involution supported on a Levi subset,
// half-integral values pinned on the Levi nodes, and one free coordinate
// per complementary node.
struct StringFamily {
  LeviSubset levi;
  InvolutionRecord s_embedded;
  Weight fixed_pattern;         // doubled values on levi.nodes, 0 elsewhere
  std::vector<int> free_slots;  // 1-based node indices, ascending
};

inline StringFamily make_string_family(const RootDatum& d,
                                       const LeviSubset& levi,
                                       const InvolutionRecord& s_embedded,
                                       const Weight& fixed_pattern) {
  StringFamily f;
  f.levi = levi;
  f.s_embedded = s_embedded;
  f.fixed_pattern = fixed_pattern;
  std::vector<bool> in_levi(d.rank + 1, false);
  for (int v : levi.nodes) in_levi[v] = true;
  for (int i = 1; i <= d.rank; ++i)
    if (!in_levi[i]) f.free_slots.push_back(i);
  for (int i = 0; i < d.rank; ++i)
    if (!in_levi[i + 1] && fixed_pattern[i] != 0)
      throw UsageError("fixed_pattern must vanish on free slots");
  return f;
}

namespace detail {

// lambda as an affine vector (actual coordinates) in the doubled free
// variables.
inline AffineWeight family_lambda(const RootDatum& d, const StringFamily& f) {
  AffineWeight w;
  const size_t nv = f.free_slots.size();
  w.coords.assign(d.rank, std::vector<Rat>(1 + nv, Rat(0)));
  for (int i = 0; i < d.rank; ++i) w.coords[i][0] = Rat(f.fixed_pattern[i], 2);
  for (size_t v = 0; v < nv; ++v)
    w.coords[f.free_slots[v] - 1][1 + v] = Rat(1, 2);
  return w;
}

inline AffineWeight apply_matrix(const std::vector<std::vector<long long>>& m,
                                 const AffineWeight& w) {
  AffineWeight r;
  const size_t n = w.coords.size();
  r.coords.assign(n, std::vector<Rat>(w.coords[0].size(), Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j] == 0) continue;
      for (size_t k = 0; k < w.coords[j].size(); ++k)
        r.coords[i][k] += m[i][j] * w.coords[j][k];
    }
  return r;
}

inline AffineWeight affine_add(const AffineWeight& a, const AffineWeight& b) {
  AffineWeight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i)
    for (size_t k = 0; k < r.coords[i].size(); ++k)
      r.coords[i][k] += b.coords[i][k];
  return r;
}

inline AffineWeight affine_sub(const AffineWeight& a, const AffineWeight& b) {
  AffineWeight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i)
    for (size_t k = 0; k < r.coords[i].size(); ++k)
      r.coords[i][k] -= b.coords[i][k];
  return r;
}

}  // namespace detail

// Symbolic lambda + s.lambda; affine in the free variables.
inline AffineWeight family_lambda_plus(const RootDatum& d,
                                       const StringFamily& f) {
  AffineWeight lam = detail::family_lambda(d, f);
  return detail::affine_add(lam,
                            detail::apply_matrix(f.s_embedded.element.matrix, lam));
}

// Symbolic lambda - s.lambda; must be constant in the free variables.
inline AffineWeight family_lambda_minus(const RootDatum& d,
                                        const StringFamily& f) {
  AffineWeight lam = detail::family_lambda(d, f);
  AffineWeight r = detail::affine_sub(
      lam, detail::apply_matrix(f.s_embedded.element.matrix, lam));
  for (const auto& row : r.coords)
    for (size_t v = 1; v < row.size(); ++v)
      if (row[v] != Rat(0))
        throw ConfigError("lambda - s.lambda depends on a free variable");
  return r;
}

inline Weight family_lambda_at(const RootDatum& d, const StringFamily& f,
                               const std::vector<long long>& assignment) {
  if (assignment.size() != f.free_slots.size())
    throw UsageError("string family: wrong assignment arity");
  Weight lam = f.fixed_pattern;
  for (size_t v = 0; v < assignment.size(); ++v)
    lam[f.free_slots[v] - 1] = assignment[v];
  (void)d;
  return lam;
}

// Numeric member of the string at a strictly positive assignment.
inline Parameter string_family_eval(const RootDatum& d, const StringFamily& f,
                                    const std::vector<long long>& assignment) {
  return make_parameter(d, f.s_embedded,
                        family_lambda_at(d, f, assignment));
}

// Substitutes a nonpositive value and conjugates back into the parameter
// domain: the greedy reflection walk carries lambda to strictly positive
// coordinates while s is conjugated alongside. A zero coordinate at the end
// of the walk means lambda sits on a wall: no limit.
inline std::optional<Parameter> string_limit(
    const RootDatum& d, const StringFamily& f,
    const std::vector<long long>& assignment) {
  Weight lam = family_lambda_at(d, f, assignment);
  std::vector<int> walk;  // letters in application order
  for (;;) {
    int neg = -1;
    for (int i = 0; i < d.rank; ++i)
      if (lam[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    reflect_simple(d, neg, lam);
    walk.push_back(neg + 1);
  }
  for (long long x : lam)
    if (x == 0) return std::nullopt;
  // w = s_{walk[last]} ... s_{walk[0]}; as a word (leftmost first) that is
  // the reverse of the application order.
  std::vector<int> w_word(walk.rbegin(), walk.rend());
  WeylElement w = from_word(d, w_word);
  WeylElement s_new = conjugate(w, f.s_embedded.element);
  // Keep a word for the conjugated involution.
  if (f.s_embedded.element.word) {
    std::vector<int> word = w_word;
    word.insert(word.end(), f.s_embedded.element.word->begin(),
                f.s_embedded.element.word->end());
    word.insert(word.end(), walk.begin(), walk.end());
    s_new.word = std::move(word);
  }
  return make_parameter(d, make_involution_record(d, s_new), lam);
}

// Exact (s_rho, lambda) lookup; returns the 1-based row id or nullopt.
inline std::optional<int> match_table_row(
    const RootDatum& d, const Parameter& p,
    const std::vector<ScatteredRow>& dataset) {
  for (const auto& row : dataset)
    if (row.s_rho == p.s.s_rho && row.lambda == p.lambda) return row.row_id;
  (void)d;
  return std::nullopt;
}

// Per-type scattered counts with provenance, loaded from configuration.
struct StringConstants {
  std::map<std::string, long long> values;
  std::map<std::string, std::string> sources;
};

inline const std::vector<std::string>& string_constant_labels() {
  static const std::vector<std::string> labels = {
      "A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"};
  return labels;
}

inline StringConstants load_string_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open string constants file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed string constants: ") + e.what());
  }
  StringConstants c;
  std::vector<std::string> missing;
  for (const auto& label : string_constant_labels()) {
    if (!j.contains(label) || !j[label].contains("value")) {
      missing.push_back(label);
      continue;
    }
    c.values[label] = j[label]["value"].get<long long>();
    c.sources[label] = j[label].value("source", "");
  }
  if (!missing.empty()) {
    std::string msg = "string constants missing entries:";
    for (const auto& m : missing) msg += " " + m;
    throw ConfigError(msg);
  }
  return c;
}

// The relations this artifact can pin down by itself; returns the violated
// ones (empty means consistent).
inline std::vector<std::string> validate_string_constants(
    const StringConstants& c) {
  std::vector<std::string> violated;
  auto v = [&](const std::string& l) { return c.values.at(l); };
  auto expect = [&](bool ok, const std::string& text) {
    if (!ok) violated.push_back(text);
  };
  expect(v("A1") == 1, "N_A1 = 1 (rank-1 count 7 = 7*N_A1)");
  expect(v("A2") == 2, "N_A2 = 2 (rank-2 count 27 = 6*N_A2 + 15)");
  expect(v("A3") == 4, "N_A3 = 4 (rank-3 count)");
  expect(v("A6") == 32, "N_A6 = 32 (unfolded table size)");
  expect(v("D6") == 34, "N_D6 = 34 (unfolded table size)");
  expect(v("D4") + 5 * v("A4") == 49,
         "rank-4 relation N_D4 + 5*N_A4 = 49");
  expect(2 * v("D5") + 3 * v("A5") == 82,
         "rank-5 relation 2*N_D5 + 3*N_A5 = 82");
  expect(v("A5") + 2 * v("A4") + v("D5") + v("E6") == 82,
         "rank-6 relation N_A5 + 2*N_A4 + N_D5 + N_E6 = 82");
  return violated;
}

struct StringCounts {
  std::array<long long, 7> n{};  // N_0 .. N_6
  long long total = 0;
};

// N_i sums, over the Levi subsets of size i, the product of per-component
// scattered counts; the empty subset contributes the single tempered
// string.
inline StringCounts count_strings(const RootDatum& d,
                                  const StringConstants& c) {
  StringCounts out;
  for (const auto& levi : classify_levi_subsets(d)) {
    size_t size = levi.nodes.size();
    if (size > 6) continue;
    long long prod = 1;
    for (const auto& comp : levi.components) {
      auto it = c.values.find(comp.type_label);
      if (it == c.values.end())
        throw ConfigError("no string constant for type " + comp.type_label);
      prod *= it->second;
    }
    out.n[size] += prod;
  }
  for (long long x : out.n) out.total += x;
  return out;
}

}  // namespace dirac
