#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dirac/errors.hpp"
#include "dirac/rootsystem.hpp"
#include "dirac/weylgroup.hpp"

namespace dirac {

// One connected component of an induced Dynkin subdiagram.
// node_map[b - 1] is the ambient node carrying the component's own
// (Bourbaki) label b.
struct LeviComponent {
  std::string type_label;
  std::vector<int> node_map;
};

struct LeviSubset {
  std::vector<int> nodes;  // sorted 1-based ambient node indices
  std::vector<LeviComponent> components;
};

namespace detail {

// Canonical node_map: among all diagram isomorphisms from the component
// type's own labeling onto the ambient nodes, A- and E-components take the
// lexicographically smallest image tuple and D-components the largest
// (the convention the worked Levi examples pin down).
inline std::vector<int> canonical_node_map(
    const RootDatum& ambient, const std::string& type_label,
    const std::vector<int>& nodes) {
  RootDatum comp = build_root_datum(type_label);
  const int k = comp.rank;
  std::vector<int> perm(nodes.begin(), nodes.end());
  std::sort(perm.begin(), perm.end());
  bool want_largest = type_label[0] == 'D';
  std::vector<int> best;
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) {
        long long ambient_edge =
            ambient.cartan[perm[i] - 1][perm[j] - 1];
        if (comp.cartan[i][j] != ambient_edge) ok = false;
      }
    if (ok && (best.empty() || (want_largest ? perm > best : perm < best)))
      best = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty())
    throw ConfigError("no diagram isomorphism for component " + type_label);
  return best;
}

}  // namespace detail

// Classifies the induced subdiagram on `nodes` into connected components of
// types A_k / D_k / E_6 / E_7 with canonical node maps.
inline LeviSubset classify_subset(const RootDatum& d, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  LeviSubset levi;
  levi.nodes = nodes;
  std::vector<bool> seen(nodes.size(), false);
  for (size_t start = 0; start < nodes.size(); ++start) {
    if (seen[start]) continue;
    // Collect the connected component by graph search over diagram edges.
    std::vector<int> comp{nodes[start]};
    seen[start] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (size_t j = 0; j < nodes.size(); ++j) {
        if (seen[j]) continue;
        if (d.cartan[comp[head] - 1][nodes[j] - 1] != 0) {
          seen[j] = true;
          comp.push_back(nodes[j]);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    const int k = static_cast<int>(comp.size());
    // Type from the degree profile: a path is A_k; one degree-3 node with
    // sorted arm lengths (1,1,k-3) is D_k, (1,2,2) is E6, (1,2,3) is E7.
    int branch = -1;
    for (int v : comp) {
      int deg = 0;
      for (int u : comp)
        if (u != v && d.cartan[v - 1][u - 1] != 0) ++deg;
      if (deg > 3) throw ConfigError("unsupported subdiagram (degree > 3)");
      if (deg == 3) {
        if (branch >= 0) throw ConfigError("unsupported subdiagram (two forks)");
        branch = v;
      }
    }
    std::string label;
    if (branch < 0) {
      label = "A" + std::to_string(k);
    } else {
      std::vector<int> arms;
      for (int u : comp) {
        if (u == branch || d.cartan[branch - 1][u - 1] == 0) continue;
        int len = 1, prev = branch, cur = u;
        for (;;) {
          int nxt = -1;
          for (int w : comp)
            if (w != prev && w != cur && d.cartan[cur - 1][w - 1] != 0) nxt = w;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms == std::vector<int>{1, 1, k - 3})
        label = "D" + std::to_string(k);
      else if (arms == std::vector<int>{1, 2, 2})
        label = "E6";
      else if (arms == std::vector<int>{1, 2, 3})
        label = "E7";
      else
        throw ConfigError("unsupported forked subdiagram");
    }
    LeviComponent lc;
    lc.type_label = label;
    lc.node_map = detail::canonical_node_map(d, label, comp);
    levi.components.push_back(std::move(lc));
  }
  // Canonical component order: by smallest ambient node.
  std::sort(levi.components.begin(), levi.components.end(),
            [](const LeviComponent& a, const LeviComponent& b) {
              return *std::min_element(a.node_map.begin(), a.node_map.end()) <
                     *std::min_element(b.node_map.begin(), b.node_map.end());
            });
  return levi;
}

// All 2^rank subsets of the ambient diagram's nodes, classified.
inline std::vector<LeviSubset> classify_levi_subsets(const RootDatum& d) {
  std::vector<LeviSubset> out;
  for (unsigned mask = 0; mask < (1u << d.rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < d.rank; ++i)
      if (mask & (1u << i)) nodes.push_back(i + 1);
    out.push_back(classify_subset(d, std::move(nodes)));
  }
  return out;
}

namespace detail {

// Type sort key for coefficient-table ordering: rank descending, then
// letter E > D > A.
inline std::pair<int, int> type_key(const std::string& label) {
  int rank = std::stoi(label.substr(1));
  int letter = label[0] == 'E' ? 0 : label[0] == 'D' ? 1 : 2;
  return {-rank, letter};
}

}  // namespace detail

// Multiset label matching the string-count formulas, e.g. "A3A1", "A2A2",
// "A1^4" (powers used from multiplicity 3 up).
inline std::string component_multiset_label(const LeviSubset& levi) {
  std::vector<std::string> types;
  for (const auto& c : levi.components) types.push_back(c.type_label);
  std::sort(types.begin(), types.end(), [](const auto& a, const auto& b) {
    return detail::type_key(a) < detail::type_key(b);
  });
  std::ostringstream out;
  for (size_t i = 0; i < types.size();) {
    size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    size_t mult = j - i;
    if (mult >= 3)
      out << types[i] << '^' << mult;
    else
      for (size_t k = 0; k < mult; ++k) out << types[i];
    i = j;
  }
  std::string s = out.str();
  return s.empty() ? "empty" : s;
}

// (subset size, multiset label) -> number of subsets, over all 2^rank.
inline std::map<std::pair<int, std::string>, long long> aggregate_levi_counts(
    const std::vector<LeviSubset>& subsets) {
  std::map<std::pair<int, std::string>, long long> agg;
  for (const auto& l : subsets)
    ++agg[{static_cast<int>(l.nodes.size()), component_multiset_label(l)}];
  return agg;
}

// Rewrites per-component words (in each component's own labels) through the
// node maps into one ambient word; components commute, so concatenation in
// component order is well defined.
inline std::vector<int> embed_levi_word(
    const LeviSubset& levi, const std::vector<std::vector<int>>& words) {
  if (words.size() != levi.components.size())
    throw UsageError("embed_levi_word: one word per component required");
  std::vector<int> out;
  for (size_t c = 0; c < words.size(); ++c) {
    const auto& map = levi.components[c].node_map;
    for (int letter : words[c]) {
      if (letter < 1 || letter > static_cast<int>(map.size()))
        throw UsageError("embed_levi_word: letter outside component rank");
      out.push_back(map[letter - 1]);
    }
  }
  return out;
}

// Embeds an involution of the Levi's Weyl group (given by per-component
// words) as an ambient involution with full record.
inline InvolutionRecord embed_levi_involution(
    const RootDatum& d, const LeviSubset& levi,
    const std::vector<std::vector<int>>& words) {
  WeylElement w = from_word(d, embed_levi_word(levi, words));
  if (!is_involution(w))
    throw UsageError("embed_levi_involution: element is not an involution");
  return make_involution_record(d, w);
}

}  // namespace dirac
