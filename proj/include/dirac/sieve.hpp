#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dirac/errors.hpp"
#include "dirac/rational.hpp"
#include "dirac/rootsystem.hpp"
#include "dirac/spinnorm.hpp"
#include "dirac/weight.hpp"
#include "dirac/weylgroup.hpp"

namespace dirac {

// A candidate J(lambda, -s lambda) with its derived data.
struct Parameter {
  InvolutionRecord s;
  Weight lambda;        // doubled coordinates, all >= 1
  Weight lambda_plus;   // doubled (lambda + s.lambda)
  Weight lambda_minus;  // doubled (lambda - s.lambda)
  Weight lkt;           // doubled dominant conjugate of lambda_plus
};

// The three membership bullets for Lambda(s): strictly positive
// half-integral lambda, integral lambda + s.lambda, and lambda - s.lambda a
// nonnegative-integer combination of simple roots.
inline bool lambda_in_Lambda_s(const RootDatum& d, const InvolutionRecord& s,
                               const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != d.rank)
    throw UsageError("lambda_in_Lambda_s: dimension mismatch");
  for (long long x : lambda)
    if (x < 1) return false;
  Weight slam = dirac::apply(s.element, lambda);
  if (!is_integral(add(lambda, slam))) return false;
  for (const Rat& c : to_simple_root_basis(d, sub(lambda, slam)))
    if (c.denominator() != 1 || c < Rat(0)) return false;
  return true;
}

inline Parameter make_parameter(const RootDatum& d, const InvolutionRecord& s,
                                const Weight& lambda) {
  if (!lambda_in_Lambda_s(d, s, lambda))
    throw UsageError("make_parameter: lambda not in Lambda(s)");
  Parameter p;
  p.s = s;
  p.lambda = lambda;
  Weight slam = dirac::apply(s.element, lambda);
  p.lambda_plus = add(lambda, slam);
  p.lambda_minus = sub(lambda, slam);
  p.lkt = dominant_conjugate(d, p.lambda_plus);
  return p;
}

struct SieveReport {
  InvolutionRecord s;
  std::vector<Parameter> candidates;  // sorted lexicographically by lambda
  Rat bound_b;
  long long enumeration_box = 0;  // largest fully searched doubled coordinate
  bool truncated = false;
};

// Necessary condition implied by P_delta <= ||delta|| + 2||rho||:
// ||lambda - s.lambda||^2 <= 4||rho||(||lambda + s.lambda|| + ||rho||),
// tested purely on squared norms.
inline bool cheap_bound_holds(const RootDatum& d, const Weight& lambda_minus,
                              const Weight& lambda_plus) {
  Rat l = norm_sq(d, lambda_minus);
  Rat r2 = norm_sq(d, d.rho);
  Rat a2 = norm_sq(d, lambda_plus);
  Rat y = l - 4 * r2;
  if (y <= Rat(0)) return true;
  return y * y <= 16 * r2 * a2;
}

// Independent post-hoc validator: re-checks the membership bullets and both
// norm bounds with straightforward arithmetic.
inline bool validate_candidate(const RootDatum& d, const Parameter& p,
                               const Rat& bound_b, PencilCache& pencils) {
  if (!lambda_in_Lambda_s(d, p.s, p.lambda)) return false;
  Weight slam = dirac::apply(p.s.element, p.lambda);
  if (p.lambda_plus != add(p.lambda, slam)) return false;
  if (p.lambda_minus != sub(p.lambda, slam)) return false;
  if (p.lkt != dominant_conjugate(d, p.lambda_plus)) return false;
  if (norm_sq(d, p.lambda_minus) > bound_b) return false;
  PencilQuery q = pencils.get(d, p.lkt);
  return norm_sq(d, scale(2, p.lambda)) <= q.result_min_norm_sq;
}

namespace detail {

// Partial-minimization (Schur complement) prefix forms of a PSD rational
// quadratic: forms[k] is the exact minimum of x^T A x over the trailing
// n - k real variables, as a function of the first k. Because A is PSD, a
// zero diagonal pivot forces a zero row and the variable is simply dropped.
inline std::vector<std::vector<std::vector<Rat>>> prefix_min_forms(
    std::vector<std::vector<Rat>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<std::vector<Rat>>> forms(n + 1);
  forms[n] = a;
  for (int k = n; k > 0; --k) {
    std::vector<std::vector<Rat>> g(k - 1, std::vector<Rat>(k - 1));
    const auto& cur = forms[k];
    const Rat piv = cur[k - 1][k - 1];
    for (int i = 0; i < k - 1; ++i)
      for (int j = 0; j < k - 1; ++j) {
        g[i][j] = cur[i][j];
        if (piv != Rat(0)) g[i][j] -= cur[i][k - 1] * cur[j][k - 1] / piv;
      }
    forms[k - 1] = std::move(g);
  }
  return forms;
}

struct ScaledForm {
  std::vector<std::vector<long long>> n;  // scaled integer form
  long long threshold_num = 0;            // prune iff dot * den > num
  long long threshold_den = 1;
};

inline ScaledForm scale_form(const std::vector<std::vector<Rat>>& g,
                             const Rat& bound) {
  long long l = 1;
  for (const auto& row : g)
    for (const Rat& x : row) l = std::lcm(l, x.denominator());
  ScaledForm f;
  const int k = static_cast<int>(g.size());
  f.n.assign(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      f.n[i][j] = g[i][j].numerator() * (l / g[i][j].denominator());
  Rat t = bound * l;
  f.threshold_num = t.numerator();
  f.threshold_den = t.denominator();
  return f;
}

}  // namespace detail

// Depth-first enumeration of the doubled coordinates m = 2 lambda in P^rank
// with (i) exact pruning of the PSD quadratic ||lambda - s.lambda||^2
// against bound_b via prefix-minimum forms, (ii) the cheap necessary
// condition above, and (iii) the exact pencil test. Coordinates are searched
// shell by shell (shell t: max coordinate exactly t); the shell cap grows
// until three consecutive shells are empty, with a hard cap that sets
// `truncated` when reached.
inline SieveReport enumerate_candidates(const RootDatum& d,
                                        const InvolutionRecord& s,
                                        const Rat& bound_b,
                                        PencilCache& pencils,
                                        long long hard_cap = 64) {
  if (!is_involution(s.element))
    throw UsageError("enumerate_candidates: s is not an involution");
  if (!s.fixed_set.empty())
    throw UsageError("enumerate_candidates: I(s) must be empty");
  if (bound_b <= Rat(0))
    throw UsageError("enumerate_candidates: bound must be positive");
  const int n = d.rank;
  const auto& sm = s.element.matrix;

  // A = (I - S)^T C^{-1} (I - S) / 4 on doubled coordinates.
  std::vector<std::vector<long long>> dm(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dm[i][j] = (i == j ? 1 : 0) - sm[i][j];
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat acc(0);
      for (int k = 0; k < n; ++k) {
        if (dm[k][i] == 0) continue;
        Rat row(0);
        for (int l = 0; l < n; ++l)
          if (dm[l][j] != 0) row += d.inverse_cartan[k][l] * dm[l][j];
        acc += row * dm[k][i];
      }
      a[i][j] = acc / 4;
    }

  // Variable order: large diagonal entries first so the quadratic prune
  // bites early; directions in the fixed space of s (zero rows) come last.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[x][x] > a[y][y]; });
  std::vector<std::vector<Rat>> ap(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ap[i][j] = a[order[i]][order[j]];
  auto forms = detail::prefix_min_forms(std::move(ap));
  std::vector<detail::ScaledForm> scaled(n + 1);
  for (int k = 0; k <= n; ++k) scaled[k] = detail::scale_form(forms[k], bound_b);

  SieveReport report;
  report.s = s;
  report.bound_b = bound_b;

  std::vector<long long> x(n, 0);  // values in permuted variable order
  Weight m(n, 0);                  // values in original coordinate order
  long long shell = 1;

  auto leaf = [&]() {
    Weight slam(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) slam[i] += sm[i][j] * m[j];
    Weight lp = add(m, slam);
    if (!is_integral(lp)) return;
    Weight lm = sub(m, slam);
    for (const Rat& c : to_simple_root_basis(d, lm))
      if (c.denominator() != 1 || c < Rat(0)) return;
    if (!cheap_bound_holds(d, lm, lp)) return;
    Weight lkt = dominant_conjugate(d, lp);
    PencilQuery q = pencils.get(d, lkt);
    if (norm_sq(d, scale(2, m)) > q.result_min_norm_sq) return;
    Parameter p;
    p.s = s;
    p.lambda = m;
    p.lambda_plus = std::move(lp);
    p.lambda_minus = std::move(lm);
    p.lkt = std::move(lkt);
    report.candidates.push_back(std::move(p));
  };

  size_t found_before_shell = 0;
  auto dfs = [&](auto&& self, int depth, bool hit_shell) -> void {
    if (depth == n) {
      if (hit_shell) leaf();
      return;
    }
    for (long long v = 1; v <= shell; ++v) {
      x[depth] = v;
      m[order[depth]] = v;
      const auto& f = scaled[depth + 1];
      long long dot = 0;
      for (int i = 0; i <= depth; ++i) {
        const auto& row = f.n[i];
        for (int j = 0; j <= depth; ++j) dot += row[j] * x[i] * x[j];
      }
      if (static_cast<__int128>(dot) * f.threshold_den >
          static_cast<__int128>(f.threshold_num))
        continue;
      self(self, depth + 1, hit_shell || v == shell);
    }
  };

  int empty_streak = 0;
  for (; shell <= hard_cap; ++shell) {
    found_before_shell = report.candidates.size();
    dfs(dfs, 0, false);
    report.enumeration_box = shell;
    if (report.candidates.size() == found_before_shell) {
      if (++empty_streak >= 3) break;
    } else {
      empty_streak = 0;
    }
  }
  if (shell > hard_cap) {
    report.truncated = true;
    report.enumeration_box = hard_cap;
  }

  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const Parameter& l, const Parameter& r) {
              return l.lambda < r.lambda;
            });
  return report;
}

// One report per involution with empty I(s), in census (s_rho) order.
// Work is distributed across workers; the output is worker-count
// independent because reports land at fixed indices.
inline std::vector<SieveReport> sieve_all(
    const RootDatum& d, const std::vector<InvolutionRecord>& involutions,
    const Rat& bound_b, PencilCache& pencils, int workers = 1) {
  if (workers < 1) throw UsageError("sieve_all: workers must be positive");
  std::vector<const InvolutionRecord*> tasks;
  for (const auto& rec : involutions)
    if (rec.fixed_set.empty()) tasks.push_back(&rec);
  std::vector<SieveReport> reports(tasks.size());
  std::atomic<size_t> next{0};
  auto run = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      reports[i] = enumerate_candidates(d, *tasks[i], bound_b, pencils);
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  return reports;
}

inline nlohmann::json report_to_json(const SieveReport& report) {
  nlohmann::json j;
  std::vector<long long> srho(report.s.s_rho.size());
  for (size_t i = 0; i < srho.size(); ++i) srho[i] = report.s.s_rho[i] / 2;
  j["srho"] = srho;
  j["candidates"] = nlohmann::json::array();
  for (const auto& c : report.candidates) {
    nlohmann::json jc;
    jc["lambda2"] = c.lambda;
    std::vector<long long> lkt(c.lkt.size());
    for (size_t i = 0; i < lkt.size(); ++i) lkt[i] = c.lkt[i] / 2;
    jc["lkt"] = lkt;
    j["candidates"].push_back(std::move(jc));
  }
  j["truncated"] = report.truncated;
  return j;
}

// Diagram dual of a full parameter: both s and lambda transform by the
// node permutation.
inline Parameter diagram_dual(const RootDatum& d, const Parameter& p) {
  WeylElement se = diagram_dual(d, p.s.element);
  InvolutionRecord s = make_involution_record(d, se);
  return make_parameter(d, s, diagram_dual(d, p.lambda));
}

}  // namespace dirac
