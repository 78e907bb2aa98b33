#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "dirac/errors.hpp"
#include "dirac/rootsystem.hpp"
#include "dirac/weight.hpp"

namespace dirac {

// ||mu||_spin^2 = ||{mu - rho} + rho||^2 for a dominant integral K-type mu.
inline Rat spin_norm_sq(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.size()) != d.rank)
    throw UsageError("spin_norm_sq: dimension mismatch");
  if (!is_dominant_weight(mu)) throw UsageError("spin_norm_sq: mu not dominant");
  if (!is_integral(mu)) throw UsageError("spin_norm_sq: mu not integral");
  Weight v = dominant_conjugate(d, sub(mu, d.rho));
  return norm_sq(d, add(v, d.rho));
}

struct PencilQuery {
  Weight delta;             // dominant integral starting K-type (doubled)
  Rat result_min_norm_sq;   // min over n in N of spin_norm_sq(delta + n*beta)
  long long achieved_at_n;  // smallest attaining n
};

// Exact minimum over the Vogan pencil delta + n*beta (beta the highest
// root). Termination: since ||mu||_spin >= ||mu|| - ||rho|| for dominant mu,
// the scan stops at the first n with ||delta + n*beta|| - ||rho|| strictly
// above the best value found so far (tested purely rationally on squares),
// then asserts a strictly larger spin norm for five further pencil members.
inline PencilQuery pencil_min(const RootDatum& d, const Weight& delta) {
  if (!is_dominant_weight(delta)) throw UsageError("pencil_min: delta not dominant");
  if (!is_integral(delta)) throw UsageError("pencil_min: delta not integral");
  const Rat rho_sq = norm_sq(d, d.rho);
  PencilQuery q;
  q.delta = delta;
  bool have_best = false;
  long long n = 0;
  long long stop_n = -1;
  for (;; ++n) {
    Weight mu = add(delta, scale(n, d.highest_root));
    if (have_best) {
      // ||mu|| - ||rho|| > sqrt(best)  <=>  X - best - R > 0 and
      // (X - best - R)^2 > 4*best*R, with X = ||mu||^2 and R = ||rho||^2.
      Rat x = norm_sq(d, mu);
      Rat lhs = x - q.result_min_norm_sq - rho_sq;
      if (lhs > Rat(0) && lhs * lhs > 4 * q.result_min_norm_sq * rho_sq) {
        stop_n = n;
        break;
      }
    }
    Rat s = spin_norm_sq(d, mu);
    if (!have_best || s < q.result_min_norm_sq) {
      q.result_min_norm_sq = s;
      q.achieved_at_n = n;
      have_best = true;
    }
    if (n > 4096)
      throw ConfigError("pencil_min: termination bound not reached");
  }
  for (long long k = stop_n; k < stop_n + 5; ++k) {
    Weight mu = add(delta, scale(k, d.highest_root));
    if (!(spin_norm_sq(d, mu) > q.result_min_norm_sq))
      throw ConfigError("pencil_min: monotone-tail assertion failed");
  }
  return q;
}

// Equality case of the reformulated Dirac inequality:
// ||mu||_spin = ||2 lambda||.
inline bool dirac_attained(const RootDatum& d, const Weight& mu,
                           const Weight& two_lambda) {
  return spin_norm_sq(d, mu) == norm_sq(d, two_lambda);
}

// Memoized pencil minima, shareable across sieve workers.
class PencilCache {
 public:
  PencilQuery get(const RootDatum& d, const Weight& delta) {
    std::string key = format_doubled(delta);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    PencilQuery q = pencil_min(d, delta);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::move(key), std::move(q)).first->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, PencilQuery> cache_;
};

}  // namespace dirac
