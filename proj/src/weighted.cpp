#include "rgbk/weighted.hpp"

#include <algorithm>
#include <numeric>

#include "rgbk/structure.hpp"

namespace rgbk {

namespace {

void check_weights(int n, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != n)
    throw error("size-mismatch", "need one weight per vertex");
  for (const Rational& x : w)
    if (x < Rational(0)) throw error("negative-weight", "weights must be >= 0");
}

Rational max_weight_clique(const Tournament& h, const ColorClass& cls,
                           const std::vector<Rational>& weights) {
  int n = h.size();
  std::vector<Rational> suffix(n + 2, Rational(0));
  for (int v = n; v >= 1; --v) suffix[v] = suffix[v + 1] + weights[v - 1];
  Rational best(0);
  std::vector<int> chosen;
  auto go = [&](auto&& self, int v, Rational acc) -> void {
    if (acc > best) best = acc;
    if (v > n || !(acc + suffix[v] > best)) return;
    bool fits = true;
    for (int u : chosen)
      if (!cls.contains(h.color(u, v))) {
        fits = false;
        break;
      }
    if (fits) {
      chosen.push_back(v);
      self(self, v + 1, acc + weights[v - 1]);
      chosen.pop_back();
    }
    self(self, v + 1, acc);
  };
  go(go, 1, Rational(0));
  return best;
}

}  // namespace

WeightedPath max_weighted_class_path(const Tournament& h, const ColorClass& cls,
                                     const std::vector<Rational>& weights) {
  int n = h.size();
  check_weights(n, weights);
  std::vector<Rational> dp(n + 1, Rational(0));
  std::vector<int> parent(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    dp[v] = weights[v - 1];
    for (int u = 1; u < v; ++u)
      if (cls.contains(h.color(u, v)) && dp[u] > Rational(0) &&
          dp[u] + weights[v - 1] > dp[v]) {
        dp[v] = dp[u] + weights[v - 1];
        parent[v] = u;
      }
  }
  WeightedPath out;
  int end = 0;
  for (int v = 1; v <= n; ++v)
    if (end == 0 || dp[v] > out.value) {
      out.value = dp[v];
      end = v;
    }
  for (int v = end; v != 0; v = parent[v]) out.path.push_back(v);
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

WeightedEsReport verify_weighted_es(const WeightedInstance& inst) {
  int n = inst.h.size();
  if (inst.h.count(Color::G) > 0)
    throw error("has-g-edge", "instance tournament must avoid G");
  check_weights(n, inst.b_weights);
  check_weights(n, inst.r_weights);

  WeightedEsReport out;
  out.b_best = max_weighted_class_path(inst.h, classes::BK, inst.b_weights);
  out.r_best = max_weighted_class_path(inst.h, classes::RK, inst.r_weights);
  for (int v = 1; v <= n; ++v)
    out.pairwise_sum += inst.b_weights[v - 1] * inst.r_weights[v - 1];
  out.holds = out.b_best.value * out.r_best.value >= out.pairwise_sum;

  // For geometric tournaments the directed-path and clique optima coincide.
  if (is_geometric(inst.h).ok) {
    if (max_weight_clique(inst.h, classes::BK, inst.b_weights) != out.b_best.value ||
        max_weight_clique(inst.h, classes::RK, inst.r_weights) != out.r_best.value)
      throw std::logic_error("path and clique optima split on a geometric instance");
  }
  return out;
}

SteeleReport erdos_steele_bound(const std::vector<Rational>& xs) {
  int n = static_cast<int>(xs.size());
  {
    std::vector<Rational> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error("duplicate-values", "entries must be pairwise distinct");
  }

  SteeleReport out;
  for (const Rational& x : xs)
    if (x > Rational(0)) out.bound_squared += x * x;

  // Monotone subsets never profit from negative entries, so both DPs run on
  // the nonnegative ones only.
  std::vector<Rational> inc(n), dec(n);
  std::vector<int> inc_par(n, -1), dec_par(n, -1);
  int best_end = -1;
  bool best_inc = true;
  for (int i = 0; i < n; ++i) {
    if (xs[i] < Rational(0)) continue;
    inc[i] = dec[i] = xs[i];
    for (int j = 0; j < i; ++j) {
      if (xs[j] < Rational(0)) continue;
      if (xs[j] < xs[i] && inc[j] + xs[i] > inc[i]) {
        inc[i] = inc[j] + xs[i];
        inc_par[i] = j;
      }
      if (xs[j] > xs[i] && dec[j] + xs[i] > dec[i]) {
        dec[i] = dec[j] + xs[i];
        dec_par[i] = j;
      }
    }
    if (inc[i] > out.max_sum) {
      out.max_sum = inc[i];
      best_end = i;
      best_inc = true;
    }
    if (dec[i] > out.max_sum) {
      out.max_sum = dec[i];
      best_end = i;
      best_inc = false;
    }
  }
  if (best_end >= 0)
    for (int i = best_end; i >= 0; i = best_inc ? inc_par[i] : dec_par[i])
      out.witness.push_back(i + 1);
  std::reverse(out.witness.begin(), out.witness.end());
  out.holds = out.max_sum * out.max_sum >= out.bound_squared;
  return out;
}

}  // namespace rgbk
