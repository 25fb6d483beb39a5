#pragma once

// Brute-force reference implementations used to cross-check the library's
// DP / branch-and-bound / merge algorithms on small instances. Everything
// here enumerates subsets or partitions directly and is deliberately
// independent of the code under test.

#include <algorithm>
#include <set>
#include <vector>

#include <rgbk/geometry.hpp>
#include <rgbk/rng.hpp>
#include <rgbk/tournament.hpp>
#include <rgbk/types.hpp>

namespace oracle {

using rgbk::ColorClass;
using rgbk::Rational;
using rgbk::Tournament;
using rgbk::Triple;
using rgbk::TripleSet;

// Longest path ending at each vertex using only cls-colored edges, by
// checking every increasing vertex subset as a candidate path. O(2^n * n).
inline std::vector<int> class_lengths(const Tournament& t, ColorClass cls) {
  int n = t.size();
  std::vector<int> best(n, n > 0 ? 1 : 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> path;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) path.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
      ok = cls.contains(t.color(path[i], path[i + 1]));
    if (ok && !path.empty()) {
      int& b = best[path.back() - 1];
      b = std::max(b, static_cast<int>(path.size()));
    }
  }
  return best;
}

// Maximum weight over nonempty cls-paths; weights are nonnegative.
inline Rational weighted_path_value(const Tournament& t, ColorClass cls,
                                    const std::vector<Rational>& w) {
  int n = t.size();
  Rational best = 0;
  bool any = false;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> path;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) path.push_back(v);
    bool ok = true;
    Rational sum = 0;
    for (std::size_t i = 0; i < path.size() && ok; ++i) {
      if (i + 1 < path.size()) ok = cls.contains(t.color(path[i], path[i + 1]));
      sum += w[path[i] - 1];
    }
    if (ok && (!any || sum > best)) best = sum, any = true;
  }
  return best;
}

// Max subset sum over index subsets whose values are monotone (increasing or
// decreasing); the empty subset counts as 0.
inline Rational monotone_max_sum(const std::vector<Rational>& xs) {
  int n = static_cast<int>(xs.size());
  Rational best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Rational> vals;
    Rational sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) vals.push_back(xs[i]), sum += xs[i];
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      inc = inc && vals[i] < vals[i + 1];
      dec = dec && vals[i] > vals[i + 1];
    }
    if ((inc || dec) && sum > best) best = sum;
  }
  return best;
}

// Independent reading of a difference-type requirement.
inline bool sign_matches(long long d, rgbk::Sign s) {
  switch (s) {
    case rgbk::Sign::StrictPos: return d > 0;
    case rgbk::Sign::StrictNeg: return d < 0;
    case rgbk::Sign::WeakNonPos: return d <= 0;
    case rgbk::Sign::WeakNonNeg: return d >= 0;
    default: return true;
  }
}

inline bool pair_realizes(const Triple& p, const Triple& q,
                          const rgbk::DifferenceType& type) {
  for (const Triple* d : {&p, &q}) {
    Triple diff = (d == &p) ? q - p : p - q;
    if (sign_matches(diff.x, type.axes[0]) && sign_matches(diff.y, type.axes[1]) &&
        sign_matches(diff.z, type.axes[2]))
      return true;
  }
  return false;
}

// Largest subset with no pair realizing the type in either direction, by
// direct subset enumeration. |S| <= ~20.
inline long long avoiding_subset_size(const TripleSet& s,
                                      const rgbk::DifferenceType& type) {
  int n = static_cast<int>(s.size());
  long long best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < idx.size() && ok; ++a)
      for (std::size_t b = a + 1; b < idx.size() && ok; ++b)
        ok = !pair_realizes(s.points[idx[a]], s.points[idx[b]], type);
    if (ok) best = std::max(best, static_cast<long long>(idx.size()));
  }
  return best;
}

// Set partitions of {0..n-1} via restricted growth strings.
inline std::vector<std::vector<int>> partitions_as_labels(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  while (true) {
    out.push_back(labels);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, labels[j]);
      if (labels[i] <= cap) break;
    }
    if (i == 0) break;
    ++labels[i];
    for (int j = i + 1; j < n; ++j) labels[j] = 0;
  }
  return out;
}

// Decomposability in the Gallai sense by exhaustive partition search:
// some partition into >= 2 blocks (contiguous intervals when directed) has at
// most one primary color between each block pair and at most two primary
// colors between blocks in total, and all blocks recurse. K edges are
// ignored everywhere.
inline bool gallai_decomposable(const Tournament& t, bool directed) {
  int n = t.size();
  if (n <= 1) return true;
  auto blocks_ok = [&](const std::vector<std::vector<int>>& blocks) {
    std::set<rgbk::Color> total;
    for (std::size_t a = 0; a < blocks.size(); ++a)
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        std::set<rgbk::Color> pair_colors;
        for (int u : blocks[a])
          for (int v : blocks[b]) {
            rgbk::Color c = t.color(std::min(u, v), std::max(u, v));
            if (c != rgbk::Color::K) pair_colors.insert(c);
          }
        if (pair_colors.size() > 1) return false;
        total.insert(pair_colors.begin(), pair_colors.end());
      }
    if (total.size() > 2) return false;
    for (const auto& blk : blocks)
      if (blk.size() > 1 && !gallai_decomposable(t.induced(blk), directed))
        return false;
    return true;
  };
  if (directed) {
    // Compositions: choose cut points between consecutive vertices.
    for (unsigned cuts = 1; cuts < (1u << (n - 1)); ++cuts) {
      std::vector<std::vector<int>> blocks(1);
      for (int v = 1; v <= n; ++v) {
        blocks.back().push_back(v);
        if (v < n && (cuts >> (v - 1) & 1)) blocks.emplace_back();
      }
      if (blocks_ok(blocks)) return true;
    }
    return false;
  }
  for (const auto& labels : partitions_as_labels(n)) {
    int m = 1 + *std::max_element(labels.begin(), labels.end());
    if (m < 2) continue;
    std::vector<std::vector<int>> blocks(m);
    for (int v = 1; v <= n; ++v) blocks[labels[v - 1]].push_back(v);
    if (blocks_ok(blocks)) return true;
  }
  return false;
}

// Can the K edges be recolored with primaries so that no triangle shows all
// of R, G, B? Direct enumeration over 3^k assignments.
inline bool rainbow_free_assignment_exists(const Tournament& t) {
  std::vector<std::pair<int, int>> k_edges;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      if (t.color(i, j) == rgbk::Color::K) k_edges.emplace_back(i, j);
  long long combos = 1;
  for (std::size_t e = 0; e < k_edges.size(); ++e) combos *= 3;
  for (long long a = 0; a < combos; ++a) {
    Tournament u = t;
    long long rest = a;
    for (auto [i, j] : k_edges) {
      u.set_color(i, j, static_cast<rgbk::Color>(rest % 3));
      rest /= 3;
    }
    bool rainbow = false;
    for (int i = 1; i <= u.size() && !rainbow; ++i)
      for (int j = i + 1; j <= u.size() && !rainbow; ++j)
        for (int k = j + 1; k <= u.size() && !rainbow; ++k) {
          std::set<rgbk::Color> cs{u.color(i, j), u.color(i, k), u.color(j, k)};
          rainbow = cs.size() == 3;
        }
    if (!rainbow) return true;
  }
  return false;
}

// --- random instance helpers ------------------------------------------------

inline Tournament random_tournament(rgbk::SplitMix64& rng, int n, bool allow_k) {
  Tournament t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      t.set_color(i, j, static_cast<rgbk::Color>(rng.below(allow_k ? 4 : 3)));
  return t;
}

inline Tournament random_tournament_k_capped(rgbk::SplitMix64& rng, int n,
                                             int max_k_edges) {
  while (true) {
    Tournament t = random_tournament(rng, n, true);
    if (t.count(rgbk::Color::K) <= max_k_edges) return t;
  }
}

// Random slice-increasing subset of [n]^3: visit the grid in random order and
// keep every point that stays majority-comparable with the kept ones.
inline TripleSet random_slice_increasing(rgbk::SplitMix64& rng, int n) {
  std::vector<Triple> grid;
  for (long long x = 1; x <= n; ++x)
    for (long long y = 1; y <= n; ++y)
      for (long long z = 1; z <= n; ++z) grid.push_back({x, y, z});
  for (std::size_t i = grid.size(); i > 1; --i)
    std::swap(grid[i - 1], grid[rng.below(i)]);
  auto comparable = [](const Triple& a, const Triple& b) {
    Triple d = b - a;
    int pos = (d.x > 0) + (d.y > 0) + (d.z > 0);
    int neg = (d.x < 0) + (d.y < 0) + (d.z < 0);
    return pos >= 2 || neg >= 2;
  };
  TripleSet s;
  s.box = Triple{n, n, n};
  for (const Triple& p : grid) {
    bool ok = true;
    for (const Triple& q : s.points) ok = ok && comparable(q, p);
    if (ok) s.points.push_back(p);
  }
  return s;
}

// Random geometric tournament without G edges: vertices are distinct points
// of [m]^2 in lexicographic order; both coordinates up = K, second down or
// equal = R, first equal = B. This is the edge coloring of the ordered set
// {(u_i, i, v_i)}, so the result is geometric.
inline Tournament random_geometric_rbk(rgbk::SplitMix64& rng, int n) {
  std::set<std::pair<long long, long long>> pts;
  while (static_cast<int>(pts.size()) < n)
    pts.insert({static_cast<long long>(rng.below(n + 2)),
                static_cast<long long>(rng.below(n + 2))});
  std::vector<std::pair<long long, long long>> v(pts.begin(), pts.end());
  Tournament t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto [ui, vi] = v[i - 1];
      auto [uj, vj] = v[j - 1];
      rgbk::Color c = ui == uj ? rgbk::Color::B
                    : vj > vi  ? rgbk::Color::K
                               : rgbk::Color::R;
      t.set_color(i, j, c);
    }
  return t;
}

inline std::vector<Rational> random_weights(rgbk::SplitMix64& rng, int n,
                                            int max_num = 8, int max_den = 16) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i)
    w.emplace_back(static_cast<long long>(rng.below(max_num + 1)),
                   static_cast<long long>(1 + rng.below(max_den)));
  return w;
}

inline std::vector<Rational> random_distinct_values(rgbk::SplitMix64& rng, int n,
                                                    int max_den = 16) {
  std::set<Rational> vals;
  while (static_cast<int>(vals.size()) < n) {
    long long num = static_cast<long long>(rng.below(41)) - 20;
    long long den = 1 + static_cast<long long>(rng.below(max_den));
    vals.insert(Rational(num, den));
  }
  std::vector<Rational> out(vals.begin(), vals.end());
  for (std::size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[rng.below(i)]);
  return out;
}

}  // namespace oracle
