#include "rgbk/structure.hpp"

#include <algorithm>
#include <numeric>

namespace rgbk {

namespace {

int strict_positives(const Triple& d) {
  return (d.x > 0 ? 1 : 0) + (d.y > 0 ? 1 : 0) + (d.z > 0 ? 1 : 0);
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Stratification stratification(const Tournament& t, ColorClass cls) {
  ClassLengths cl = longest_class_lengths(t, cls);
  Stratification s{cls, {}, {}};
  s.strata.resize(cl.max);
  for (int v = 1; v <= t.size(); ++v) s.strata[cl.ending_at[v - 1] - 1].push_back(v);
  for (const std::vector<int>& stratum : s.strata) s.minimal.push_back(stratum.front());

  for (std::size_t l = 1; l < s.strata.size(); ++l)
    for (int v : s.strata[l]) {
      bool traced = false;
      for (int u : s.strata[l - 1])
        if (u < v && cls.contains(t.color(u, v))) {
          traced = true;
          break;
        }
      if (!traced)
        throw std::logic_error("stratification traceback failed at vertex " +
                               std::to_string(v));
    }
  return s;
}

Stratification dual_stratification(const Tournament& t, ColorClass cls) {
  int n = t.size();
  Stratification d = stratification(dual(t), cls);
  for (std::vector<int>& stratum : d.strata) {
    for (int& v : stratum) v = n + 1 - v;
    std::sort(stratum.begin(), stratum.end());
  }
  for (int& v : d.minimal) v = n + 1 - v;
  return d;
}

GeometricCheck is_geometric(const Tournament& t) {
  static constexpr std::array<ColorClass, 6> kChecked = {
      classes::R,   classes::G,   classes::B,
      classes::RGK, classes::RBK, classes::GBK};
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      for (int k = j + 1; k <= t.size(); ++k)
        for (ColorClass cls : kChecked)
          if (cls.contains(t.color(i, j)) && cls.contains(t.color(j, k)) &&
              !cls.contains(t.color(i, k)))
            return {false, i, j, k, cls};
  return {};
}

IntervalComponents interval_components(const Tournament& t, ColorClass cls) {
  int n = t.size();
  Dsu dsu(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (cls.contains(t.color(i, j))) dsu.unite(i - 1, j - 1);

  std::vector<std::vector<int>> by_root(n);
  for (int v = 1; v <= n; ++v) by_root[dsu.find(v - 1)].push_back(v);

  IntervalComponents out;
  for (std::vector<int>& comp : by_root) {
    if (comp.empty()) continue;
    bool interval = comp.back() - comp.front() + 1 == static_cast<int>(comp.size());
    out.is_interval.push_back(interval);
    out.all_intervals = out.all_intervals && interval;
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_geometric_stratification(const Tournament& t, ColorClass cls) {
  ClassLengths cl = longest_class_lengths(t, cls);
  for (int u = 1; u <= t.size(); ++u)
    for (int v = u + 1; v <= t.size(); ++v)
      if (cls.contains(t.color(u, v)) != (cl.ending_at[u - 1] < cl.ending_at[v - 1]))
        return false;
  return true;
}

bool minimal_path_is_class_colored(const Tournament& t, ColorClass cls) {
  std::vector<int> mins = stratification(t, cls).minimal;
  for (std::size_t l = 1; l < mins.size(); ++l) {
    if (mins[l - 1] >= mins[l]) return false;
    if (!cls.contains(t.color(mins[l - 1], mins[l]))) return false;
  }
  return true;
}

FixedCheck is_color_record_fixed(const Tournament& t) {
  FixedCheck out;
  if (!is_geometric(t)) {
    out = {false, "not-geometric"};
  } else {
    for (ColorClass cls : kAvoidingClasses) {
      if (!is_geometric_stratification(t, cls)) {
        out = {false, "stratification(" + cls.name() + ")"};
        break;
      }
      if (!minimal_path_is_class_colored(t, cls)) {
        out = {false, "minimal-path(" + cls.name() + ")"};
        break;
      }
    }
  }
  bool direct = color(record(t)) == t;
  if (direct != out.fixed)
    throw std::logic_error(
        "criteria-disagree: structural fixed-point test says " +
        std::string(out.fixed ? "fixed" : out.failed) +
        " but color(record(.)) says " + (direct ? "fixed" : "moved"));
  return out;
}

ReducedCheck is_reduced_set(const TripleSet& s) {
  for (std::size_t a = 0; a < s.points.size(); ++a)
    if (s.points[a].x < 1 || s.points[a].y < 1 || s.points[a].z < 1)
      throw error("not-positive",
                  "point " + std::to_string(a + 1) + " has a coordinate below 1");
  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (std::size_t b = a + 1; b < s.points.size(); ++b)
      if (!classify_difference(s.points[b].x - s.points[a].x,
                               s.points[b].y - s.points[a].y,
                               s.points[b].z - s.points[a].z))
        throw error("not-ordered", "pair (" + std::to_string(a + 1) + "," +
                                       std::to_string(b + 1) + ") is not ordered");

  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (int axis = 0; axis < 3; ++axis) {
      long long i = s.points[a][axis];
      if (i < 2) continue;
      bool witnessed = false;
      for (const Triple& q : s.points)
        if (q[axis] == i - 1 && strict_positives(s.points[a] - q) >= 2) {
          witnessed = true;
          break;
        }
      if (!witnessed) return {false, static_cast<int>(a) + 1, "xyz"[axis]};
    }
  return {};
}

bool is_canonical(const Tournament& t) {
  TripleSet s = record(t);
  bool via_record = color(s) == t;
  if (via_record) {
    Triple m = *s.box;
    TripleSet refl;
    refl.box = m;
    for (auto it = s.points.rbegin(); it != s.points.rend(); ++it)
      refl.points.push_back({m.x + 1 - it->x, m.y + 1 - it->y, m.z + 1 - it->z});
    via_record = is_reduced_set(s).reduced && is_reduced_set(refl).reduced;
  }
  bool direct = color(s) == t && dual(color(record(dual(t)))) == t;
  if (via_record != direct)
    throw std::logic_error("criteria-disagree: reduced-record test and direct "
                           "fixed-point test differ on canonicity");
  return direct;
}

bool dual_strata_reverse_check(const Tournament& t) {
  for (ColorClass cls : kAvoidingClasses) {
    Stratification p = stratification(t, cls);
    Stratification d = dual_stratification(t, cls);
    if (d.strata.size() != p.strata.size()) return false;
    std::size_t m = p.strata.size();
    for (std::size_t l = 0; l < m; ++l) {
      if (d.strata[l] != p.strata[m - 1 - l]) return false;
      if (d.minimal[l] != p.strata[m - 1 - l].back()) return false;
    }
  }
  return true;
}

GridNeighborResult grid_neighbor_property(const Tournament& t) {
  if (!is_canonical(t))
    throw error("not-canonical", "grid neighbor property needs a canonical input");
  TripleSet s = record(t);
  std::map<std::pair<long long, long long>, long long> label;
  for (const Triple& p : s.points) label[{p.x, p.y}] = p.z;

  GridNeighborResult res;
  long long lx = s.box->x, ly = s.box->y;
  for (long long x = 1; x <= lx; ++x)
    for (long long y = 1; y <= ly; ++y) {
      bool labeled = label.count({x, y}) > 0;
      std::optional<long long> min_ar, max_bl;
      bool row_has_right = false, row_has_left = false;
      bool col_has_above = false, col_has_below = false;
      for (const auto& [cell, z] : label) {
        auto [cx, cy] = cell;
        if (cx == x && cy > y) {
          col_has_above = true;
          min_ar = std::min(min_ar.value_or(z), z);
        }
        if (cx == x && cy < y) {
          col_has_below = true;
          max_bl = std::max(max_bl.value_or(z), z);
        }
        if (cy == y && cx > x) {
          row_has_right = true;
          min_ar = std::min(min_ar.value_or(z), z);
        }
        if (cy == y && cx < x) {
          row_has_left = true;
          max_bl = std::max(max_bl.value_or(z), z);
        }
      }
      bool row_col_max = labeled && !row_has_right && !col_has_above;
      bool row_col_min = labeled && !row_has_left && !col_has_below;
      int bullet = 0;
      if ((col_has_above || row_has_right) == row_col_max) bullet = 1;
      if (bullet == 0 && (col_has_below || row_has_left) == row_col_min) bullet = 2;
      if (bullet != 0 && res.ok) {
        res.ok = false;
        res.x = x;
        res.y = y;
        res.bullet = bullet;
      }
      if (!labeled) {
        if (min_ar) res.min_above_right[{x, y}] = *min_ar;
        if (max_bl) res.max_below_left[{x, y}] = *max_bl;
      }
    }
  return res;
}

KSaturationResult k_saturation_check(const Tournament& t) {
  if (!is_canonical(t))
    throw error("not-canonical", "K-saturation needs a canonical input");
  Triple base = path_lengths(t).maxima();
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j) {
      Color c = t.color(i, j);
      if (c == Color::K) continue;
      Tournament r = t;
      r.set_color(i, j, Color::K);
      Triple after = path_lengths(r).maxima();
      // Axis of the class avoiding c must strictly grow, the others stay put.
      int grown = c == Color::B ? 0 : c == Color::G ? 1 : 2;
      for (int axis = 0; axis < 3; ++axis) {
        bool good = axis == grown ? after[axis] > base[axis] : after[axis] == base[axis];
        if (!good) return {false, i, j};
      }
    }
  return {};
}

}  // namespace rgbk
