#include "rgbk/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "rgbk/transforms.hpp"

namespace rgbk {

namespace {

int strict_positives(const Triple& d) {
  return (d.x > 0 ? 1 : 0) + (d.y > 0 ? 1 : 0) + (d.z > 0 ? 1 : 0);
}

int strict_negatives(const Triple& d) {
  return (d.x < 0 ? 1 : 0) + (d.y < 0 ? 1 : 0) + (d.z < 0 ? 1 : 0);
}

std::array<int, 3> plane_axes(Plane p) {
  switch (p) {
    case Plane::XY: return {0, 1, 2};
    case Plane::XZ: return {0, 2, 1};
    default: return {1, 2, 0};
  }
}

const char* plane_name(Plane p) {
  switch (p) {
    case Plane::XY: return "xy";
    case Plane::XZ: return "xz";
    default: return "yz";
  }
}

void require_slice_increasing(const TripleSet& s) {
  SliceCheck sc = is_slice_increasing(s);
  if (!sc.ok)
    throw error("not-slice-increasing",
                "pair (" + std::to_string(sc.bad_pair.i) + "," +
                    std::to_string(sc.bad_pair.j) + ") is not majority-comparable");
}

using I128 = __int128;

std::string i128_str(I128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string out;
  while (v > 0) {
    out += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  if (neg) out += '-';
  std::reverse(out.begin(), out.end());
  return out;
}

std::string fraction_str(I128 num, I128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  I128 a = num < 0 ? -num : num, b = den;
  while (b) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return den == 1 ? i128_str(num) : i128_str(num) + "/" + i128_str(den);
}

}  // namespace

SliceCheck is_slice_increasing(const TripleSet& s) {
  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (std::size_t b = a + 1; b < s.points.size(); ++b) {
      Triple d = s.points[b] - s.points[a];
      if (strict_positives(d) < 2 && strict_negatives(d) < 2)
        return {false, {static_cast<int>(a) + 1, static_cast<int>(b) + 1}};
    }
  return {};
}

OrderedCheck is_ordered(const TripleSet& s) {
  require_slice_increasing(s);
  int m = static_cast<int>(s.points.size());

  // forward[a][b]: the majority direction of pair (a, b) points from a to b
  std::vector<std::vector<bool>> forward(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b)
        forward[a][b] = strict_positives(s.points[b] - s.points[a]) >= 2;

  OrderedCheck out;
  out.listing.resize(m);
  std::iota(out.listing.begin(), out.listing.end(), 0);
  std::vector<int> losses(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && forward[b][a]) ++losses[a];
  std::sort(out.listing.begin(), out.listing.end(),
            [&losses](int a, int b) { return losses[a] < losses[b]; });

  bool acyclic = true;
  for (int a = 0; a < m && acyclic; ++a)
    for (int b = a + 1; b < m && acyclic; ++b)
      acyclic = forward[out.listing[a]][out.listing[b]];
  if (acyclic) {
    for (int& v : out.listing) ++v;  // report 1-based
    return out;
  }

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        bool cyc = (forward[a][b] && forward[b][c] && forward[c][a]) ||
                   (forward[b][a] && forward[a][c] && forward[c][b]);
        if (cyc) return {false, {}, {a + 1, b + 1, c + 1}};
      }
  throw std::logic_error("inconsistent majority order without a 3-cycle");
}

GridView grid_view(const TripleSet& s, Plane plane) {
  auto [a1, a2, al] = plane_axes(plane);
  GridView g;
  g.plane = plane;
  std::map<std::pair<long long, long long>, std::size_t> first_at;
  for (std::size_t idx = 0; idx < s.points.size(); ++idx) {
    const Triple& p = s.points[idx];
    std::pair<long long, long long> cell{p[a1], p[a2]};
    auto [it, fresh] = first_at.try_emplace(cell, idx);
    if (!fresh)
      throw error("projection-collision",
                  "points " + std::to_string(it->second + 1) + " and " +
                      std::to_string(idx + 1) + " project to the same " +
                      plane_name(plane) + " cell");
    g.labels[cell] = p[al];
  }
  if (s.box) {
    g.lo1 = 1;
    g.hi1 = (*s.box)[a1];
    g.lo2 = 1;
    g.hi2 = (*s.box)[a2];
    for (const auto& [cell, z] : g.labels)
      if (cell.first < 1 || cell.first > g.hi1 || cell.second < 1 || cell.second > g.hi2)
        throw error("out-of-box", "a grid cell leaves the declared box");
  } else if (!g.labels.empty()) {
    g.lo1 = g.hi1 = g.labels.begin()->first.first;
    g.lo2 = g.hi2 = g.labels.begin()->first.second;
    for (const auto& [cell, z] : g.labels) {
      g.lo1 = std::min(g.lo1, cell.first);
      g.hi1 = std::max(g.hi1, cell.first);
      g.lo2 = std::min(g.lo2, cell.second);
      g.hi2 = std::max(g.hi2, cell.second);
    }
  }

  if (is_slice_increasing(s).ok) {
    // Labels grow along rows and columns, same-label cells are comparable and
    // span empty corners. All three follow from majority comparability.
    for (const auto& [c1, z1] : g.labels)
      for (const auto& [c2, z2] : g.labels) {
        if (c1 >= c2) continue;
        bool same_row = c1.second == c2.second, same_col = c1.first == c2.first;
        if ((same_row || same_col) && z1 >= z2)
          throw std::logic_error("grid labels fail to increase along a line");
        if (z1 == z2) {
          bool comparable = (c1.first < c2.first && c1.second < c2.second) ||
                            (c2.first < c1.first && c2.second < c1.second);
          if (!comparable)
            throw std::logic_error("equal labels at incomparable cells");
          if (g.labels.count({c1.first, c2.second}) ||
              g.labels.count({c2.first, c1.second}))
            throw std::logic_error("spanned corner of a label pair is occupied");
        }
      }
  }
  return g;
}

std::string render_ascii(const GridView& g) {
  std::size_t width = 1;
  for (const auto& [cell, z] : g.labels)
    width = std::max(width, std::to_string(z).size());
  std::string out;
  for (long long row = g.hi2; row >= g.lo2; --row) {
    out += "|";
    for (long long col = g.lo1; col <= g.hi1; ++col) {
      auto it = g.labels.find({col, row});
      std::string cell = it == g.labels.end() ? "" : std::to_string(it->second);
      out += " " + std::string(width - cell.size(), ' ') + cell + " |";
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const GridView& g) {
  nlohmann::ordered_json j;
  j["plane"] = plane_name(g.plane);
  j["cols"] = {g.lo1, g.hi1};
  j["rows"] = {g.lo2, g.hi2};
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [cell, z] : g.labels)
    cells.push_back({cell.first, cell.second, z});
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

SliceProfile slice_profile(const TripleSet& s, char axis) {
  int a = axis == 'x' ? 0 : axis == 'y' ? 1 : axis == 'z' ? 2 : -1;
  if (a < 0) throw error("parse-error", "axis must be one of x, y, z");
  SliceProfile prof;
  prof.axis = axis;
  long long hi = 0;
  if (s.box) {
    hi = (*s.box)[a];
  } else {
    for (const Triple& p : s.points) {
      if (p[a] < 1)
        throw error("not-positive", "slice profiles without a box need "
                                    "coordinates starting at 1");
      hi = std::max(hi, p[a]);
    }
  }
  prof.counts.assign(hi, 0);
  for (const Triple& p : s.points) {
    if (p[a] < 1 || p[a] > hi)
      throw error("out-of-box", "coordinate outside the declared box");
    ++prof.counts[p[a] - 1];
  }
  for (long long c : prof.counts) prof.sum_squares += c * c;
  return prof;
}

CornerOverlap corner_overlap_beta(const TripleSet& s) {
  require_slice_increasing(s);
  CornerOverlap out;
  std::map<long long, std::vector<std::pair<long long, long long>>> by_label;
  for (const Triple& p : s.points) by_label[p.z].push_back({p.x, p.y});
  for (auto& [z, cells] : by_label) {
    std::sort(cells.begin(), cells.end());
    out.sum_label_squares +=
        static_cast<long long>(cells.size()) * static_cast<long long>(cells.size());
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        ++out.beta[{cells[a].first, cells[b].second}];
        ++out.beta[{cells[b].first, cells[a].second}];
        out.beta_total += 2;
      }
  }
  if (out.sum_label_squares !=
      static_cast<long long>(s.points.size()) + out.beta_total)
    throw std::logic_error("corner overlap identity failed");
  return out;
}

EdgeTypeCounts edge_type_counts(const TripleSet& s) {
  require_slice_increasing(s);
  EdgeTypeCounts c;
  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (std::size_t b = a + 1; b < s.points.size(); ++b) {
      Triple d = s.points[b] - s.points[a];
      if (strict_positives(d) < 2) d = s.points[a] - s.points[b];
      if (strict_positives(d) == 3) {
        ++c.k;
      } else if (d.z <= 0) {
        ++c.r;
        if (d.z == 0) ++c.r_same_slice;
      } else if (d.y <= 0) {
        ++c.g;
        if (d.y == 0) ++c.g_same_slice;
      } else {
        ++c.b;
        if (d.x == 0) ++c.b_same_slice;
      }
    }
  return c;
}

std::vector<BoundReport> verify_edge_bounds(const TripleSet& s,
                                            std::optional<long long> m_param) {
  if (!s.box) throw error("box-missing", "density bounds need a declared box");
  require_slice_increasing(s);
  long long n = std::max({s.box->x, s.box->y, s.box->z});
  if (n < 1) throw error("not-positive", "box must have positive dimensions");
  long long size = static_cast<long long>(s.points.size());
  EdgeTypeCounts c = edge_type_counts(s);
  std::vector<BoundReport> out;

  // Same-slice pairs per primary color: at least alpha*(alpha-1)*n/2.
  auto same_slice = [&](std::string name, long long lhs) {
    BoundReport r{std::move(name), n >= 1, true, lhs,
                  n >= 1 ? fraction_str(static_cast<I128>(size) * (size - n), 2 * n)
                         : "0"};
    if (r.applicable)
      r.holds = static_cast<I128>(2) * n * lhs >= static_cast<I128>(size) * (size - n);
    out.push_back(std::move(r));
  };
  same_slice("R-same-slice", c.r_same_slice);
  same_slice("G-same-slice", c.g_same_slice);
  same_slice("B-same-slice", c.b_same_slice);

  // Cross-slice pairs per primary color once alpha >= 3*sqrt(n):
  // at least alpha^4/16.
  bool cross_app = static_cast<I128>(size) * size >= static_cast<I128>(9) * n * n * n;
  auto cross_slice = [&](std::string name, long long lhs) {
    BoundReport r{std::move(name), cross_app, true, lhs,
                  n >= 1 ? fraction_str(static_cast<I128>(size) * size * size * size,
                                        static_cast<I128>(16) * n * n * n * n)
                         : "0"};
    if (r.applicable)
      r.holds = static_cast<I128>(16) * n * n * n * n * lhs >=
                static_cast<I128>(size) * size * size * size;
    out.push_back(std::move(r));
  };
  cross_slice("R-cross-slice", c.r - c.r_same_slice);
  cross_slice("G-cross-slice", c.g - c.g_same_slice);
  cross_slice("B-cross-slice", c.b - c.b_same_slice);

  // For alpha >= 3: every primary pair total, and the K count, reach
  // (alpha-1)*(alpha-3)^2*n/64.
  bool dense_app = size >= 3 * n && n >= 1;
  I128 dense_rhs_num = static_cast<I128>(size - n) * (size - 3 * n) * (size - 3 * n);
  I128 dense_rhs_den = static_cast<I128>(64) * n * n;
  auto dense = [&](std::string name, long long lhs) {
    BoundReport r{std::move(name), dense_app, true, lhs,
                  n >= 1 ? fraction_str(dense_rhs_num, dense_rhs_den) : "0"};
    if (r.applicable) r.holds = dense_rhs_den * lhs >= dense_rhs_num;
    out.push_back(std::move(r));
  };
  dense("RG-pair", c.r + c.g);
  dense("RB-pair", c.r + c.b);
  dense("GB-pair", c.g + c.b);
  dense("K-count", c.k);

  // Narrow-window K-edges: dy <= M with dx, dz >= alpha/8, for alpha >= 100
  // and n >= M >= 100n/alpha. Threshold alpha^3*M/2048.
  long long window = m_param.value_or(n);
  bool window_app = size >= 100 * n && n >= window && window >= 1 &&
                    static_cast<I128>(window) * size >= static_cast<I128>(100) * n * n;
  long long window_count = 0;
  if (window_app)
    for (std::size_t a = 0; a < s.points.size(); ++a)
      for (std::size_t b = a + 1; b < s.points.size(); ++b) {
        Triple d = s.points[b] - s.points[a];
        if (strict_positives(d) < 2) d = s.points[a] - s.points[b];
        if (strict_positives(d) == 3 && d.y <= window && 8 * d.x * n >= size &&
            8 * d.z * n >= size)
          ++window_count;
      }
  BoundReport win{"K-window", window_app, true, window_count,
                  n >= 1 ? fraction_str(static_cast<I128>(size) * size * size * window,
                                        static_cast<I128>(2048) * n * n * n)
                         : "0"};
  if (win.applicable)
    win.holds = static_cast<I128>(2048) * n * n * n * window_count >=
                static_cast<I128>(size) * size * size * window;
  out.push_back(std::move(win));
  return out;
}

std::string DifferenceType::name() const {
  std::string out = "(";
  for (int a = 0; a < 3; ++a) {
    switch (axes[a]) {
      case Sign::StrictPos: out += "+"; break;
      case Sign::StrictNeg: out += "-"; break;
      case Sign::WeakNonPos: out += "<=0"; break;
      case Sign::WeakNonNeg: out += ">=0"; break;
      case Sign::Any: out += "*"; break;
    }
    out += a < 2 ? "," : ")";
  }
  return out;
}

bool matches(const Triple& d, const DifferenceType& t) {
  for (int a = 0; a < 3; ++a) {
    long long v = d[a];
    switch (t.axes[a]) {
      case Sign::StrictPos:
        if (v <= 0) return false;
        break;
      case Sign::StrictNeg:
        if (v >= 0) return false;
        break;
      case Sign::WeakNonPos:
        if (v > 0) return false;
        break;
      case Sign::WeakNonNeg:
        if (v < 0) return false;
        break;
      case Sign::Any: break;
    }
  }
  return true;
}

AvoidingSubset max_avoiding_subset(const TripleSet& s, const DifferenceType& type,
                                   int cap) {
  int n = static_cast<int>(s.points.size());
  if (cap > 63) cap = 63;
  if (n > cap)
    throw error("too-large", std::to_string(n) + " points exceed the subset cap " +
                                 std::to_string(cap));
  std::vector<std::uint64_t> closed(n);
  for (int a = 0; a < n; ++a) {
    closed[a] |= 1ull << a;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (matches(s.points[b] - s.points[a], type) ||
          matches(s.points[a] - s.points[b], type))
        closed[a] |= 1ull << b;
    }
  }

  std::unordered_map<std::uint64_t, int> memo;
  auto mis = [&](auto&& self, std::uint64_t cand) -> int {
    if (cand == 0) return 0;
    auto it = memo.find(cand);
    if (it != memo.end()) return it->second;
    int pick = -1, pick_deg = -1;
    for (std::uint64_t rest = cand; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int deg = std::popcount(closed[v] & cand);
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    int best = std::max(self(self, cand & ~(1ull << pick)),
                        1 + self(self, cand & ~closed[pick]));
    memo[cand] = best;
    return best;
  };

  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  AvoidingSubset out;
  out.size = mis(mis, all);
  std::uint64_t cand = all;
  long long need = out.size;
  for (int v = 0; v < n && need > 0; ++v) {
    if (!(cand >> v & 1)) continue;
    if (1 + mis(mis, cand & ~closed[v]) == mis(mis, cand)) {
      out.points.push_back(v + 1);
      cand &= ~closed[v];
      --need;
    } else {
      cand &= ~(1ull << v);
    }
  }
  return out;
}

SzaboTardos szabo_tardos_m2(const TripleSet& s, int cap) {
  using namespace difference_types;
  SzaboTardos out;
  const std::array<DifferenceType, 4> types = {k_strict, r_strict, g_strict, b_strict};
  for (int t = 0; t < 4; ++t) {
    out.per_type[t] = max_avoiding_subset(s, types[t], cap).size;
    out.value = std::max(out.value, out.per_type[t]);
  }
  if (s.box && is_slice_increasing(s).ok) {
    long long n = std::max({s.box->x, s.box->y, s.box->z});
    if (out.value > 3 * n)
      throw std::logic_error("strict-type-avoiding subset exceeded 3n");
  }
  return out;
}

std::vector<RatTriple> perturb_phi(const TripleSet& s, const Rational& eps) {
  long long n = 1;
  if (s.box) {
    n = std::max({s.box->x, s.box->y, s.box->z, 1ll});
  } else {
    for (const Triple& p : s.points)
      n = std::max({n, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  }
  if (!(eps > Rational(0)) || !(eps < Rational(1, 10 * n)))
    throw error("epsilon-out-of-range",
                "need 0 < eps < 1/" + std::to_string(10 * n));

  std::vector<RatTriple> out;
  out.reserve(s.points.size());
  for (const Triple& p : s.points)
    out.push_back({Rational(p.x) - eps * Rational(p.z),
                   Rational(p.y) - eps * Rational(p.x),
                   Rational(p.z) - eps * Rational(p.y)});

  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (std::size_t b = 0; b < s.points.size(); ++b) {
      if (a == b) continue;
      Triple d = s.points[b] - s.points[a];
      if (d.x > 0 && d.y > 0 && d.z == 0) {
        RatTriple dp{out[b].x - out[a].x, out[b].y - out[a].y, out[b].z - out[a].z};
        if (!(dp.x > Rational(0) && dp.y > Rational(0) && dp.z < Rational(0)))
          throw std::logic_error("perturbation failed to sharpen a weak pair");
      }
    }
  return out;
}

Tournament color_points(const std::vector<RatTriple>& points) {
  int n = static_cast<int>(points.size());
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::optional<Color> c = classify_difference(
          points[j].x - points[i].x, points[j].y - points[i].y,
          points[j].z - points[i].z);
      if (!c)
        throw error("not-ordered", "pair (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") is not ordered");
      t.set_color(i + 1, j + 1, *c);
    }
  return t;
}

std::string Orientation::name() const {
  std::string out = "(";
  for (int a = 0; a < 3; ++a) {
    out += sign[a] > 0 ? "+" : "-";
    out += a < 2 ? "," : ")";
  }
  return out;
}

bool completely_avoids(const std::vector<Triple>& points, const Orientation& o) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (a == b) continue;
      Triple d = points[b] - points[a];
      bool weak_match = true;
      for (int axis = 0; axis < 3 && weak_match; ++axis)
        weak_match = o.sign[axis] > 0 ? d[axis] >= 0 : d[axis] <= 0;
      if (weak_match) return false;
    }
  return true;
}

long long SurfaceTable::value(const Triple& p) const {
  long long dy = box.hi.y - box.lo.y + 1, dz = box.hi.z - box.lo.z + 1;
  return values[((p.x - box.lo.x) * dy + (p.y - box.lo.y)) * dz + (p.z - box.lo.z)];
}

std::optional<SurfaceTable> ordered_surface_through(const std::vector<Triple>& points,
                                                    const Orientation& o,
                                                    const BoundingBox& box) {
  for (int a = 0; a < 3; ++a)
    if (box.lo[a] > box.hi[a]) throw error("bad-box", "empty bounding box");
  long long dx = box.hi.x - box.lo.x + 1, dy = box.hi.y - box.lo.y + 1,
            dz = box.hi.z - box.lo.z + 1;
  if (dx * dy * dz > (1ll << 24))
    throw error("too-large", "bounding box has too many cells");
  for (const Triple& p : points)
    for (int a = 0; a < 3; ++a)
      if (p[a] < box.lo[a] || p[a] > box.hi[a])
        throw error("out-of-box", "point outside the declared bounding box");

  if (!completely_avoids(points, o)) return std::nullopt;

  SurfaceTable tab{box, o, std::vector<long long>(dx * dy * dz, 0)};
  auto idx = [&](long long x, long long y, long long z) {
    return ((x - box.lo.x) * dy + (y - box.lo.y)) * dz + (z - box.lo.z);
  };
  for (long long x = box.lo.x; x <= box.hi.x; ++x)
    for (long long y = box.lo.y; y <= box.hi.y; ++y)
      for (long long z = box.lo.z; z <= box.hi.z; ++z)
        tab.values[idx(x, y, z)] = o.sign[0] * x + o.sign[1] * y + o.sign[2] * z;

  if (!points.empty()) {
    long long base = tab.value(points[0]);
    for (long long& v : tab.values) v -= base;
  }
  // One point at a time: raise the whole dominated/dominating orthant to pull
  // the new point onto the zero locus. Earlier points never sit inside the
  // shifted orthant because the set completely avoids the orientation.
  for (std::size_t k = 1; k < points.size(); ++k) {
    long long g = tab.value(points[k]);
    if (g == 0) continue;
    const Triple& p = points[k];
    for (long long x = box.lo.x; x <= box.hi.x; ++x)
      for (long long y = box.lo.y; y <= box.hi.y; ++y)
        for (long long z = box.lo.z; z <= box.hi.z; ++z) {
          Triple c{x, y, z};
          bool in_region = true;
          for (int a = 0; a < 3 && in_region; ++a) {
            long long rel = o.sign[a] * (c[a] - p[a]);
            in_region = g < 0 ? rel >= 0 : rel <= 0;
          }
          if (in_region) tab.values[idx(x, y, z)] -= g;
        }
  }

  for (long long x = box.lo.x; x <= box.hi.x; ++x)
    for (long long y = box.lo.y; y <= box.hi.y; ++y)
      for (long long z = box.lo.z; z <= box.hi.z; ++z) {
        if (x < box.hi.x) {
          long long step = o.sign[0] * (tab.values[idx(x + 1, y, z)] -
                                        tab.values[idx(x, y, z)]);
          if (step <= 0) throw std::logic_error("surface not strictly monotone in x");
        }
        if (y < box.hi.y) {
          long long step = o.sign[1] * (tab.values[idx(x, y + 1, z)] -
                                        tab.values[idx(x, y, z)]);
          if (step <= 0) throw std::logic_error("surface not strictly monotone in y");
        }
        if (z < box.hi.z) {
          long long step = o.sign[2] * (tab.values[idx(x, y, z + 1)] -
                                        tab.values[idx(x, y, z)]);
          if (step <= 0) throw std::logic_error("surface not strictly monotone in z");
        }
      }
  for (const Triple& p : points)
    if (tab.value(p) != 0) throw std::logic_error("surface misses an input point");
  return tab;
}

std::optional<SurfaceTable> ordered_surface_through(const TripleSet& s,
                                                    const Orientation& o) {
  if (!s.box) throw error("box-missing", "need a declared box");
  return ordered_surface_through(s.points, o, {{1, 1, 1}, *s.box});
}

bool three_point_surface_check(const TripleSet& s, int cap) {
  require_slice_increasing(s);
  int n = static_cast<int>(s.points.size());
  if (n > cap)
    throw error("too-large",
                std::to_string(n) + " points exceed the cap " + std::to_string(cap));
  static const std::array<Orientation, 3> kMixed = {
      Orientation{{1, 1, -1}}, Orientation{{1, -1, 1}}, Orientation{{-1, 1, 1}}};
  bool all_ok = true;
  for (int a = 0; a < n && all_ok; ++a)
    for (int b = a + 1; b < n && all_ok; ++b)
      for (int c = b + 1; c < n && all_ok; ++c) {
        std::vector<Triple> tri = {s.points[a], s.points[b], s.points[c]};
        bool found = false;
        for (const Orientation& o : kMixed)
          if (completely_avoids(tri, o)) {
            found = true;
            break;
          }
        all_ok = found;
      }
  if (all_ok != is_ordered(s).ok)
    throw std::logic_error("triple surface test disagrees with the majority order");
  return all_ok;
}

SubgridCheck subgrid_3x3_check(const TripleSet& s) {
  require_slice_increasing(s);
  GridView g = grid_view(s, Plane::XY);

  using Cell = std::pair<long long, long long>;
  std::map<long long, std::vector<Cell>> by_label;
  for (const auto& [cell, z] : g.labels) by_label[z].push_back(cell);
  struct PairRef {
    long long label;
    Cell p, q;
  };
  std::map<Cell, std::vector<PairRef>> corner_owners;
  for (auto& [z, cells] : by_label) {
    std::sort(cells.begin(), cells.end());
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        corner_owners[{cells[a].first, cells[b].second}].push_back(
            {z, cells[a], cells[b]});
        corner_owners[{cells[b].first, cells[a].second}].push_back(
            {z, cells[a], cells[b]});
      }
  }

  for (const auto& [corner, owners] : corner_owners)
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        if (owners[a].label == owners[b].label) continue;
        SubgridCheck bad{false, std::min(owners[a].label, owners[b].label),
                         std::max(owners[a].label, owners[b].label), corner};
        std::vector<Cell> four = {owners[a].p, owners[a].q, owners[b].p, owners[b].q};
        std::vector<long long> xs, ys;
        for (const Cell& c : four) {
          xs.push_back(c.first);
          ys.push_back(c.second);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        if (xs.size() != 3 || ys.size() != 3) return bad;
        for (long long x : xs)
          for (long long y : ys) {
            Cell c{x, y};
            if (g.labels.count(c) && std::find(four.begin(), four.end(), c) == four.end())
              return bad;
          }
      }
  return {};
}

}  // namespace rgbk
