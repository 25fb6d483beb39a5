#include "rgbk/transforms.hpp"

#include <string>

namespace rgbk {

TripleSet record(const Tournament& t) {
  PathLengths pl = path_lengths(t);
  TripleSet s;
  s.points.reserve(t.size());
  for (int v = 1; v <= t.size(); ++v)
    s.points.push_back({pl.rgk.ending_at[v - 1], pl.rbk.ending_at[v - 1],
                        pl.gbk.ending_at[v - 1]});
  s.box = pl.maxima();
  return s;
}

Tournament color(const TripleSet& s) {
  int n = static_cast<int>(s.points.size());
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Triple d = s.points[j] - s.points[i];
      std::optional<Color> c = classify_difference(d.x, d.y, d.z);
      if (!c)
        throw error("not-ordered", "pair (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) +
                                       ") has fewer than two increasing coordinates");
      t.set_color(i + 1, j + 1, *c);
    }
  return t;
}

Tournament dual(const Tournament& t) {
  int n = t.size();
  Tournament d(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      d.set_color(i, j, t.color(n + 1 - j, n + 1 - i));
  return d;
}

CanonicalizeResult canonicalize(const Tournament& t) {
  CanonicalizeResult res{t, {t.count(Color::K)}};

  auto apply = [&res](Tournament next) {
    if (next == res.tournament) return false;
    long long count = next.count(Color::K);
    if (count <= res.k_trace.back())
      throw std::logic_error(
          "internal-nontermination: canonicalization step changed the "
          "tournament without increasing the K-edge count");
    res.tournament = std::move(next);
    res.k_trace.push_back(count);
    return true;
  };

  long long round_cap = t.edge_count() + 1;
  for (long long round = 0;; ++round) {
    if (round > round_cap)
      throw std::logic_error(
          "internal-nontermination: canonicalization exceeded the edge-count "
          "round bound");
    bool changed = apply(color(record(res.tournament)));
    changed |= apply(dual(color(record(dual(res.tournament)))));
    if (!changed) break;
  }
  return res;
}

Tournament lex_product(const Tournament& t1, const Tournament& t2, long long cap) {
  long long n1 = t1.size(), n2 = t2.size();
  long long n = n1 * n2;
  if (n > cap)
    throw error("size-overflow", "product has " + std::to_string(n) +
                                     " vertices, cap is " + std::to_string(cap));
  Tournament p(static_cast<int>(n));
  for (long long v = 1; v <= n; ++v)
    for (long long w = v + 1; w <= n; ++w) {
      int a = static_cast<int>((v - 1) / n2) + 1, b = static_cast<int>((v - 1) % n2) + 1;
      int c = static_cast<int>((w - 1) / n2) + 1, d = static_cast<int>((w - 1) % n2) + 1;
      p.set_color(static_cast<int>(v), static_cast<int>(w),
                  a == c ? t2.color(b, d) : t1.color(a, c));
    }
  return p;
}

TripleSet lex_product(const TripleSet& s1, const TripleSet& s2, long long cap) {
  if (!s1.box || !s2.box)
    throw error("missing-box", "triple-set products need boxes on both factors");
  long long n = static_cast<long long>(s1.size()) * static_cast<long long>(s2.size());
  if (n > cap)
    throw error("size-overflow", "product has " + std::to_string(n) +
                                     " points, cap is " + std::to_string(cap));
  TripleSet out;
  out.points.reserve(n);
  Triple b2 = *s2.box;
  for (const Triple& p : s1.points)
    for (const Triple& q : s2.points)
      out.points.push_back(
          {b2.x * (p.x - 1) + q.x, b2.y * (p.y - 1) + q.y, b2.z * (p.z - 1) + q.z});
  out.box = Triple{s1.box->x * b2.x, s1.box->y * b2.y, s1.box->z * b2.z};
  return out;
}

Tournament blowup(const Tournament& h, const std::vector<std::pair<int, int>>& weights,
                  long long cap) {
  for (int i = 1; i <= h.size(); ++i)
    for (int j = i + 1; j <= h.size(); ++j)
      if (h.color(i, j) == Color::G)
        throw error("has-g-edge", "edge (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is G");
  return blowup_any(h, weights, cap);
}

Tournament blowup_any(const Tournament& h,
                      const std::vector<std::pair<int, int>>& weights,
                      long long cap) {
  int m = h.size();
  if (static_cast<int>(weights.size()) != m)
    throw error("size-mismatch", "need one weight pair per vertex");
  long long total = 0;
  std::vector<long long> offset(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    auto [b, r] = weights[i];
    if (b < 1 || r < 1) throw error("bad-weight", "weights must be positive");
    total += static_cast<long long>(b) * r;
    offset[i + 1] = total;
  }
  if (total > cap)
    throw error("size-overflow", "blowup has " + std::to_string(total) +
                                     " vertices, cap is " + std::to_string(cap));

  Tournament t(static_cast<int>(total));
  // Block i covers offset[i]+1 .. offset[i+1]; inside it, position
  // (u-1)*r_i + v corresponds to grid cell (u, v).
  auto block_of = [&](long long v) {
    int i = 0;
    while (offset[i + 1] < v) ++i;
    return i;
  };
  for (long long v = 1; v <= total; ++v) {
    int bi = block_of(v);
    for (long long w = v + 1; w <= total; ++w) {
      int bj = block_of(w);
      if (bi != bj) {
        t.set_color(static_cast<int>(v), static_cast<int>(w), h.color(bi + 1, bj + 1));
      } else {
        long long u1 = (v - offset[bi] - 1) / weights[bi].second;
        long long u2 = (w - offset[bi] - 1) / weights[bi].second;
        t.set_color(static_cast<int>(v), static_cast<int>(w),
                    u1 == u2 ? Color::R : Color::B);
      }
    }
  }
  return t;
}

}  // namespace rgbk
