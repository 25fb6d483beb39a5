#include "rgbk/generators.hpp"

#include <algorithm>
#include <string>

#include "rgbk/geometry.hpp"
#include "rgbk/transforms.hpp"

namespace rgbk {

TripleSet standard_lex(long long m, long long cap) {
  if (m < 1) throw error("not-positive", "need m >= 1");
  if (m > 100 || m * m * m > cap)
    throw error("size-overflow", "m^3 points exceed the cap");
  TripleSet s;
  s.box = Triple{m * m, m * m, m * m};
  s.points.reserve(m * m * m);
  for (long long a = 1; a <= m; ++a)
    for (long long b = 1; b <= m; ++b)
      for (long long c = 1; c <= m; ++c)
        s.points.push_back({(a - 1) * m + b, (a - 1) * m + c, (b - 1) * m + c});
  return s;
}

TripleSet kflat(int k, long long cap) {
  if (k < 1) throw error("not-positive", "need k >= 1");
  TripleSet l1{{{1, 1, 3}, {2, 2, 1}}, Triple{2, 2, 3}};
  TripleSet l2{{{3, 1, 1}, {1, 2, 2}}, Triple{3, 2, 2}};
  TripleSet l3{{{1, 3, 1}, {2, 1, 2}}, Triple{2, 3, 2}};
  TripleSet unit = lex_product(lex_product(l1, l2, cap), l3, cap);
  TripleSet out = unit;
  for (int i = 1; i < k; ++i) out = lex_product(out, unit, cap);
  return out;
}

TripleSet sumset(const std::vector<std::vector<long long>>& f,
                 const std::vector<std::vector<long long>>& g,
                 const std::vector<std::vector<long long>>& h, long long cap) {
  auto rows = [](const std::vector<std::vector<long long>>& t) {
    return static_cast<long long>(t.size());
  };
  auto cols = [](const std::vector<std::vector<long long>>& t, const char* name) {
    if (t.empty()) throw error("size-mismatch", std::string(name) + " is empty");
    std::size_t c = t[0].size();
    if (c == 0) throw error("size-mismatch", std::string(name) + " has empty rows");
    for (const auto& row : t)
      if (row.size() != c)
        throw error("size-mismatch", std::string(name) + " is ragged");
    return static_cast<long long>(c);
  };
  long long na = rows(f), nb = cols(f, "f"), nc = cols(g, "g");
  if (rows(g) != na || rows(h) != nb || cols(h, "h") != nc)
    throw error("size-mismatch", "table dimensions disagree");

  auto check_table = [](const std::vector<std::vector<long long>>& t,
                        const char* name) {
    std::vector<long long> all;
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < t[r].size(); ++c) {
        if (c + 1 < t[r].size() && t[r][c] >= t[r][c + 1])
          throw error("not-increasing", std::string(name) + " at row " +
                                            std::to_string(r + 1));
        if (r + 1 < t.size() && t[r][c] >= t[r + 1][c])
          throw error("not-increasing", std::string(name) + " at column " +
                                            std::to_string(c + 1));
        all.push_back(t[r][c]);
      }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw error("not-injective", std::string(name) + " repeats a value");
  };
  check_table(f, "f");
  check_table(g, "g");
  check_table(h, "h");

  if (na * nb * nc > cap) throw error("size-overflow", "too many points");
  TripleSet s;
  s.points.reserve(na * nb * nc);
  for (long long a = 0; a < na; ++a)
    for (long long b = 0; b < nb; ++b)
      for (long long c = 0; c < nc; ++c)
        s.points.push_back({f[a][b], g[a][c], h[b][c]});

  if (!is_slice_increasing(s).ok)
    throw std::logic_error("sumset image is not majority-comparable");
  OrderedCheck oc = is_ordered(s);
  if (!oc.ok)
    throw error("not-ordered", "majority tournament of the image has a cycle");
  std::vector<Triple> ordered;
  ordered.reserve(s.points.size());
  for (int pos : oc.listing) ordered.push_back(s.points[pos - 1]);
  s.points = std::move(ordered);
  return s;
}

}  // namespace rgbk
