#include "rgbk/paths.hpp"

#include <algorithm>

namespace rgbk {

ClassLengths longest_class_lengths(const Tournament& t, ColorClass cls) {
  int n = t.size();
  ClassLengths out;
  out.ending_at.assign(n, 1);
  for (int v = 2; v <= n; ++v) {
    int best = 1;
    for (int u = 1; u < v; ++u)
      if (cls.contains(t.color(u, v)))
        best = std::max(best, out.ending_at[u - 1] + 1);
    out.ending_at[v - 1] = best;
  }
  out.max = n == 0 ? 0 : *std::max_element(out.ending_at.begin(), out.ending_at.end());
  return out;
}

PathLengths path_lengths(const Tournament& t) {
  return {longest_class_lengths(t, classes::RGK),
          longest_class_lengths(t, classes::RBK),
          longest_class_lengths(t, classes::GBK)};
}

ProductBound product_bound(const Tournament& t) {
  PathLengths pl = path_lengths(t);
  ProductBound pb;
  pb.product = static_cast<long long>(pl.rgk.max) * pl.rbk.max * pl.gbk.max;
  pb.floor = static_cast<long long>(t.size()) * t.size();
  pb.holds = pb.product >= pb.floor;
  return pb;
}

}  // namespace rgbk
