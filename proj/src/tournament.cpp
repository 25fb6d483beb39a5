#include "rgbk/tournament.hpp"

#include <algorithm>

namespace rgbk {

Tournament::Tournament(int n, Color fill) : n_(n) {
  if (n < 0) throw error("size-mismatch", "negative vertex count");
  colors_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, fill);
}

std::size_t Tournament::index(int i, int j) const {
  if (i < 1 || j <= i || j > n_)
    throw error("missing-edge",
                "no edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  // Row i holds the n-i colors for edges (i, i+1) .. (i, n).
  std::size_t row_start =
      static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2;
  return row_start + static_cast<std::size_t>(j - i - 1);
}

long long Tournament::count(Color c) const {
  return std::count(colors_.begin(), colors_.end(), c);
}

Tournament Tournament::induced(const std::vector<int>& vertices) const {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  Tournament t(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      t.set_color(static_cast<int>(a) + 1, static_cast<int>(b) + 1, color(vs[a], vs[b]));
  return t;
}

}  // namespace rgbk
