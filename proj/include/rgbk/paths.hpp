#pragma once

#include "rgbk/tournament.hpp"

namespace rgbk {

// Longest path lengths counted in vertices: a single vertex is a path of
// length 1, the empty tournament has maximum 0.
struct ClassLengths {
  std::vector<int> ending_at;  // ending_at[v-1] for vertex v
  int max = 0;
};

// Longest path ending at each vertex whose edges all lie in `cls`.
ClassLengths longest_class_lengths(const Tournament& t, ColorClass cls);

// The three per-vertex lengths that make up a record: RGK (x), RBK (y),
// GBK (z).
struct PathLengths {
  ClassLengths rgk, rbk, gbk;
  Triple maxima() const { return {rgk.max, rbk.max, gbk.max}; }
};

PathLengths path_lengths(const Tournament& t);

struct ProductBound {
  long long product = 0;   // l(RGK) * l(RBK) * l(GBK)
  long long floor = 0;     // n^2
  bool holds = false;      // product >= n^2
};

ProductBound product_bound(const Tournament& t);

}  // namespace rgbk
