#pragma once

#include <vector>

#include "rgbk/types.hpp"

namespace rgbk {

// Transitive tournament on vertices 1..n with every forward edge i -> j
// (i < j) carrying a color from {R, G, B, K}. Stored as the upper triangle
// in row-major order.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(int n, Color fill = Color::K);

  int size() const { return n_; }
  long long edge_count() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

  Color color(int i, int j) const { return colors_[index(i, j)]; }
  void set_color(int i, int j, Color c) { colors_[index(i, j)] = c; }

  long long count(Color c) const;

  // Subtournament induced on the given vertices (kept in increasing order).
  Tournament induced(const std::vector<int>& vertices) const;

  bool operator==(const Tournament&) const = default;

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<Color> colors_;
};

}  // namespace rgbk
