#pragma once

#include "rgbk/tournament.hpp"
#include "rgbk/types.hpp"

namespace rgbk {

// R/B/K tournament with per-vertex weights for the two path directions.
struct WeightedInstance {
  Tournament h;
  std::vector<Rational> b_weights, r_weights;
};

struct WeightedPath {
  Rational value;
  std::vector<int> path;  // 1-based vertices, increasing
};

// Maximum weight sum over directed paths whose edges all lie in cls, with a
// deterministic witness (smallest predecessors, smallest final vertex).
// Throws "size-mismatch" / "negative-weight" on bad weights.
WeightedPath max_weighted_class_path(const Tournament& h, const ColorClass& cls,
                                     const std::vector<Rational>& weights);

struct WeightedEsReport {
  bool holds = true;
  WeightedPath b_best, r_best;
  Rational pairwise_sum;  // sum over vertices of b_i * r_i
};

// Max BK-path weight times max RK-path weight is at least the pairwise sum.
// For geometric instances the path values are cross-checked against maximum
// weight BK- and RK-cliques. Throws "has-g-edge" for non-R/B/K input.
WeightedEsReport verify_weighted_es(const WeightedInstance& inst);

struct SteeleReport {
  Rational max_sum;        // best monotone subset sum, empty set allowed
  Rational bound_squared;  // sum of max(x, 0)^2
  bool holds = true;       // max_sum^2 >= bound_squared
  std::vector<int> witness;  // 1-based indices of an optimal subset
};

// Max sum over index subsets whose value subsequence is monotone, compared
// against the square-root bound in squared form. Entries must be pairwise
// distinct ("duplicate-values").
SteeleReport erdos_steele_bound(const std::vector<Rational>& xs);

}  // namespace rgbk
