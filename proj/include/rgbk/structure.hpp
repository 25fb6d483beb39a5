#pragma once

#include <map>
#include <string>

#include "rgbk/transforms.hpp"

namespace rgbk {

// Vertices grouped by the length of the longest cls-colored path ending at
// them. Stratum l (1-based) is strata[l-1], listed in increasing vertex
// order; minimal[l-1] is its smallest vertex.
struct Stratification {
  ColorClass cls;
  std::vector<std::vector<int>> strata;
  std::vector<int> minimal;
};

// Builds the stratification and checks the traceback property: every vertex
// of stratum l >= 2 has a cls-colored edge from some earlier vertex of
// stratum l-1. That holds for every tournament, so a failure throws
// std::logic_error.
Stratification stratification(const Tournament& t, ColorClass cls);

// Stratification of the order-reversed tournament, mapped back through
// v -> n+1-v. The `minimal` entries are the images of the reversed
// tournament's minimal vertices, i.e. per-stratum maxima on the original
// vertex numbering.
Stratification dual_stratification(const Tournament& t, ColorClass cls);

struct GeometricCheck {
  bool ok = true;
  int i = 0, j = 0, k = 0;  // lexicographically least violating triple
  ColorClass cls{};
  explicit operator bool() const { return ok; }
};

// Transitivity of the edge relation restricted to each of R, G, B, RGK, RBK,
// GBK: color(i,j) and color(j,k) in the class forces color(i,k) in it too.
GeometricCheck is_geometric(const Tournament& t);

// Connected components of the undirected graph kept by cls-colored edges,
// sorted by smallest vertex, each flagged if it is a contiguous interval.
struct IntervalComponents {
  std::vector<std::vector<int>> components;
  std::vector<bool> is_interval;
  bool all_intervals = true;
};
IntervalComponents interval_components(const Tournament& t, ColorClass cls);

// Edge u -> v is cls-colored exactly when u lies in a strictly lower stratum.
bool is_geometric_stratification(const Tournament& t, ColorClass cls);

// The minimal vertices form an increasing sequence joined by cls-colored
// edges.
bool minimal_path_is_class_colored(const Tournament& t, ColorClass cls);

struct FixedCheck {
  bool fixed = true;
  // Empty when fixed; otherwise the first structural criterion that failed,
  // e.g. "not-geometric", "stratification(RBK)", "minimal-path(RGK)".
  std::string failed;
};

// Whether color(record(t)) == t. Decided structurally (geometric, geometric
// stratifications, class-colored minimal paths) and cross-checked against
// the direct computation; disagreement throws std::logic_error.
FixedCheck is_color_record_fixed(const Tournament& t);

struct ReducedCheck {
  bool reduced = true;
  int point = 0;  // 1-based listing position of the first witnessless point
  char axis = ' ';
};

// Every point with c-coordinate i >= 2 needs a witness in the set with
// c-coordinate exactly i-1 such that the difference towards the point has at
// least two strictly positive coordinates. Requires positive coordinates and
// an ordered listing.
ReducedCheck is_reduced_set(const TripleSet& s);

// Fixed under both color(record(.)) and its order-reversed conjugate.
// Decided through the record: record(t) and its box-reflection must both be
// reduced and color(record(t)) must reproduce t. Cross-checked against the
// direct fixed-point computation; disagreement throws std::logic_error.
bool is_canonical(const Tournament& t);

// For each path class, the reversed tournament's strata (mapped back) are
// the original strata listed in reverse order.
bool dual_strata_reverse_check(const Tournament& t);

struct GridNeighborResult {
  bool ok = true;
  long long x = 0, y = 0;  // first violating square
  int bullet = 0;          // 1 = above/right, 2 = below/left
  // For every unlabeled square: the smallest z among labels strictly above in
  // its column or strictly right in its row, and the largest z among labels
  // strictly below or strictly left.
  std::map<std::pair<long long, long long>, long long> min_above_right;
  std::map<std::pair<long long, long long>, long long> max_below_left;
};

// On the xy-grid of record(t) with t canonical: every square has a label
// above-or-right of it unless (and only unless) it is itself labeled and
// maximal in both its row and column, and symmetrically below-or-left with
// minimal. Throws "not-canonical" otherwise.
GridNeighborResult grid_neighbor_property(const Tournament& t);

struct KSaturationResult {
  bool ok = true;
  int i = 0, j = 0;  // first edge whose recoloring misbehaved
};

// Recoloring any primary edge of a canonical tournament to K strictly
// increases the maximum over the class avoiding that primary and leaves the
// other two maxima unchanged. Throws "not-canonical" on other input.
KSaturationResult k_saturation_check(const Tournament& t);

}  // namespace rgbk
