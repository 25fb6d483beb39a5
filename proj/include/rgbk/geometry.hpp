#pragma once

#include <array>
#include <map>
#include <string>

#include "rgbk/tournament.hpp"
#include "rgbk/types.hpp"

namespace rgbk {

struct PairWitness {
  int i = 0, j = 0;  // 1-based listing positions
};

struct SliceCheck {
  bool ok = true;
  PairWitness bad_pair;
  explicit operator bool() const { return ok; }
};

// Every pair of points is majority-comparable: the difference has at least
// two strictly positive or at least two strictly negative coordinates.
SliceCheck is_slice_increasing(const TripleSet& s);

struct OrderedCheck {
  bool ok = true;
  std::vector<int> listing;      // 1-based positions in majority order
  std::array<int, 3> cycle{};    // a directed 3-cycle when !ok
};

// Whether the majority-direction tournament on a slice-increasing set is
// acyclic. Throws "not-slice-increasing" when the precondition fails.
OrderedCheck is_ordered(const TripleSet& s);

enum class Plane { XY, XZ, YZ };

// Projection of a triple set onto two coordinates, the remaining coordinate
// becoming the cell label. Requires the projection to be injective
// ("projection-collision" otherwise). For slice-increasing input the label
// structure is checked: labels increase along rows and columns, same-label
// cells are coordinate-wise comparable, and the two off-corners spanned by a
// same-label pair are empty.
struct GridView {
  Plane plane;
  long long lo1 = 1, hi1 = 0, lo2 = 1, hi2 = 0;  // column / row ranges
  std::map<std::pair<long long, long long>, long long> labels;
};

GridView grid_view(const TripleSet& s, Plane plane);

// One text row per grid row, highest second coordinate first. Cells are
// pipe-separated, right-justified to the widest label, blank when empty:
//   | 1 | 4 |   |
std::string render_ascii(const GridView& g);
std::string render_json(const GridView& g);

struct SliceProfile {
  char axis = 'z';
  std::vector<long long> counts;  // counts[i-1] = points with coordinate i
  long long sum_squares = 0;
};

SliceProfile slice_profile(const TripleSet& s, char axis);

// Corners spanned by same-label pairs of the xy-grid, with multiplicity.
// Satisfies sum of squared label multiplicities = |S| + total corner count.
struct CornerOverlap {
  std::map<std::pair<long long, long long>, long long> beta;
  long long beta_total = 0;
  long long sum_label_squares = 0;
};

CornerOverlap corner_overlap_beta(const TripleSet& s);

// Pair classification along the majority direction, split into same-slice
// pairs (the weak coordinate difference is exactly zero) and the rest.
struct EdgeTypeCounts {
  long long r = 0, g = 0, b = 0, k = 0;
  long long r_same_slice = 0;  // dz == 0
  long long g_same_slice = 0;  // dy == 0
  long long b_same_slice = 0;  // dx == 0
};

EdgeTypeCounts edge_type_counts(const TripleSet& s);

// Density bounds for a slice-increasing set inside the cube spanned by its
// box (side n = largest dimension, alpha = |S|/n). Inapplicable bounds are
// reported with applicable=false and holds=true.
struct BoundReport {
  std::string name;
  bool applicable = false;
  bool holds = true;
  long long lhs = 0;       // the counted quantity
  std::string rhs;         // exact threshold as a fraction
};

std::vector<BoundReport> verify_edge_bounds(const TripleSet& s,
                                            std::optional<long long> m_param = {});

// Requirement on one coordinate of a difference vector.
enum class Sign { StrictPos, StrictNeg, WeakNonPos, WeakNonNeg, Any };

struct DifferenceType {
  std::array<Sign, 3> axes;
  std::string name() const;
};

namespace difference_types {
inline constexpr DifferenceType r_type{{Sign::StrictPos, Sign::StrictPos, Sign::WeakNonPos}};
inline constexpr DifferenceType g_type{{Sign::StrictPos, Sign::WeakNonPos, Sign::StrictPos}};
inline constexpr DifferenceType b_type{{Sign::WeakNonPos, Sign::StrictPos, Sign::StrictPos}};
inline constexpr DifferenceType k_strict{{Sign::StrictPos, Sign::StrictPos, Sign::StrictPos}};
inline constexpr DifferenceType r_strict{{Sign::StrictPos, Sign::StrictPos, Sign::StrictNeg}};
inline constexpr DifferenceType g_strict{{Sign::StrictPos, Sign::StrictNeg, Sign::StrictPos}};
inline constexpr DifferenceType b_strict{{Sign::StrictNeg, Sign::StrictPos, Sign::StrictPos}};
}  // namespace difference_types

bool matches(const Triple& d, const DifferenceType& t);

struct AvoidingSubset {
  std::vector<int> points;  // 1-based positions, lexicographically least optimum
  long long size = 0;
};

// Largest subset no ordered pair of which realizes the difference type (both
// directions of every pair are tested). Branch-and-bound over the conflict
// graph; throws "too-large" beyond the cap.
AvoidingSubset max_avoiding_subset(const TripleSet& s, const DifferenceType& type,
                                   int cap = 24);

struct SzaboTardos {
  long long value = 0;
  std::array<long long, 4> per_type{};  // strict K, R, G, B variants
};

// Maximum of max_avoiding_subset over the four strict difference types. For
// slice-increasing boxed input the value is checked against 3n.
SzaboTardos szabo_tardos_m2(const TripleSet& s, int cap = 24);

struct RatTriple {
  Rational x, y, z;
  bool operator==(const RatTriple&) const = default;
};

// The shear (x, y, z) -> (x - eps*z, y - eps*x, z - eps*y). For
// 0 < eps < 1/(10n) it turns every weak pair difference strict while keeping
// all sign classifications; the (+,+,0) -> (+,+,-) conversion is checked.
std::vector<RatTriple> perturb_phi(const TripleSet& s, const Rational& eps);

// Edge colors of a listing of rational points, for comparing a perturbed set
// against its integer original.
Tournament color_points(const std::vector<RatTriple>& points);

struct Orientation {
  std::array<int, 3> sign;  // +1 or -1 per axis
  std::string name() const;
};

// True iff no ordered pair (p, q) of distinct points has q - p weakly
// matching the orientation (>= 0 on + axes, <= 0 on - axes).
bool completely_avoids(const std::vector<Triple>& points, const Orientation& o);

struct BoundingBox {
  Triple lo, hi;  // inclusive
};

// Integer function table on a box, strictly monotone along every axis in the
// direction of the orientation sign.
struct SurfaceTable {
  BoundingBox box;
  Orientation o;
  std::vector<long long> values;
  long long value(const Triple& p) const;
};

// Builds a strictly monotone function vanishing on all the given points, or
// returns nothing when no such function exists (exactly when some pair
// weakly matches the orientation). The result is revalidated before being
// returned.
std::optional<SurfaceTable> ordered_surface_through(const std::vector<Triple>& points,
                                                    const Orientation& o,
                                                    const BoundingBox& box);
std::optional<SurfaceTable> ordered_surface_through(const TripleSet& s,
                                                    const Orientation& o);

// Every three points admit one of the orientations (+,+,-), (+,-,+), (-,+,+)
// that they completely avoid. Agrees with is_ordered on slice-increasing
// sets; that agreement is checked on every call.
bool three_point_surface_check(const TripleSet& s, int cap = 24);

// When two same-label pairs of the xy-grid share a spanned corner, the four
// cells occupy a 3x3 sub-grid (three distinct columns and rows) that holds no
// other label.
struct SubgridCheck {
  bool ok = true;
  long long label_a = 0, label_b = 0;
  std::pair<long long, long long> corner{};
};

SubgridCheck subgrid_3x3_check(const TripleSet& s);

}  // namespace rgbk
