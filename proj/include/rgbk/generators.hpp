#pragma once

#include "rgbk/types.hpp"

namespace rgbk {

// The m-per-axis three-view set {((a-1)m+b, (a-1)m+c, (b-1)m+c)}: m^3 points
// inside the box (m^2, m^2, m^2), listed in majority order.
TripleSet standard_lex(long long m, long long cap = kDefaultVertexCap);

// k-fold lexicographic product of the 8-point unit built from the two-point
// list with difference (1,1,-2) and its two cyclic rotations, all shifted to
// positive coordinates. 8^k points, box (12^k, 12^k, 12^k).
TripleSet kflat(int k, long long cap = kDefaultVertexCap);

// (a,b,c) -> (f(a,b), g(a,c), h(b,c)) over full index ranges. Tables must be
// injective and strictly increasing in both coordinates ("not-injective",
// "not-increasing"). The image is always majority-comparable but need not be
// orderable; "not-ordered" is thrown when the majority tournament is cyclic,
// otherwise points come back in majority order.
TripleSet sumset(const std::vector<std::vector<long long>>& f,
                 const std::vector<std::vector<long long>>& g,
                 const std::vector<std::vector<long long>>& h,
                 long long cap = kDefaultVertexCap);

}  // namespace rgbk
