#pragma once

#include <utility>

#include "rgbk/paths.hpp"
#include "rgbk/tournament.hpp"

namespace rgbk {

// Sign classification of a coordinate difference. A strict increase in all
// three coordinates is K; a strict increase in exactly two with the third
// weakly decreasing is the primary color named after the weak coordinate
// pattern: R = (+,+,<=0), G = (+,<=0,+), B = (<=0,+,+). Fewer than two
// strict increases means the pair is not ordered.
template <class Num>
std::optional<Color> classify_difference(const Num& dx, const Num& dy, const Num& dz) {
  Num zero{};
  int pos = (dx > zero ? 1 : 0) + (dy > zero ? 1 : 0) + (dz > zero ? 1 : 0);
  if (pos == 3) return Color::K;
  if (pos != 2) return std::nullopt;
  if (!(dz > zero)) return Color::R;
  if (!(dy > zero)) return Color::G;
  return Color::B;
}

// Per-vertex triple of longest RGK-, RBK- and GBK-path lengths ending there.
// The listing inherits the vertex order and the box is the triple of maxima.
TripleSet record(const Tournament& t);

// Tournament on the points of an ordered listing, edge (i, j) colored by the
// sign pattern of points[j] - points[i]. Throws "not-ordered" naming the
// first offending pair (1-based positions in the listing).
Tournament color(const TripleSet& s);

// Reverse the vertex order while keeping every edge color: edge (i, j) of the
// result carries the color of (n+1-j, n+1-i). Involutive.
Tournament dual(const Tournament& t);

struct CanonicalizeResult {
  Tournament tournament;
  // K-edge count of the input followed by the count after every application
  // that changed the tournament. Strictly increasing; length 1 iff the input
  // was already canonical.
  std::vector<long long> k_trace;
};

// Alternates color(record(.)) with its order-reversed conjugate
// dual(color(record(dual(.)))) until both leave the tournament unchanged.
// Each effective application strictly increases the K-edge count, which
// bounds the number of rounds by the edge count plus one.
CanonicalizeResult canonicalize(const Tournament& t);

// Lexicographic product: vertex set [n1] x [n2] ordered lexicographically,
// edge (v1,v2) -> (w1,w2) colored like v1 -> w1 in the left factor unless
// v1 = w1, in which case it inherits v2 -> w2 from the right factor.
Tournament lex_product(const Tournament& t1, const Tournament& t2,
                       long long cap = kDefaultVertexCap);

// Lexicographic product of boxed triple sets: each coordinate of the right
// factor is nested inside one cell of the left factor's box. Boxes multiply
// componentwise. Throws "missing-box" if either factor lacks a box.
TripleSet lex_product(const TripleSet& s1, const TripleSet& s2,
                      long long cap = kDefaultVertexCap);

// Replace vertex i of a G-free tournament by a b_i x r_i grid block: inside a
// block, edges with distinct first grid coordinate are B and the rest are R;
// edges between blocks inherit the base color.
Tournament blowup(const Tournament& h, const std::vector<std::pair<int, int>>& weights,
                  long long cap = kDefaultVertexCap);

// Same vertex replacement without the R/B/K restriction on the base; G edges
// between blocks are inherited like any other color.
Tournament blowup_any(const Tournament& h,
                      const std::vector<std::pair<int, int>>& weights,
                      long long cap = kDefaultVertexCap);

}  // namespace rgbk
