#pragma once

#include <tuple>

#include "rgbk/tournament.hpp"

namespace rgbk {

// Recursive block decomposition. An internal node splits its vertices into
// m >= 2 blocks such that, treating K as wild, edges between two different
// blocks use at most one primary color per block pair, at most two primary
// colors overall, and never the avoided one. Leaves hold single vertices.
struct GallaiTree {
  std::vector<int> vertices;  // increasing original vertex ids
  std::optional<Color> avoided;
  std::vector<GallaiTree> children;  // ordered by first vertex

  bool leaf() const { return children.empty(); }
};

// Triangles i < j < k whose three edges show all of R, G and B.
std::vector<std::array<int, 3>> rainbow_triangles(const Tournament& t);

// Builds a decomposition tree if one exists. For each candidate avoided
// color the blocks start as the components of the graph of edges in that
// color and are merged until no block pair sees two different primary
// colors; with `directed`, blocks whose vertex ranges interleave are merged
// as well, so surviving blocks are contiguous intervals.
std::optional<GallaiTree> undirected_gallai(const Tournament& t);
std::optional<GallaiTree> directed_gallai(const Tournament& t);

// Independent check of the block constraints for a finished tree.
bool validate_gallai_tree(const Tournament& t, const GallaiTree& tree, bool directed);

struct MoralResult {
  bool ok = false;
  // One entry per K-edge of the input, in edge order.
  std::vector<std::tuple<int, int, Color>> assignment;
};

// Searches for an assignment of every K-edge to a primary color leaving no
// rainbow triangle. Throws "too-many-k-edges" beyond the cap.
MoralResult is_morally_rainbow_free(const Tournament& t, int cap_k_edges = 20);

// Same search, but the recolored tournament must be geometric (so the input
// is order-isomorphic to a K-free point configuration).
MoralResult is_morally_k_free(const Tournament& t, int cap_k_edges = 20);

// Indented text form: internal nodes print "avoid=<Z> blocks=[...]" with each
// block given as runs like "1..3" or "4+6..7", leaves print "leaf v=<i>".
std::string to_text(const GallaiTree& tree);

}  // namespace rgbk
