#pragma once

#include <string>
#include <string_view>

#include "rgbk/tournament.hpp"

namespace rgbk {

// Tournament text format, one tournament per file:
//   line 1: n
//   line 1+i (1 <= i <= n-1): n-i characters from {R,G,B,K}; character j is
//   the color of edge i -> i+j.
// Triple-set text format:
//   optional header "box n1 n2 n3", then one "x y z" line per point, in
//   listing order.
// Parsers skip blank lines and lines starting with '#'; serializers emit the
// canonical form with neither.

struct EdgeEntry {
  int i = 0, j = 0;
  char color = '?';
};

struct Diagnostics {
  bool ok = true;
  std::string kind;  // "missing-edge", "duplicate-edge", "bad-color", "size-mismatch"
  int i = 0, j = 0;  // offending pair when applicable
  std::string message;
};

// Checks that every pair i < j <= n carries exactly one valid color and that
// no entry falls outside the declared size. Reports the first defect:
// entries are scanned in input order (range, duplicate and color checks),
// then missing pairs in lexicographic order.
Diagnostics validate_edges(int n, const std::vector<EdgeEntry>& entries);

// Builds the tournament or throws an `error` carrying the diagnostic kind.
Tournament tournament_from_edges(int n, const std::vector<EdgeEntry>& entries);

Tournament parse_tournament(std::string_view text, long long cap = kDefaultVertexCap);
std::string to_text(const Tournament& t);

TripleSet parse_triples(std::string_view text, long long cap = kDefaultVertexCap);
std::string to_text(const TripleSet& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace rgbk
