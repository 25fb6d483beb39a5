#include "rgbk/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rgbk {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line[0] != '#') out.emplace_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

long long parse_int(std::string_view token, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw error("parse-error", std::string("expected an integer for ") + what +
                                   ", got \"" + std::string(token) + "\"");
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Diagnostics validate_edges(int n, const std::vector<EdgeEntry>& entries) {
  if (n < 0)
    return {false, "size-mismatch", 0, 0, "negative vertex count"};
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (const EdgeEntry& e : entries) {
    if (e.i < 1 || e.j <= e.i || e.j > n)
      return {false, "size-mismatch", e.i, e.j,
              "pair " + pair_str(e.i, e.j) + " is outside a " + std::to_string(n) +
                  "-vertex tournament"};
    char& slot = seen[static_cast<std::size_t>(e.i - 1) * n + (e.j - 1)];
    if (slot)
      return {false, "duplicate-edge", e.i, e.j,
              "pair " + pair_str(e.i, e.j) + " listed twice"};
    slot = 1;
    if (!color_from_char(e.color))
      return {false, "bad-color", e.i, e.j,
              std::string("'") + e.color + "' at " + pair_str(e.i, e.j) +
                  " is not one of R, G, B, K"};
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!seen[static_cast<std::size_t>(i - 1) * n + (j - 1)])
        return {false, "missing-edge", i, j, "no color for pair " + pair_str(i, j)};
  return {};
}

Tournament tournament_from_edges(int n, const std::vector<EdgeEntry>& entries) {
  Diagnostics d = validate_edges(n, entries);
  if (!d.ok) throw error(d.kind, d.message);
  Tournament t(n);
  for (const EdgeEntry& e : entries) t.set_color(e.i, e.j, *color_from_char(e.color));
  return t;
}

Tournament parse_tournament(std::string_view text, long long cap) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw error("parse-error", "empty input, expected a vertex count");
  long long n = parse_int(lines[0], "the vertex count");
  if (n < 0) throw error("size-mismatch", "negative vertex count");
  if (n > cap)
    throw error("size-overflow",
                std::to_string(n) + " vertices exceeds the cap " + std::to_string(cap));
  std::size_t expected_rows = n > 1 ? static_cast<std::size_t>(n - 1) : 0;
  if (lines.size() - 1 != expected_rows)
    throw error("size-mismatch", "expected " + std::to_string(expected_rows) +
                                     " edge rows for n=" + std::to_string(n) + ", got " +
                                     std::to_string(lines.size() - 1));
  std::vector<EdgeEntry> entries;
  for (std::size_t r = 0; r < expected_rows; ++r) {
    const std::string& row = lines[r + 1];
    int i = static_cast<int>(r) + 1;
    if (row.size() > static_cast<std::size_t>(n - i))
      throw error("size-mismatch", "row " + std::to_string(i) + " has " +
                                       std::to_string(row.size()) + " colors, expected " +
                                       std::to_string(n - i));
    for (std::size_t k = 0; k < row.size(); ++k)
      entries.push_back({i, i + static_cast<int>(k) + 1, row[k]});
  }
  return tournament_from_edges(static_cast<int>(n), entries);
}

std::string to_text(const Tournament& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (int i = 1; i < t.size(); ++i) {
    for (int j = i + 1; j <= t.size(); ++j) out += to_char(t.color(i, j));
    out += '\n';
  }
  return out;
}

TripleSet parse_triples(std::string_view text, long long cap) {
  std::vector<std::string> lines = content_lines(text);
  TripleSet s;
  std::size_t first = 0;
  if (!lines.empty()) {
    std::vector<std::string> toks = split_ws(lines[0]);
    if (!toks.empty() && toks[0] == "box") {
      if (toks.size() != 4)
        throw error("parse-error", "box header needs three dimensions");
      s.box = Triple{parse_int(toks[1], "box"), parse_int(toks[2], "box"),
                     parse_int(toks[3], "box")};
      first = 1;
    }
  }
  for (std::size_t r = first; r < lines.size(); ++r) {
    std::vector<std::string> toks = split_ws(lines[r]);
    if (toks.size() != 3)
      throw error("parse-error",
                  "point line \"" + lines[r] + "\" needs three coordinates");
    s.points.push_back({parse_int(toks[0], "x"), parse_int(toks[1], "y"),
                        parse_int(toks[2], "z")});
    if (static_cast<long long>(s.points.size()) > cap)
      throw error("size-overflow", "more than " + std::to_string(cap) + " points");
  }
  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (std::size_t b = a + 1; b < s.points.size(); ++b)
      if (s.points[a] == s.points[b])
        throw error("duplicate-point", "points " + std::to_string(a + 1) + " and " +
                                           std::to_string(b + 1) + " coincide");
  if (s.box) {
    for (std::size_t a = 0; a < s.points.size(); ++a) {
      const Triple& p = s.points[a];
      for (int axis = 0; axis < 3; ++axis)
        if (p[axis] < 1 || p[axis] > (*s.box)[axis])
          throw error("out-of-box", "point " + std::to_string(a + 1) +
                                        " leaves the declared box on axis " +
                                        std::string(1, "xyz"[axis]));
    }
  }
  return s;
}

std::string to_text(const TripleSet& s) {
  std::string out;
  if (s.box)
    out += "box " + std::to_string(s.box->x) + " " + std::to_string(s.box->y) + " " +
           std::to_string(s.box->z) + "\n";
  for (const Triple& p : s.points)
    out += std::to_string(p.x) + " " + std::to_string(p.y) + " " + std::to_string(p.z) +
           "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("io", "cannot write " + path);
  out << content;
}

}  // namespace rgbk
