#include "rgbk/examplelib.hpp"

#include "rgbk/generators.hpp"

namespace rgbk {

namespace {

// Accepts "prefix(<int>)" and returns the int, -1 on mismatch.
long long parse_parameter(const std::string& name, const std::string& prefix) {
  if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0 ||
      name[prefix.size()] != '(' || name.back() != ')')
    return -1;
  std::string body = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (body.empty()) return -1;
  for (char c : body)
    if (c < '0' || c > '9') return -1;
  if (body.size() > 6) return -1;
  return std::stoll(body);
}

}  // namespace

Example example_by_name(const std::string& name) {
  if (name == "appendixA8") {
    TripleSet s;
    s.box = Triple{6, 4, 4};
    s.points = {{1, 1, 1}, {2, 2, 1}, {3, 1, 2}, {4, 3, 1},
                {5, 2, 2}, {4, 4, 3}, {5, 3, 4}, {6, 4, 4}};
    return {name, "8-point canonical record set; its tournament has no "
                  "undirected K-blind decomposition", s};
  }
  if (name == "grid37") {
    TripleSet s;
    s.box = Triple{6, 6, 4};
    s.points = {{1, 1, 1}, {3, 2, 1}, {4, 4, 1}, {6, 5, 1}, {1, 3, 2}, {4, 6, 2},
                {5, 2, 3}, {2, 1, 4}, {3, 3, 4}, {5, 4, 4}, {6, 6, 4}};
    return {name, "11 points in [6]x[6]x[4] with z-slice square sum 37 > 36; "
                  "slice-increasing but not ordered", s};
  }
  if (name == "sumset-demo") {
    std::vector<std::vector<long long>> f(3, std::vector<long long>(3)),
        g(3, std::vector<long long>(3)), h(3, std::vector<long long>(3));
    for (long long a = 1; a <= 3; ++a)
      for (long long b = 1; b <= 3; ++b) {
        f[a - 1][b - 1] = 4 * a + b;
        g[a - 1][b - 1] = 5 * a + 2 * b;
        h[a - 1][b - 1] = 4 * a + b;
      }
    return {name, "27-point image of (a,b,c) -> (4a+b, 5a+2c, 4b+c) on [3]^3",
            sumset(f, g, h)};
  }
  long long k = parse_parameter(name, "kflat");
  if (k >= 0)
    return {name, "K-free " + std::to_string(k) + "-fold product of the flat "
                  "8-point unit", kflat(static_cast<int>(k))};
  long long m = parse_parameter(name, "standard_lex");
  if (m >= 0)
    return {name, "lexicographic-bias set with m = " + std::to_string(m),
            standard_lex(m)};
  throw error("unknown-example", name);
}

std::vector<std::string> example_registry() {
  return {"appendixA8", "grid37", "kflat(k)", "standard_lex(m)", "sumset-demo"};
}

}  // namespace rgbk
