#include "rgbk/gallai.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rgbk/structure.hpp"

namespace rgbk {

namespace {

std::vector<std::vector<int>> stable_blocks(const Tournament& t,
                                            const std::vector<int>& verts,
                                            Color avoided, bool directed) {
  int m = static_cast<int>(verts.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (t.color(verts[a], verts[b]) == avoided) parent[find(a)] = find(b);

  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, std::vector<int>> blocks;
    for (int a = 0; a < m; ++a) blocks[find(a)].push_back(a);
    for (auto ia = blocks.begin(); ia != blocks.end() && !changed; ++ia)
      for (auto ib = std::next(ia); ib != blocks.end() && !changed; ++ib) {
        std::set<Color> primaries;
        for (int a : ia->second)
          for (int b : ib->second) {
            Color c = t.color(verts[std::min(a, b)], verts[std::max(a, b)]);
            if (c != Color::K) primaries.insert(c);
          }
        bool interleaved = false;
        if (directed) {
          auto [lo_a, hi_a] =
              std::minmax_element(ia->second.begin(), ia->second.end());
          auto [lo_b, hi_b] =
              std::minmax_element(ib->second.begin(), ib->second.end());
          interleaved = *lo_b <= *hi_a && *lo_a <= *hi_b;
        }
        if (primaries.size() >= 2 || interleaved) {
          parent[find(ia->second.front())] = find(ib->second.front());
          changed = true;
        }
      }
  }

  std::map<int, std::vector<int>> blocks;
  for (int a = 0; a < m; ++a) blocks[find(a)].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : blocks) {
    std::vector<int> block;
    for (int a : members) block.push_back(verts[a]);
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<GallaiTree> decompose(const Tournament& t, const std::vector<int>& verts,
                                    bool directed) {
  GallaiTree node;
  node.vertices = verts;
  if (verts.size() == 1) return node;

  for (Color z : {Color::R, Color::G, Color::B}) {
    std::vector<std::vector<int>> blocks = stable_blocks(t, verts, z, directed);
    if (blocks.size() < 2) continue;
    node.avoided = z;
    node.children.clear();
    bool all_ok = true;
    for (const std::vector<int>& block : blocks) {
      std::optional<GallaiTree> child = decompose(t, block, directed);
      if (!child) {
        all_ok = false;
        break;
      }
      node.children.push_back(std::move(*child));
    }
    if (all_ok) return node;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> k_edges(const Tournament& t) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      if (t.color(i, j) == Color::K) out.push_back({i, j});
  return out;
}

bool rainbow(Color a, Color b, Color c) {
  return a != Color::K && b != Color::K && c != Color::K && a != b && b != c && a != c;
}

// Triangle constraints touching edge (i,j) of `work`, considering only
// fully-colored (K-free) triangles. `strict` additionally rejects
// single-color transitivity violations.
bool edge_consistent(const Tournament& work, int i, int j, bool strict) {
  for (int k = 1; k <= work.size(); ++k) {
    if (k == i || k == j) continue;
    int a = std::min({i, j, k}), c = std::max({i, j, k});
    int b = i + j + k - a - c;
    Color ab = work.color(a, b), bc = work.color(b, c), ac = work.color(a, c);
    if (ab == Color::K || bc == Color::K || ac == Color::K) continue;
    if (rainbow(ab, bc, ac)) return false;
    if (strict && ab == bc && ab != ac) return false;
  }
  return true;
}

MoralResult moral_search(const Tournament& t, int cap_k_edges, bool k_free) {
  std::vector<std::pair<int, int>> todo = k_edges(t);
  if (static_cast<int>(todo.size()) > cap_k_edges)
    throw error("too-many-k-edges",
                std::to_string(todo.size()) + " K-edges exceed the cap of " +
                    std::to_string(cap_k_edges));

  // Assignments cannot fix a violation among the already-primary edges.
  Tournament work = t;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      if (t.color(i, j) != Color::K && !edge_consistent(work, i, j, k_free))
        return {};

  MoralResult found;
  auto dfs = [&](auto&& self, std::size_t next) -> bool {
    if (next == todo.size()) {
      if (k_free && !is_geometric(work).ok) return false;
      found.ok = true;
      for (auto [i, j] : todo) found.assignment.push_back({i, j, work.color(i, j)});
      return true;
    }
    auto [i, j] = todo[next];
    for (Color c : {Color::R, Color::G, Color::B}) {
      work.set_color(i, j, c);
      if (edge_consistent(work, i, j, k_free) && self(self, next + 1)) return true;
    }
    work.set_color(i, j, Color::K);
    return false;
  };
  dfs(dfs, 0);
  return found;
}

std::string render_runs(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t a = 0; a < vs.size();) {
    std::size_t b = a;
    while (b + 1 < vs.size() && vs[b + 1] == vs[b] + 1) ++b;
    if (!out.empty()) out += "+";
    out += std::to_string(vs[a]);
    if (b > a) out += ".." + std::to_string(vs[b]);
    a = b + 1;
  }
  return out;
}

void render_tree(const GallaiTree& node, int indent, std::string& out) {
  out.append(indent, ' ');
  if (node.leaf()) {
    out += "leaf v=" + std::to_string(node.vertices.front()) + "\n";
    return;
  }
  out += "avoid=";
  out += to_char(*node.avoided);
  out += " blocks=[";
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    if (c) out += ", ";
    out += render_runs(node.children[c].vertices);
  }
  out += "]\n";
  for (const GallaiTree& child : node.children) render_tree(child, indent + 2, out);
}

}  // namespace

std::vector<std::array<int, 3>> rainbow_triangles(const Tournament& t) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      for (int k = j + 1; k <= t.size(); ++k)
        if (rainbow(t.color(i, j), t.color(j, k), t.color(i, k)))
          out.push_back({i, j, k});
  return out;
}

std::optional<GallaiTree> undirected_gallai(const Tournament& t) {
  if (t.size() == 0) return std::nullopt;
  std::vector<int> verts(t.size());
  std::iota(verts.begin(), verts.end(), 1);
  return decompose(t, verts, false);
}

std::optional<GallaiTree> directed_gallai(const Tournament& t) {
  if (t.size() == 0) return std::nullopt;
  std::vector<int> verts(t.size());
  std::iota(verts.begin(), verts.end(), 1);
  return decompose(t, verts, true);
}

bool validate_gallai_tree(const Tournament& t, const GallaiTree& node, bool directed) {
  if (node.leaf()) return node.vertices.size() == 1 && !node.avoided;
  if (node.children.size() < 2 || !node.avoided) return false;

  std::vector<int> merged;
  for (const GallaiTree& child : node.children)
    merged.insert(merged.end(), child.vertices.begin(), child.vertices.end());
  std::vector<int> sorted = merged;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != node.vertices ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (directed && merged != sorted) return false;  // children in vertex order

  std::set<Color> overall;
  for (std::size_t a = 0; a < node.children.size(); ++a)
    for (std::size_t b = a + 1; b < node.children.size(); ++b) {
      std::set<Color> pair_primaries;
      for (int u : node.children[a].vertices)
        for (int v : node.children[b].vertices) {
          Color c = t.color(std::min(u, v), std::max(u, v));
          if (c != Color::K) pair_primaries.insert(c);
        }
      if (pair_primaries.size() > 1) return false;
      overall.insert(pair_primaries.begin(), pair_primaries.end());
    }
  if (overall.size() > 2 || overall.count(*node.avoided)) return false;

  for (const GallaiTree& child : node.children) {
    if (directed &&
        child.vertices.back() - child.vertices.front() + 1 !=
            static_cast<int>(child.vertices.size()))
      return false;
    if (!validate_gallai_tree(t, child, directed)) return false;
  }
  return true;
}

MoralResult is_morally_rainbow_free(const Tournament& t, int cap_k_edges) {
  return moral_search(t, cap_k_edges, false);
}

MoralResult is_morally_k_free(const Tournament& t, int cap_k_edges) {
  return moral_search(t, cap_k_edges, true);
}

std::string to_text(const GallaiTree& tree) {
  std::string out;
  render_tree(tree, 0, out);
  return out;
}

}  // namespace rgbk
