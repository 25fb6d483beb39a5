#include <doctest.h>

#include <rgbk/examplelib.hpp>
#include <rgbk/gallai.hpp>
#include <rgbk/rng.hpp>
#include <rgbk/transforms.hpp>

#include "oracles.hpp"

using namespace rgbk;

namespace {

Tournament triangle(Color c12, Color c13, Color c23) {
  Tournament t(3);
  t.set_color(1, 2, c12);
  t.set_color(1, 3, c13);
  t.set_color(2, 3, c23);
  return t;
}

Tournament rainbow3() { return triangle(Color::R, Color::B, Color::G); }

Tournament appendix8() { return color(example_by_name("appendixA8").triples); }

}  // namespace

TEST_CASE("rainbow triangles need all three primaries") {
  auto hit = rainbow_triangles(rainbow3());
  REQUIRE(hit.size() == 1);
  CHECK(hit[0] == std::array<int, 3>{1, 2, 3});

  CHECK(rainbow_triangles(triangle(Color::R, Color::G, Color::K)).empty());
  CHECK(rainbow_triangles(Tournament(4, Color::R)).empty());
}

TEST_CASE("decomposition trees on the smallest cases") {
  auto leaf = undirected_gallai(Tournament(1));
  REQUIRE(leaf.has_value());
  CHECK(leaf->leaf());
  CHECK(leaf->vertices == std::vector<int>{1});

  CHECK(!undirected_gallai(rainbow3()).has_value());
  CHECK(!directed_gallai(rainbow3()).has_value());
  CHECK(!undirected_gallai(appendix8()).has_value());

  auto rgk = directed_gallai(triangle(Color::R, Color::K, Color::G));
  REQUIRE(rgk.has_value());
  CHECK(validate_gallai_tree(triangle(Color::R, Color::K, Color::G), *rgk, true));
  CHECK(to_text(*rgk) ==
        "avoid=R blocks=[1..2, 3]\n"
        "  avoid=G blocks=[1, 2]\n"
        "    leaf v=1\n"
        "    leaf v=2\n"
        "  leaf v=3\n");
}

TEST_CASE("K-free geometric tournaments decompose as directed trees") {
  SplitMix64 rng(0x5001);
  int produced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Tournament t =
        color(record(oracle::random_tournament(rng, 1 + rng.below(8), false)));
    if (t.count(Color::K) > 0) continue;
    ++produced;
    auto tree = directed_gallai(t);
    REQUIRE(tree.has_value());
    CHECK(validate_gallai_tree(t, *tree, true));
  }
  CHECK(produced > 20);
}

TEST_CASE("merge-based trees match exhaustive partition search") {
  SplitMix64 rng(0x5002);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    Tournament t = oracle::random_tournament(rng, n, true);
    auto undirected = undirected_gallai(t);
    auto directed = directed_gallai(t);
    CHECK(undirected.has_value() == oracle::gallai_decomposable(t, false));
    CHECK(directed.has_value() == oracle::gallai_decomposable(t, true));
    if (undirected && n > 1) CHECK(validate_gallai_tree(t, *undirected, false));
    if (directed && n > 1) CHECK(validate_gallai_tree(t, *directed, true));
  }
}

TEST_CASE("moral recoloring against brute force assignment search") {
  CHECK(!is_morally_rainbow_free(rainbow3()).ok);
  auto easy = is_morally_rainbow_free(Tournament(3, Color::R));
  CHECK(easy.ok);
  CHECK(easy.assignment.empty());
  CHECK(!is_morally_rainbow_free(appendix8()).ok);
  CHECK(!is_morally_k_free(appendix8()).ok);
  CHECK(is_morally_k_free(triangle(Color::R, Color::G, Color::K)).ok);

  SplitMix64 rng(0x5003);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    Tournament t = oracle::random_tournament_k_capped(rng, n, 7);
    auto got = is_morally_rainbow_free(t);
    CHECK(got.ok == oracle::rainbow_free_assignment_exists(t));
    if (got.ok) {
      Tournament recolored = t;
      for (auto [i, j, c] : got.assignment) recolored.set_color(i, j, c);
      CHECK(recolored.count(Color::K) == 0);
      CHECK(rainbow_triangles(recolored).empty());
    }
  }
}

TEST_CASE("K-edge caps stop the exponential searches") {
  Tournament wide(8);  // 28 K edges
  CHECK_THROWS_WITH_AS(is_morally_rainbow_free(wide, 10),
                       doctest::Contains("too-many-k-edges"), error);
  CHECK_THROWS_WITH_AS(is_morally_k_free(wide, 10),
                       doctest::Contains("too-many-k-edges"), error);
  CHECK(is_morally_rainbow_free(wide, 28).ok);
}

TEST_CASE("moral recoloring matches decomposability") {
  SplitMix64 rng(0x5004);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    Tournament t = oracle::random_tournament_k_capped(rng, n, 10);
    bool rainbow_free = is_morally_rainbow_free(t).ok;
    bool und = undirected_gallai(t).has_value();
    CHECK(rainbow_free == und);

    bool k_free = is_morally_k_free(t).ok;
    bool dir = directed_gallai(t).has_value();
    if (k_free) CHECK(dir);
    if (dir) CHECK(und);
  }
}
