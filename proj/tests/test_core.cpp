#include <doctest.h>

#include <rgbk/examplelib.hpp>
#include <rgbk/paths.hpp>
#include <rgbk/rng.hpp>
#include <rgbk/structure.hpp>
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

// 1->2 red, 2->3 green, 1->3 blue: the smallest rainbow tournament.
Tournament rainbow3() { return triangle(Color::R, Color::B, Color::G); }

}  // namespace

TEST_CASE("tournament storage and induced subtournaments") {
  Tournament t = rainbow3();
  CHECK(t.size() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.color(1, 2) == Color::R);
  CHECK(t.color(1, 3) == Color::B);
  CHECK(t.color(2, 3) == Color::G);
  CHECK(t.count(Color::R) == 1);
  CHECK(t.count(Color::K) == 0);

  Tournament sub = t.induced({1, 3});
  CHECK(sub.size() == 2);
  CHECK(sub.color(1, 2) == Color::B);

  Tournament all_k(4);
  CHECK(all_k.count(Color::K) == 6);
  CHECK(Tournament(0).size() == 0);
}

TEST_CASE("class path lengths on small tournaments") {
  Tournament one(1);
  auto single = longest_class_lengths(one, classes::RGK);
  CHECK(single.ending_at == std::vector<int>{1});
  CHECK(single.max == 1);

  Tournament t = rainbow3();
  auto rgk = longest_class_lengths(t, classes::RGK);
  CHECK(rgk.ending_at == std::vector<int>{1, 2, 3});
  CHECK(rgk.max == 3);
  auto gbk = longest_class_lengths(t, classes::GBK);
  CHECK(gbk.ending_at == std::vector<int>{1, 1, 2});
  CHECK(gbk.max == 2);
}

TEST_CASE("path length maxima and the squared product bound") {
  CHECK(path_lengths(Tournament()).maxima() == Triple{0, 0, 0});
  CHECK(path_lengths(rainbow3()).maxima() == Triple{3, 2, 2});

  auto pb1 = product_bound(Tournament(1));
  CHECK(pb1.holds);
  CHECK(pb1.product == 1);
  CHECK(pb1.floor == 1);

  auto pb3 = product_bound(rainbow3());
  CHECK(pb3.holds);
  CHECK(pb3.product == 12);
  CHECK(pb3.floor == 9);

  auto t8 = color(example_by_name("appendixA8").triples);
  CHECK(path_lengths(t8).maxima() == Triple{6, 4, 4});
  auto pb8 = product_bound(t8);
  CHECK(pb8.holds);
  CHECK(pb8.product == 96);
  CHECK(pb8.floor == 64);
}

TEST_CASE("path DP equals subset enumeration on random tournaments") {
  SplitMix64 rng(0x1001);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(7));
    Tournament t = oracle::random_tournament(rng, n, true);
    for (ColorClass cls : {classes::RGK, classes::RBK, classes::GBK,
                           classes::BK, classes::RK, classes::R}) {
      auto dp = longest_class_lengths(t, cls);
      auto brute = oracle::class_lengths(t, cls);
      CHECK(dp.ending_at == brute);
      CHECK(dp.max == (n ? *std::max_element(brute.begin(), brute.end()) : 0));
    }
  }
}

TEST_CASE("recoloring a primary edge to K never shortens any class path") {
  SplitMix64 rng(0x1002);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng.below(7));
    Tournament t = oracle::random_tournament(rng, n, true);
    auto before = path_lengths(t);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (t.color(i, j) == Color::K) continue;
        Tournament u = t;
        u.set_color(i, j, Color::K);
        auto after = path_lengths(u);
        for (int v = 0; v < n; ++v) {
          CHECK(after.rgk.ending_at[v] >= before.rgk.ending_at[v]);
          CHECK(after.rbk.ending_at[v] >= before.rbk.ending_at[v]);
          CHECK(after.gbk.ending_at[v] >= before.gbk.ending_at[v]);
        }
      }
  }
}

TEST_CASE("last record triple carries the maxima once canonical") {
  SplitMix64 rng(0x1003);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    Tournament t = canonicalize(oracle::random_tournament(rng, n, true)).tournament;
    REQUIRE(is_canonical(t));
    ++seen;
    TripleSet s = record(t);
    CHECK(s.points.back() == path_lengths(t).maxima());
  }
  CHECK(seen == 200);
}
