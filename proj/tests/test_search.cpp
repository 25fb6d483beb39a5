#include <doctest.h>

#include <json.hpp>
#include <rgbk/examplelib.hpp>
#include <rgbk/io.hpp>
#include <rgbk/paths.hpp>
#include <rgbk/search.hpp>
#include <rgbk/transforms.hpp>

using namespace rgbk;

namespace {

template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return "";
}

std::string a8_text() {
  return to_text(color(example_by_name("appendixA8").triples));
}

}  // namespace

TEST_CASE("serial and parallel searches give byte-identical reports") {
  std::vector<SearchConfig> configs;
  configs.push_back({.mode = "random-tournaments", .n = 7, .trials = 40, .seed = 11});
  configs.push_back({.mode = "exhaustive-tournaments", .n = 3});
  configs.push_back({.mode = "random-triples", .n = 4, .trials = 16, .seed = 5});
  configs.push_back(
      {.mode = "blowup-stress", .n = 8, .trials = 12, .seed = 3, .base_text = a8_text()});
  configs.push_back({.mode = "l2-hunt", .n = 6, .trials = 30, .seed = 9});

  for (const SearchConfig& cfg : configs) {
    CAPTURE(cfg.mode);
    auto par = run_search(cfg);
    auto ser = run_search_serial(cfg);
    CHECK(par.to_json() == ser.to_json());
    // Re-running is deterministic too.
    CHECK(run_search(cfg).to_json() == par.to_json());
  }
}

TEST_CASE("exhaustive three-vertex search finds the monochromatic floor") {
  SearchConfig cfg{.mode = "exhaustive-tournaments", .n = 3};
  auto rep = run_search(cfg);
  CHECK(rep.trials_done == 27);
  REQUIRE(rep.min_product.set);
  CHECK(rep.min_product.num == 9);
  CHECK(rep.min_product.den == 9);
  CHECK(rep.min_product.trial == 0);
  CHECK(rep.min_product.ties == 3);
  CHECK(rep.violations_total == 0);
  CHECK(rep.violations.empty());

  // The three minimizers are the all-R, all-G, all-B colorings.
  REQUIRE(rep.minimizers.size() == 3);
  CHECK(rep.minimizers[0].trial == 0);
  CHECK(rep.minimizers[1].trial == 13);
  CHECK(rep.minimizers[2].trial == 26);
  for (const auto& m : rep.minimizers) {
    Tournament t = parse_tournament(m.payload);
    Triple mx = path_lengths(t).maxima();
    CHECK(mx.x * mx.y * mx.z == 9);
  }

  SearchConfig two{.mode = "exhaustive-tournaments", .n = 2};
  auto rep2 = run_search(two);
  CHECK(rep2.trials_done == 3);
  CHECK(rep2.min_product.num == 4);
  CHECK(rep2.min_product.den == 4);
  CHECK(rep2.min_product.ties == 3);
}

TEST_CASE("config validation") {
  CHECK(error_code_of([] {
          run_search({.mode = "walk"});
        }) == "config-invalid");
  CHECK(error_code_of([] {
          run_search({.mode = "random-tournaments", .n = 0});
        }) == "config-invalid");
  CHECK(error_code_of([] {
          run_search({.mode = "random-tournaments", .trials = 0});
        }) == "config-invalid");
  CHECK(error_code_of([] {
          run_search({.mode = "l2-hunt", .cap_violations = 0});
        }) == "config-invalid");
  CHECK(error_code_of([] {
          run_search({.mode = "exhaustive-tournaments", .n = 6});
        }) == "n-too-large");
  CHECK(error_code_of([] {
          run_search({.mode = "blowup-stress", .base_text = "oops"});
        }) == "parse-error");
}

TEST_CASE("report serialization shape") {
  SearchConfig cfg{.mode = "exhaustive-tournaments", .n = 3};
  auto rep = run_search(cfg);
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["config"]["mode"] == "exhaustive-tournaments");
  CHECK(j["config"]["n"] == 3);
  CHECK(j["config"]["seed"] == 1);
  CHECK(j["trials-done"] == 27);
  CHECK(j["stats"]["min-product"]["ratio"] == "1");
  CHECK(j["stats"]["min-product"]["ties"] == 3);
  CHECK(!j["stats"].contains("max-cardinality"));
  CHECK(!j["stats"].contains("max-l2"));
  CHECK(j["violations-total"] == 0);
  CHECK(j["violations"].empty());
  CHECK(j["minimizers"].size() == 3);

  // Wall time stays out of the JSON so reports can be diffed; the text
  // summary carries it instead.
  CHECK(rep.to_json().find("wall") == std::string::npos);
  CHECK(rep.to_text().find("wall seconds:") != std::string::npos);
  CHECK(rep.to_text().find("min product ratio: 1 (trial 0, ties 3)") !=
        std::string::npos);
}

TEST_CASE("random tournament searches respect the proven floor") {
  SearchConfig cfg{.mode = "random-tournaments", .n = 9, .trials = 150, .seed = 77};
  auto rep = run_search(cfg);
  CHECK(rep.trials_done == 150);
  CHECK(rep.violations_total == 0);
  REQUIRE(rep.min_product.set);
  CHECK(rep.min_product.num >= rep.min_product.den);
}

TEST_CASE("blowing up a canonical base keeps its product ratio at worst") {
  SearchConfig once{.mode = "blowup-stress", .trials = 1, .base_text = a8_text()};
  auto rep = run_search(once);
  REQUIRE(rep.min_product.set);
  CHECK(rep.min_product.num == 96);
  CHECK(rep.min_product.den == 64);

  SearchConfig more{
      .mode = "blowup-stress", .trials = 25, .seed = 4, .base_text = a8_text()};
  auto rep2 = run_search(more);
  CHECK(rep2.trials_done == 25);
  CHECK(rep2.violations_total == 0);
  CHECK(rep2.min_product.num >= rep2.min_product.den);
}

TEST_CASE("triple and slice-square hunts stay below their ceilings here") {
  SearchConfig cfg{.mode = "random-triples", .n = 4, .trials = 30, .seed = 21};
  auto rep = run_search(cfg);
  CHECK(rep.trials_done == 30);
  REQUIRE(rep.max_cardinality.set);
  CHECK(rep.max_cardinality.num <= rep.max_cardinality.den);
  CHECK(rep.violations_total == 0);

  SearchConfig l2{.mode = "l2-hunt", .n = 7, .trials = 60, .seed = 33};
  auto rep2 = run_search(l2);
  REQUIRE(rep2.max_l2.set);
  CHECK(rep2.max_l2.num <= rep2.max_l2.den);
  CHECK(rep2.violations_total == 0);
}
