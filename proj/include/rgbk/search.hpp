#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgbk/types.hpp"

namespace rgbk {

struct SearchConfig {
  std::string mode = "random-tournaments";  // random-tournaments,
                                            // exhaustive-tournaments,
                                            // random-triples, blowup-stress,
                                            // l2-hunt
  int n = 8;
  long long trials = 100;
  std::uint64_t seed = 1;
  int cap_k_edges = 12;
  int cap_subset = 16;
  int cap_weight = 3;       // blowup weights drawn from [1, cap]
  int cap_violations = 10;  // serialized witnesses kept per list
  std::string base_text;    // blowup-stress base tournament
};

// Exact extremal ratio with its earliest witness trial.
struct ExtremeStat {
  bool set = false;
  long long num = 0, den = 1;
  long long trial = -1;
  long long ties = 0;  // trials sharing the extreme value
  std::string payload;
};

struct SearchViolation {
  long long trial = 0;
  std::string kind;
  std::string ratio;
  std::string payload;
};

struct SearchReport {
  SearchConfig config;
  long long trials_done = 0;
  ExtremeStat min_product;      // product / n^2
  ExtremeStat max_cardinality;  // |S|^2 / n^3
  ExtremeStat max_l2;           // sum of squared slice counts / ceiling
  std::vector<SearchViolation> violations;  // sorted by trial, capped
  long long violations_total = 0;
  std::vector<SearchViolation> minimizers;  // exhaustive mode: trials at the min
  double wall_seconds = 0;  // shown in the text summary only, so that JSON
                            // reports are byte-identical across runs

  std::string to_json() const;
  std::string to_text() const;
};

// Runs the configured search, fanning trials out across OpenMP threads when
// available. Identical (config, seed) gives a byte-identical JSON report.
SearchReport run_search(const SearchConfig& cfg);

// Single-threaded reference path; must match run_search exactly.
SearchReport run_search_serial(const SearchConfig& cfg);

}  // namespace rgbk
