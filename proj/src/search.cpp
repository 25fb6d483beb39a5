#include "rgbk/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "rgbk/geometry.hpp"
#include "rgbk/io.hpp"
#include "rgbk/paths.hpp"
#include "rgbk/rng.hpp"
#include "rgbk/transforms.hpp"

namespace rgbk {

namespace {

std::string ratio_str(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

int cmp_ratio(const ExtremeStat& a, const ExtremeStat& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : l > r ? 1 : 0;
}

// Per-trial results fold into this; every merge rule is commutative and
// associative so the parallel schedule cannot leak into the report.
struct Partial {
  long long trials = 0;
  ExtremeStat min_product, max_cardinality, max_l2;
  std::vector<SearchViolation> violations;
  long long violations_total = 0;
  std::vector<SearchViolation> minimizers;
};

ExtremeStat make_stat(long long num, long long den, long long trial,
                      std::string payload) {
  ExtremeStat s;
  s.set = true;
  s.num = num;
  s.den = den;
  s.trial = trial;
  s.ties = 1;
  s.payload = std::move(payload);
  return s;
}

void cap_by_trial(std::vector<SearchViolation>& list, int cap) {
  std::sort(list.begin(), list.end(),
            [](const SearchViolation& a, const SearchViolation& b) {
              return a.trial < b.trial;
            });
  if (static_cast<int>(list.size()) > cap) list.resize(cap);
}

void merge_extreme(ExtremeStat& into, const ExtremeStat& from, int direction,
                   std::vector<SearchViolation>* wit_into = nullptr,
                   std::vector<SearchViolation>* wit_from = nullptr, int cap = 0) {
  if (!from.set) return;
  if (!into.set || cmp_ratio(from, into) * direction < 0) {
    into = from;
    if (wit_into) *wit_into = std::move(*wit_from);
  } else if (cmp_ratio(from, into) == 0) {
    into.ties += from.ties;
    if (from.trial < into.trial) {
      into.trial = from.trial;
      into.payload = from.payload;
    }
    if (wit_into) {
      wit_into->insert(wit_into->end(), wit_from->begin(), wit_from->end());
      cap_by_trial(*wit_into, cap);
    }
  }
}

void merge(Partial& into, Partial&& from, const SearchConfig& cfg) {
  into.trials += from.trials;
  merge_extreme(into.min_product, from.min_product, 1, &into.minimizers,
                &from.minimizers, cfg.cap_violations);
  merge_extreme(into.max_cardinality, from.max_cardinality, -1);
  merge_extreme(into.max_l2, from.max_l2, -1);
  into.violations_total += from.violations_total;
  into.violations.insert(into.violations.end(),
                         std::make_move_iterator(from.violations.begin()),
                         std::make_move_iterator(from.violations.end()));
  cap_by_trial(into.violations, cfg.cap_violations);
}

Tournament random_tournament(SplitMix64& rng, int n, bool rgb_only) {
  Tournament t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      t.set_color(i, j, static_cast<Color>(rng.below(rgb_only ? 3 : 4)));
  return t;
}

void check_product(Partial& p, const Tournament& t, long long trial,
                   bool keep_minimizer) {
  Triple m = path_lengths(t).maxima();
  long long product = m.x * m.y * m.z;
  long long floor = static_cast<long long>(t.size()) * t.size();
  std::string text = to_text(t);
  p.min_product = make_stat(product, floor, trial, text);
  if (keep_minimizer)
    p.minimizers.push_back({trial, "product-minimum", ratio_str(product, floor), text});
  if (product < floor) {
    p.violations.push_back(
        {trial, "product-bound", ratio_str(product, floor), std::move(text)});
    p.violations_total = 1;
  }
}

Partial trial_random_tournament(const SearchConfig& cfg, long long t) {
  SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
  Tournament tour = random_tournament(rng, cfg.n, false);
  Partial p;
  p.trials = 1;
  check_product(p, tour, t, false);
  return p;
}

Partial trial_exhaustive(const SearchConfig& cfg, long long t) {
  Tournament tour(cfg.n);
  long long code = t;
  for (int i = 1; i <= cfg.n; ++i)
    for (int j = i + 1; j <= cfg.n; ++j) {
      tour.set_color(i, j, static_cast<Color>(code % 3));
      code /= 3;
    }
  Partial p;
  p.trials = 1;
  check_product(p, tour, t, true);
  return p;
}

void check_triples(Partial& p, const TripleSet& s, long long trial) {
  // Structural facts: grid views self-check on slice-increasing input, and
  // ordered sets must pass the 3x3 sub-grid scan.
  grid_view(s, Plane::XY);
  grid_view(s, Plane::XZ);
  grid_view(s, Plane::YZ);
  if (is_ordered(s).ok && !subgrid_3x3_check(s).ok)
    throw std::logic_error("3x3 sub-grid scan failed on an ordered set");

  long long n = std::max({s.box->x, s.box->y, s.box->z, 1ll});
  long long size = static_cast<long long>(s.points.size());
  std::string text = to_text(s);
  p.max_cardinality = make_stat(size * size, n * n * n, trial, text);
  if (size * size > n * n * n)
    p.violations.push_back({trial, "cardinality-bound",
                            ratio_str(size * size, n * n * n), std::move(text)});
  p.violations_total = p.violations.size();
}

Partial trial_random_triples(const SearchConfig& cfg, long long t) {
  SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
  TripleSet s;
  if (t % 2 == 0) {
    // rejection sampling in the cube
    long long n = std::max(cfg.n, 1);
    std::vector<Triple> all;
    all.reserve(n * n * n);
    for (long long x = 1; x <= n; ++x)
      for (long long y = 1; y <= n; ++y)
        for (long long z = 1; z <= n; ++z) all.push_back({x, y, z});
    for (std::size_t i = all.size(); i > 1; --i)
      std::swap(all[i - 1], all[rng.below(i)]);
    for (const Triple& cand : all) {
      bool fits = true;
      for (const Triple& q : s.points) {
        Triple d = cand - q;
        int pos = (d.x > 0) + (d.y > 0) + (d.z > 0);
        int neg = (d.x < 0) + (d.y < 0) + (d.z < 0);
        if (pos < 2 && neg < 2) {
          fits = false;
          break;
        }
      }
      if (fits) s.points.push_back(cand);
    }
    s.box = Triple{n, n, n};
  } else {
    // ordered sets arise as records of random tournaments
    int m = 1 + static_cast<int>(rng.below(2ull * std::max(cfg.n, 1)));
    s = record(random_tournament(rng, m, false));
  }
  Partial p;
  p.trials = 1;
  check_triples(p, s, t);
  if (static_cast<int>(s.points.size()) <= cfg.cap_subset)
    szabo_tardos_m2(s, cfg.cap_subset);  // self-checks its 3n ceiling
  return p;
}

Partial trial_blowup(const SearchConfig& cfg, long long t, const Tournament& base) {
  SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
  std::vector<std::pair<int, int>> weights(base.size(), {1, 1});
  if (t > 0)
    for (auto& [b, r] : weights) {
      b = 1 + static_cast<int>(rng.below(cfg.cap_weight));
      r = 1 + static_cast<int>(rng.below(cfg.cap_weight));
    }
  Tournament big = blowup_any(base, weights);
  Partial p;
  p.trials = 1;
  check_product(p, big, t, false);
  return p;
}

Partial trial_l2(const SearchConfig& cfg, long long t) {
  SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
  int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(cfg.n, 1))));
  Tournament tour = random_tournament(rng, m, false);
  TripleSet s;
  long long ceiling = 0;
  if (t % 2 == 0) {
    s = record(tour);
    long long n = std::max({s.box->x, s.box->y, s.box->z, 1ll});
    ceiling = n * n;
  } else {
    s = record(canonicalize(tour).tournament);
    ceiling = s.box->x * s.box->y;
  }
  long long ssq = slice_profile(s, 'z').sum_squares;
  Partial p;
  p.trials = 1;
  std::string text = to_text(s);
  p.max_l2 = make_stat(ssq, ceiling, t, text);
  if (ssq > ceiling) {
    p.violations.push_back({t, "l2-ceiling", ratio_str(ssq, ceiling), std::move(text)});
    p.violations_total = 1;
  }
  return p;
}

long long total_trials(const SearchConfig& cfg) {
  if (cfg.mode == "exhaustive-tournaments") {
    long long total = 1;
    for (int e = 0; e < cfg.n * (cfg.n - 1) / 2; ++e) total *= 3;
    return total;
  }
  return cfg.trials;
}

std::optional<Tournament> validate(const SearchConfig& cfg) {
  static const char* kModes[] = {"random-tournaments", "exhaustive-tournaments",
                                 "random-triples", "blowup-stress", "l2-hunt"};
  if (std::find_if(std::begin(kModes), std::end(kModes), [&](const char* m) {
        return cfg.mode == m;
      }) == std::end(kModes))
    throw error("config-invalid", "unknown mode " + cfg.mode);
  if (cfg.n < 1) throw error("config-invalid", "need n >= 1");
  if (cfg.trials < 1 && cfg.mode != "exhaustive-tournaments")
    throw error("config-invalid", "need trials >= 1");
  if (cfg.cap_weight < 1 || cfg.cap_violations < 1 || cfg.cap_subset < 1)
    throw error("config-invalid", "caps must be >= 1");
  if (cfg.mode == "exhaustive-tournaments" && cfg.n > 5)
    throw error("n-too-large", "exhaustive enumeration is capped at n = 5");
  if (cfg.mode == "blowup-stress") return parse_tournament(cfg.base_text);
  return std::nullopt;
}

Partial one_trial(const SearchConfig& cfg, long long t,
                  const std::optional<Tournament>& base) {
  if (cfg.mode == "random-tournaments") return trial_random_tournament(cfg, t);
  if (cfg.mode == "exhaustive-tournaments") return trial_exhaustive(cfg, t);
  if (cfg.mode == "random-triples") return trial_random_triples(cfg, t);
  if (cfg.mode == "blowup-stress") return trial_blowup(cfg, t, *base);
  return trial_l2(cfg, t);
}

SearchReport finalize(const SearchConfig& cfg, Partial&& acc, double wall) {
  SearchReport rep;
  rep.config = cfg;
  rep.trials_done = acc.trials;
  rep.min_product = std::move(acc.min_product);
  rep.max_cardinality = std::move(acc.max_cardinality);
  rep.max_l2 = std::move(acc.max_l2);
  rep.violations = std::move(acc.violations);
  rep.violations_total = acc.violations_total;
  if (cfg.mode == "exhaustive-tournaments") rep.minimizers = std::move(acc.minimizers);
  rep.wall_seconds = wall;
  return rep;
}

SearchReport run_impl(const SearchConfig& cfg, bool parallel) {
  std::optional<Tournament> base = validate(cfg);
  long long total = total_trials(cfg);
  auto t0 = std::chrono::steady_clock::now();
  Partial acc;
#ifdef _OPENMP
  if (parallel) {
    std::vector<Partial> parts(omp_get_max_threads());
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 64)
    for (long long t = 0; t < total; ++t) {
      try {
        merge(parts[omp_get_thread_num()], one_trial(cfg, t, base), cfg);
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    for (Partial& part : parts) merge(acc, std::move(part), cfg);
  } else
#endif
  {
    (void)parallel;
    for (long long t = 0; t < total; ++t) merge(acc, one_trial(cfg, t, base), cfg);
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return finalize(cfg, std::move(acc), wall);
}

nlohmann::ordered_json stat_json(const ExtremeStat& s) {
  nlohmann::ordered_json j;
  j["ratio"] = ratio_str(s.num, s.den);
  j["trial"] = s.trial;
  j["ties"] = s.ties;
  j["instance"] = s.payload;
  return j;
}

nlohmann::ordered_json violation_json(const SearchViolation& v) {
  nlohmann::ordered_json j;
  j["trial"] = v.trial;
  j["kind"] = v.kind;
  j["ratio"] = v.ratio;
  j["instance"] = v.payload;
  return j;
}

}  // namespace

SearchReport run_search(const SearchConfig& cfg) { return run_impl(cfg, true); }

SearchReport run_search_serial(const SearchConfig& cfg) {
  return run_impl(cfg, false);
}

std::string SearchReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json c;
  c["mode"] = config.mode;
  c["n"] = config.n;
  c["trials"] = config.trials;
  c["seed"] = config.seed;
  c["cap-k-edges"] = config.cap_k_edges;
  c["cap-subset"] = config.cap_subset;
  c["cap-weight"] = config.cap_weight;
  c["cap-violations"] = config.cap_violations;
  if (!config.base_text.empty()) c["base"] = config.base_text;
  j["config"] = std::move(c);
  j["trials-done"] = trials_done;
  nlohmann::ordered_json stats;
  if (min_product.set) stats["min-product"] = stat_json(min_product);
  if (max_cardinality.set) stats["max-cardinality"] = stat_json(max_cardinality);
  if (max_l2.set) stats["max-l2"] = stat_json(max_l2);
  j["stats"] = std::move(stats);
  j["violations-total"] = violations_total;
  auto vs = nlohmann::ordered_json::array();
  for (const SearchViolation& v : violations) vs.push_back(violation_json(v));
  j["violations"] = std::move(vs);
  if (!minimizers.empty()) {
    auto ms = nlohmann::ordered_json::array();
    for (const SearchViolation& v : minimizers) ms.push_back(violation_json(v));
    j["minimizers"] = std::move(ms);
  }
  return j.dump(2) + "\n";
}

std::string SearchReport::to_text() const {
  std::ostringstream out;
  out << "mode: " << config.mode << "\n";
  out << "trials: " << trials_done << "\n";
  out << "seed: " << config.seed << "\n";
  auto stat_line = [&out](const char* name, const ExtremeStat& s) {
    if (!s.set) return;
    out << name << ": " << ratio_str(s.num, s.den) << " (trial " << s.trial
        << ", ties " << s.ties << ")\n";
  };
  stat_line("min product ratio", min_product);
  stat_line("max cardinality ratio", max_cardinality);
  stat_line("max slice-square ratio", max_l2);
  out << "violations: " << violations_total << "\n";
  for (const SearchViolation& v : violations)
    out << "  trial " << v.trial << " " << v.kind << " ratio " << v.ratio << "\n";
  out << "wall seconds: " << wall_seconds << "\n";
  return out.str();
}

}  // namespace rgbk
