#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgbk/examplelib.hpp"
#include "rgbk/gallai.hpp"
#include "rgbk/generators.hpp"
#include "rgbk/geometry.hpp"
#include "rgbk/io.hpp"
#include "rgbk/paths.hpp"
#include "rgbk/search.hpp"
#include "rgbk/structure.hpp"
#include "rgbk/transforms.hpp"

namespace {

using namespace rgbk;

void print_tournament_summary(const Tournament& t) {
  Triple m = path_lengths(t).maxima();
  std::cout << "n=" << t.size() << " lengths " << m.x << " " << m.y << " " << m.z
            << " product " << m.x * m.y * m.z << "\n";
}

void print_triples_summary(const TripleSet& s) {
  std::cout << "points=" << s.points.size();
  if (s.box)
    std::cout << " box " << s.box->x << " " << s.box->y << " " << s.box->z;
  std::cout << "\n";
}

int cmd_transform(const std::string& input, const std::vector<std::string>& steps,
                  const std::string& out) {
  for (const std::string& step : steps)
    if (step != "record" && step != "color" && step != "dual" &&
        step != "canonicalize")
      throw error("parse-error", "unknown pipeline step " + step);

  std::string content = read_file(input);
  std::optional<Tournament> t;
  std::optional<TripleSet> s;
  if (steps.empty()) {
    try {
      t = parse_tournament(content);
    } catch (const error&) {
      s = parse_triples(content);
    }
  } else if (steps.front() == "color") {
    s = parse_triples(content);
  } else {
    t = parse_tournament(content);
  }

  std::vector<long long> trace;
  for (const std::string& step : steps) {
    if (step == "record") {
      if (!t) throw error("pipeline-type-mismatch", "record needs a tournament");
      s = record(*t);
      t.reset();
    } else if (step == "color") {
      if (!s) throw error("pipeline-type-mismatch", "color needs a triple set");
      t = color(*s);
      s.reset();
    } else if (step == "dual") {
      if (!t) throw error("pipeline-type-mismatch", "dual needs a tournament");
      t = dual(*t);
    } else {
      if (!t)
        throw error("pipeline-type-mismatch", "canonicalize needs a tournament");
      CanonicalizeResult res = canonicalize(*t);
      t = res.tournament;
      trace = res.k_trace;
    }
  }

  std::string text = t ? to_text(*t) : to_text(*s);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    if (t)
      print_tournament_summary(*t);
    else
      print_triples_summary(*s);
  }
  if (!trace.empty()) {
    std::cout << "k-trace:";
    for (long long k : trace) std::cout << " " << k;
    std::cout << "\n";
  }
  return 0;
}

int report_verdict(bool verdict, const std::string& witness) {
  std::cout << (verdict ? "true" : "false") << "\n";
  if (!witness.empty()) std::cout << witness;
  return verdict ? 0 : 1;
}

int cmd_check(const std::string& pred, const std::string& input, int cap_k_edges) {
  static const char* kTournamentPreds[] = {
      "geometric",        "color-record-fixed",   "canonical",
      "dual-strata-reversed", "grid-neighbor",    "k-saturation",
      "undirected-gallai", "directed-gallai",     "morally-rainbow-free",
      "morally-k-free"};
  static const char* kTriplePreds[] = {"slice-increasing", "ordered", "reduced",
                                       "subgrid-3x3"};
  bool tournament_pred =
      std::find_if(std::begin(kTournamentPreds), std::end(kTournamentPreds),
                   [&](const char* p) { return pred == p; }) !=
      std::end(kTournamentPreds);
  bool triple_pred = std::find_if(std::begin(kTriplePreds), std::end(kTriplePreds),
                                  [&](const char* p) { return pred == p; }) !=
                     std::end(kTriplePreds);
  if (!tournament_pred && !triple_pred) throw error("unknown-predicate", pred);

  std::string content = read_file(input);
  if (tournament_pred) {
    Tournament t = parse_tournament(content);
    if (pred == "geometric") {
      GeometricCheck c = is_geometric(t);
      return report_verdict(c.ok, c.ok ? ""
                                       : "triangle (" + std::to_string(c.i) + "," +
                                             std::to_string(c.j) + "," +
                                             std::to_string(c.k) + ") breaks " +
                                             c.cls.name() + "\n");
    }
    if (pred == "color-record-fixed") {
      FixedCheck c = is_color_record_fixed(t);
      return report_verdict(c.fixed, c.fixed ? "" : c.failed + "\n");
    }
    if (pred == "canonical") return report_verdict(is_canonical(t), "");
    if (pred == "dual-strata-reversed")
      return report_verdict(dual_strata_reverse_check(t), "");
    if (pred == "grid-neighbor") {
      GridNeighborResult r = grid_neighbor_property(t);
      return report_verdict(r.ok, r.ok ? ""
                                       : "square (" + std::to_string(r.x) + "," +
                                             std::to_string(r.y) + ") bullet " +
                                             std::to_string(r.bullet) + "\n");
    }
    if (pred == "k-saturation") {
      KSaturationResult r = k_saturation_check(t);
      return report_verdict(r.ok, r.ok ? ""
                                       : "edge (" + std::to_string(r.i) + "," +
                                             std::to_string(r.j) + ")\n");
    }
    if (pred == "undirected-gallai" || pred == "directed-gallai") {
      auto tree = pred == "undirected-gallai" ? undirected_gallai(t)
                                              : directed_gallai(t);
      return report_verdict(tree.has_value(), tree ? to_text(*tree) : "");
    }
    MoralResult r = pred == "morally-rainbow-free"
                        ? is_morally_rainbow_free(t, cap_k_edges)
                        : is_morally_k_free(t, cap_k_edges);
    std::string witness;
    if (r.ok)
      for (const auto& [i, j, c] : r.assignment)
        witness += std::to_string(i) + "->" + std::to_string(j) + ":" +
                   std::string(1, to_char(c)) + "\n";
    return report_verdict(r.ok, witness);
  }

  TripleSet s = parse_triples(content);
  if (pred == "slice-increasing") {
    SliceCheck c = is_slice_increasing(s);
    return report_verdict(c.ok, c.ok ? ""
                                     : "pair (" + std::to_string(c.bad_pair.i) + "," +
                                           std::to_string(c.bad_pair.j) + ")\n");
  }
  if (pred == "ordered") {
    OrderedCheck c = is_ordered(s);
    return report_verdict(c.ok, c.ok ? ""
                                     : "cycle (" + std::to_string(c.cycle[0]) + "," +
                                           std::to_string(c.cycle[1]) + "," +
                                           std::to_string(c.cycle[2]) + ")\n");
  }
  if (pred == "reduced") {
    ReducedCheck c = is_reduced_set(s);
    return report_verdict(c.reduced, c.reduced ? ""
                                               : "point " + std::to_string(c.point) +
                                                     " axis " +
                                                     std::string(1, c.axis) + "\n");
  }
  SubgridCheck c = subgrid_3x3_check(s);
  return report_verdict(c.ok, c.ok ? ""
                                   : "labels " + std::to_string(c.label_a) + "," +
                                         std::to_string(c.label_b) + " corner (" +
                                         std::to_string(c.corner.first) + "," +
                                         std::to_string(c.corner.second) + ")\n");
}

int run_and_report(const SearchConfig& cfg, const std::string& out,
                   const std::string& format) {
  SearchReport rep = run_search(cfg);
  if (!out.empty()) write_file(out, rep.to_json());
  std::cout << (format == "json" ? rep.to_json() : rep.to_text());
  return rep.violations_total > 0 ? 1 : 0;
}

int cmd_examples(const std::string& name, const std::string& dir) {
  Example ex = example_by_name(name);
  std::filesystem::create_directories(dir);
  std::string header = "# " + ex.name + ": " + ex.comment + "\n";
  std::string triples_path = dir + "/" + ex.name + ".triples";
  write_file(triples_path, header + to_text(ex.triples));
  std::cout << "wrote " << triples_path << "\n";
  if (is_ordered(ex.triples).ok) {
    std::string tournament_path = dir + "/" + ex.name + ".tournament";
    write_file(tournament_path, header + to_text(color(ex.triples)));
    std::cout << "wrote " << tournament_path << "\n";
  }
  return 0;
}

int cmd_verify_bounds(const std::string& input, long long m_param) {
  TripleSet s = parse_triples(read_file(input));
  std::optional<long long> m;
  if (m_param > 0) m = m_param;
  bool all_hold = true;
  for (const BoundReport& r : verify_edge_bounds(s, m)) {
    std::cout << r.name << ": "
              << (r.applicable ? (r.holds ? "holds" : "VIOLATED") : "n/a")
              << " count " << r.lhs << " threshold " << r.rhs << "\n";
    if (r.applicable && !r.holds) all_hold = false;
  }
  return all_hold ? 0 : 1;
}

int cmd_gallai(const std::string& input, bool directed) {
  Tournament t = parse_tournament(read_file(input));
  auto tree = directed ? directed_gallai(t) : undirected_gallai(t);
  if (!tree) {
    std::cout << "none\n";
    return 1;
  }
  std::cout << to_text(*tree);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transformation calculus on R/G/B/K-colored transitive tournaments"};
  app.require_subcommand(1);
  int rc = 0;

  auto* t_cmd = app.add_subcommand(
      "transform", "apply record/color/dual/canonicalize steps to a file");
  std::string t_input, t_out;
  std::vector<std::string> t_steps;
  t_cmd->add_option("input", t_input, "tournament or triple-set file")->required();
  t_cmd->add_option("steps", t_steps,
                    "pipeline: record, color, dual, canonicalize");
  t_cmd->add_option("--out", t_out, "output file (default: print to stdout)");
  t_cmd->callback([&] { rc = cmd_transform(t_input, t_steps, t_out); });

  auto* c_cmd = app.add_subcommand("check", "run a named predicate on a file");
  std::string c_pred, c_input;
  int c_cap_k = 20;
  c_cmd->add_option("predicate", c_pred, "predicate name")->required();
  c_cmd->add_option("input", c_input, "input file")->required();
  c_cmd->add_option("--cap-k-edges", c_cap_k, "K-edge cap for moral searches");
  c_cmd->callback([&] { rc = cmd_check(c_pred, c_input, c_cap_k); });

  SearchConfig cfg;
  std::string s_out, s_format = "text", s_kind = "tournaments", s_base;

  auto add_report_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "base seed");
    cmd->add_option("--out", s_out, "write the JSON report here");
    cmd->add_option("--format", s_format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap-violations", cfg.cap_violations,
                    "witnesses kept per report list");
  };

  auto* r_cmd = app.add_subcommand("random", "seeded random search");
  r_cmd->add_option("--n", cfg.n, "vertex count / cube side");
  r_cmd->add_option("--trials", cfg.trials, "trial count");
  r_cmd->add_option("--kind", s_kind, "what to generate")
      ->check(CLI::IsMember({"tournaments", "triples"}));
  r_cmd->add_option("--cap-subset", cfg.cap_subset, "subset search cap");
  r_cmd->add_option("--cap-k-edges", cfg.cap_k_edges, "K-edge cap");
  add_report_flags(r_cmd);
  r_cmd->callback([&] {
    cfg.mode = s_kind == "triples" ? "random-triples" : "random-tournaments";
    rc = run_and_report(cfg, s_out, s_format);
  });

  auto* e_cmd = app.add_subcommand("exhaustive",
                                   "enumerate all 3-colorings at small n");
  e_cmd->add_option("--n", cfg.n, "vertex count (at most 5)");
  add_report_flags(e_cmd);
  e_cmd->callback([&] {
    cfg.mode = "exhaustive-tournaments";
    rc = run_and_report(cfg, s_out, s_format);
  });

  auto* b_cmd = app.add_subcommand("blowup", "random blowups of a base tournament");
  b_cmd->add_option("base", s_base, "base tournament file")->required();
  b_cmd->add_option("--trials", cfg.trials, "trial count");
  b_cmd->add_option("--cap-weight", cfg.cap_weight, "max block weight");
  add_report_flags(b_cmd);
  b_cmd->callback([&] {
    cfg.mode = "blowup-stress";
    cfg.base_text = read_file(s_base);
    rc = run_and_report(cfg, s_out, s_format);
  });

  auto* l_cmd = app.add_subcommand("l2hunt",
                                   "search slice-count square sums for ceiling "
                                   "breaches");
  l_cmd->add_option("--n", cfg.n, "max vertex count");
  l_cmd->add_option("--trials", cfg.trials, "trial count");
  add_report_flags(l_cmd);
  l_cmd->callback([&] {
    cfg.mode = "l2-hunt";
    rc = run_and_report(cfg, s_out, s_format);
  });

  auto* x_cmd = app.add_subcommand("examples", "write a named example to disk");
  std::string x_name, x_dir = ".";
  x_cmd->add_option("name", x_name, "registry name")->required();
  x_cmd->add_option("--out", x_dir, "output directory");
  x_cmd->callback([&] { rc = cmd_examples(x_name, x_dir); });

  auto* v_cmd = app.add_subcommand("verify-bounds",
                                   "evaluate edge density bounds on a triple set");
  std::string v_input;
  long long v_m = 0;
  v_cmd->add_option("input", v_input, "triple-set file")->required();
  v_cmd->add_option("--m-param", v_m, "window parameter (default: box side)");
  v_cmd->callback([&] { rc = cmd_verify_bounds(v_input, v_m); });

  auto* g_cmd = app.add_subcommand("gallai", "print the K-blind decomposition tree");
  std::string g_input;
  bool g_directed = false;
  g_cmd->add_option("input", g_input, "tournament file")->required();
  g_cmd->add_flag("--directed", g_directed, "require contiguous blocks");
  g_cmd->callback([&] { rc = cmd_gallai(g_input, g_directed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const rgbk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
