// cclm: curriculum scheduling experiments on the learning-curve simulator.
//
//   cclm graph-build --fixture related_sim
//   cclm graph-build --hrl tur=tur.txt --lrl aze=aze.txt --k 1000 --out g.graph
//   cclm run --config runs/cclm_avg.cfg --threshold 0.9 --out out/avg
//   cclm grid-search --sampler cclm_avg --thresholds 0.5,0.6,0.7,0.8,0.9,1.0
//   cclm report out/uniform out/avg
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cclm/harness.hpp"

#ifndef CCLM_FIXTURE_DIR
#define CCLM_FIXTURE_DIR "fixtures"
#endif

namespace {

namespace fs = std::filesystem;
using namespace cclm;
using namespace cclm::harness;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by run and grid-search. Values stay strings until they are
// applied through the same path as config-file entries.
struct RunFlags {
  std::string config;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App& app, const std::string& flag, const std::string& key, const std::string& help) {
    options[key] = app.add_option(flag, values[key], help);
  }

  void attach(CLI::App& app) {
    app.add_option("--config", config, "experiment config file (key = value)");
    add(app, "--scenario", "scenario", "scenario name or path");
    add(app, "--sampler", "sampler", "uniform|proportional|temperature|cclm_max|cclm_avg");
    add(app, "--tau", "tau", "temperature (number or inf), temperature sampler only");
    add(app, "--threshold", "threshold", "promotion threshold t in [0,1]");
    add(app, "--variant", "variant", "max|avg (curriculum samplers)");
    add(app, "--eval-interval", "eval_interval", "training steps between evaluations");
    add(app, "--dev-sample", "dev_sample", "dev samples per language per evaluation");
    add(app, "--patience", "patience", "early-stopping patience in evaluations");
    add(app, "--fallback-after", "fallback_after", "evaluation rounds before forced promotion");
    add(app, "--max-steps", "max_steps", "hard training-step cap");
    add(app, "--seed", "seed", "single seed (overrides the seed list)");
    add(app, "--seeds", "seeds", "comma-separated seed list");
    add(app, "--out", "out", "output directory");
  }

  ExperimentConfig resolve() const {
    ExperimentConfig cfg = config.empty() ? ExperimentConfig{} : load_config(config);
    // Order matters: sampler before variant, seeds before seed.
    for (const char* key : {"scenario", "sampler", "variant", "tau", "threshold", "eval_interval",
                            "dev_sample", "patience", "fallback_after", "max_steps", "seeds",
                            "seed", "out"}) {
      if (options.at(key)->count() == 0) continue;
      try {
        apply_setting(cfg, key, values.at(key), "--" + std::string(key));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    try {
      cfg.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

std::vector<CorpusInput> parse_corpus_args(const std::vector<std::string>& args) {
  std::vector<CorpusInput> out;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == a.size())
      throw UsageError("expected LANG=PATH, got '" + a + "'");
    out.push_back({a.substr(0, eq), a.substr(eq + 1)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competence-based curriculum scheduling harness"};
  app.require_subcommand(1);
  std::string fixture_dir = CCLM_FIXTURE_DIR;
  app.add_option("--fixtures", fixture_dir, "directory holding shipped fixtures")
      ->capture_default_str();

  auto* graph_cmd = app.add_subcommand("graph-build", "build or load a language graph, print its matrix");
  std::string fixture, graph_out;
  std::vector<std::string> hrl_args, lrl_args;
  int k = kDefaultProfileSize;
  graph_cmd->add_option("--fixture", fixture, "shipped fixture name or graph file");
  graph_cmd->add_option("--hrl", hrl_args, "HRL corpus as LANG=PATH (repeatable)");
  graph_cmd->add_option("--lrl", lrl_args, "LRL corpus as LANG=PATH (repeatable)");
  graph_cmd->add_option("--k", k, "profile size (top-k tokens)")->capture_default_str();
  graph_cmd->add_option("--out", graph_out, "write the graph fixture here");

  auto* run_cmd = app.add_subcommand("run", "run one sampler/scheduler on a scenario");
  RunFlags run_flags;
  run_flags.attach(*run_cmd);

  auto* grid_cmd = app.add_subcommand("grid-search", "sweep the promotion threshold");
  RunFlags grid_flags;
  grid_flags.attach(*grid_cmd);
  std::string thresholds;
  grid_cmd->add_option("--thresholds", thresholds, "comma-separated thresholds (default 0.5..1.0)");

  auto* report_cmd = app.add_subcommand("report", "compare finished runs on one scenario");
  std::vector<std::string> run_dirs;
  std::string report_csv_path;
  report_cmd->add_option("dirs", run_dirs, "run output directories");
  report_cmd->add_option("--csv", report_csv_path, "also write the comparison as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*graph_cmd) {
      BipartiteLangGraph graph;
      if (!fixture.empty()) {
        if (!hrl_args.empty() || !lrl_args.empty())
          throw UsageError("--fixture excludes --hrl/--lrl");
        graph = resolve_graph(fixture, fixture_dir);
      } else {
        if (hrl_args.empty() || lrl_args.empty())
          throw UsageError("need --fixture, or at least one --hrl and one --lrl");
        if (k < 1) throw UsageError("--k must be positive");
        graph = build_graph_from_corpora(parse_corpus_args(hrl_args), parse_corpus_args(lrl_args), k);
      }
      std::cout << format_similarity_matrix(graph);
      if (!graph_out.empty()) write_text(graph_out, write_graph_fixture(graph));
    } else if (*run_cmd) {
      const auto cfg = run_flags.resolve();
      const auto scenario = resolve_scenario(cfg.scenario, fixture_dir);
      const auto out = execute(cfg, scenario);
      write_run(out, cfg.out_dir);
      std::cout << report_summary(out);
    } else if (*grid_cmd) {
      const auto cfg = grid_flags.resolve();
      std::vector<double> grid = default_threshold_grid();
      if (!thresholds.empty()) {
        try {
          grid = parse_double_list(thresholds, "--thresholds");
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
      }
      const auto scenario = resolve_scenario(cfg.scenario, fixture_dir);
      const auto g = grid_search(cfg, scenario, grid);
      write_text(fs::path(cfg.out_dir) / "grid.csv", grid_csv(g));
      write_text(fs::path(cfg.out_dir) / "grid_summary.txt", grid_text(g));
      std::cout << grid_text(g);
      if (g.failures) return 2;
    } else if (*report_cmd) {
      if (run_dirs.empty()) throw UsageError("report needs at least one run directory");
      const auto cmp = compare_runs(run_dirs);
      std::cout << comparison_text(cmp);
      if (!report_csv_path.empty()) write_text(report_csv_path, comparison_csv(cmp));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
