#pragma once

// Experiment runner behind the `cclm` command line tool: graph building,
// single runs (baselines and curriculum variants), threshold grid search and
// cross-run comparison reports.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cclm/competence.hpp"
#include "cclm/error.hpp"
#include "cclm/kv_format.hpp"
#include "cclm/lang_graph.hpp"
#include "cclm/sampling.hpp"
#include "cclm/scheduler.hpp"
#include "cclm/sim_trainer.hpp"
#include "cclm/trace.hpp"

namespace cclm::harness {

namespace fs = std::filesystem;

inline constexpr int kConfigSchema = 1;
inline constexpr int kReportSchema = 1;

enum class Sampler { Uniform, Proportional, Temperature, CclmMax, CclmAvg };

inline std::string_view to_string(Sampler s) {
  switch (s) {
    case Sampler::Uniform: return "uniform";
    case Sampler::Proportional: return "proportional";
    case Sampler::Temperature: return "temperature";
    case Sampler::CclmMax: return "cclm_max";
    case Sampler::CclmAvg: return "cclm_avg";
  }
  return "?";
}

inline Sampler parse_sampler(std::string_view s) {
  for (auto v : {Sampler::Uniform, Sampler::Proportional, Sampler::Temperature, Sampler::CclmMax,
                 Sampler::CclmAvg})
    if (to_string(v) == s) return v;
  throw Error("unknown sampler '" + std::string(s) + "'");
}

inline bool is_curriculum(Sampler s) { return s == Sampler::CclmMax || s == Sampler::CclmAvg; }

struct ExperimentConfig {
  std::string scenario = "related";  // fixture name or path
  Sampler sampler = Sampler::CclmAvg;
  std::optional<Temperature> tau;
  SchedulerConfig scheduler;
  std::string out_dir = "out";
  std::vector<std::uint64_t> seeds{1, 2, 3};

  void validate() const {
    if ((sampler == Sampler::Temperature) != tau.has_value())
      throw Error("tau must be given exactly when sampler is temperature");
    if (seeds.empty()) throw Error("seed list is empty");
    scheduler.validate();
  }

  /// Short label used as the method name in reports.
  std::string method() const {
    std::string m(to_string(sampler));
    if (tau) m += "(tau=" + tau->str() + ")";
    if (is_curriculum(sampler)) m += "(t=" + kv::format_double(scheduler.threshold) + ")";
    return m;
  }

  ordered_json echo() const {
    ordered_json j;
    j["schema"] = kConfigSchema;
    j["scenario"] = scenario;
    j["sampler"] = to_string(sampler);
    j["tau"] = tau ? ordered_json(tau->str()) : ordered_json(nullptr);
    j["threshold"] = scheduler.threshold;
    j["variant"] = sampler == Sampler::CclmMax ? "max" : "avg";
    j["eval_interval"] = scheduler.eval_interval;
    j["dev_sample"] = scheduler.dev_sample_size;
    j["patience"] = scheduler.patience;
    j["fallback_after"] = scheduler.fallback_round();
    j["max_steps"] = scheduler.max_steps;
    j["seeds"] = seeds;
    return j;
  }
};

inline std::vector<double> parse_double_list(std::string_view s, const std::string& ctx) {
  std::vector<double> out;
  for (const auto& f : kv::split(s, ',')) out.push_back(kv::to_double(f, ctx));
  return out;
}

inline std::vector<std::uint64_t> parse_seed_list(std::string_view s, const std::string& ctx) {
  std::vector<std::uint64_t> out;
  for (const auto& f : kv::split(s, ',')) {
    const auto v = kv::to_int(f, ctx);
    if (v < 0) throw Error(ctx + ": seeds must be non-negative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

/// Applies one `key = value` setting; shared by config files and CLI flags.
inline void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value,
                          const std::string& ctx) {
  auto& s = cfg.scheduler;
  auto integer = [&] { return kv::to_int(value, ctx); };
  if (key == "schema") {
    if (integer() != kConfigSchema) throw Error(ctx + ": unsupported config schema");
  } else if (key == "scenario") {
    cfg.scenario = value;
  } else if (key == "sampler") {
    cfg.sampler = parse_sampler(value);
    if (cfg.sampler == Sampler::CclmMax) s.variant = CompetenceVariant::Max;
    if (cfg.sampler == Sampler::CclmAvg) s.variant = CompetenceVariant::Avg;
  } else if (key == "variant") {
    s.variant = parse_variant(value);
    if (is_curriculum(cfg.sampler))
      cfg.sampler = s.variant == CompetenceVariant::Max ? Sampler::CclmMax : Sampler::CclmAvg;
  } else if (key == "tau") {
    cfg.tau = Temperature::parse(value);
  } else if (key == "threshold") {
    s.threshold = kv::to_double(value, ctx);
  } else if (key == "eval_interval") {
    s.eval_interval = static_cast<int>(integer());
  } else if (key == "dev_sample") {
    s.dev_sample_size = static_cast<int>(integer());
  } else if (key == "patience") {
    s.patience = static_cast<int>(integer());
  } else if (key == "fallback_after") {
    s.fallback_after = static_cast<int>(integer());
  } else if (key == "max_steps") {
    s.max_steps = integer();
  } else if (key == "seed") {
    cfg.seeds = parse_seed_list(value, ctx);
  } else if (key == "seeds") {
    cfg.seeds = parse_seed_list(value, ctx);
  } else if (key == "out") {
    cfg.out_dir = value;
  } else {
    throw Error(ctx + ": unknown config key '" + key + "'");
  }
}

/// Reads a config file. A relative scenario path is taken relative to the
/// config file when such a file exists there.
inline ExperimentConfig load_config(const std::string& path) {
  const auto doc = kv::parse_file(path);
  ExperimentConfig cfg;
  if (!doc.find("schema")) throw Error(path + ": missing key 'schema'");
  for (const auto& r : doc.records) apply_setting(cfg, r.key, r.value, doc.where(r));
  const auto rel = fs::path(path).parent_path() / cfg.scenario;
  if (fs::path(cfg.scenario).is_relative() && fs::is_regular_file(rel)) cfg.scenario = rel.string();
  return cfg;
}

/// A scenario reference is a path, or the name of a shipped `.scenario` file.
inline Scenario resolve_scenario(const std::string& ref, const fs::path& fixture_dir) {
  return load_scenario(resolve_fixture(fixture_dir, ref, ".scenario").string());
}

inline BipartiteLangGraph resolve_graph(const std::string& ref, const fs::path& fixture_dir) {
  return load_graph_fixture(resolve_fixture(fixture_dir, ref, ".graph").string());
}

// ---------------------------------------------------------------------------
// graph-build

struct CorpusInput {
  std::string language;
  std::string path;
};

inline BipartiteLangGraph build_graph_from_corpora(const std::vector<CorpusInput>& hrls,
                                                   const std::vector<CorpusInput>& lrls, int k) {
  LangMap<VocabProfile> profiles;
  std::vector<std::string> hcodes, lcodes;
  for (const auto& c : hrls) {
    profiles.insert_or_assign(c.language, profile_from_corpus_file(c.path, {c.language, Side::HRL}, k));
    hcodes.push_back(c.language);
  }
  for (const auto& c : lrls) {
    profiles.insert_or_assign(c.language, profile_from_corpus_file(c.path, {c.language, Side::LRL}, k));
    lcodes.push_back(c.language);
  }
  return build_graph(hcodes, lcodes, profiles);
}

inline void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("write failed: '" + path.string() + "'");
}

inline std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// run

struct SeedRun {
  std::uint64_t seed = 0;
  RunResult result;
  std::int64_t steps_to_exhaustion = 0;  // step at which the candidate set emptied
  LangMap<std::int64_t> promotion_step;  // LRL -> step it joined the trained set
  std::vector<std::string> forced;
  double lrl_mean = 0.0;
  double hrl_mean = 0.0;
  double best_weighted_loss = 0.0;
  std::int64_t best_step = 0;
};

struct RunOutput {
  ExperimentConfig config;
  std::string scenario_name;
  std::vector<std::string> hrls;
  std::vector<std::string> lrls;
  std::vector<SeedRun> runs;
};

inline double mean_over(const LangMap<double>& m, const std::vector<std::string>& langs) {
  double s = 0.0;
  for (const auto& l : langs) s += m.at(l);
  return s / static_cast<double>(langs.size());
}

inline SamplingWeights static_weights(const ExperimentConfig& cfg, const Scenario& sc) {
  const auto langs = sc.graph.languages();
  const std::set<std::string> all(langs.begin(), langs.end());
  switch (cfg.sampler) {
    case Sampler::Uniform: return uniform_weights(all);
    case Sampler::Proportional: return proportional_weights(sc.train_sizes(), all);
    case Sampler::Temperature: return temperature_weights(sc.train_sizes(), all, *cfg.tau);
    default: throw Error("not a static sampler");
  }
}

inline SeedRun execute_seed(const ExperimentConfig& cfg, const Scenario& sc, std::uint64_t seed) {
  SchedulerConfig sched = cfg.scheduler;
  sched.seed = seed;
  if (cfg.sampler == Sampler::CclmMax) sched.variant = CompetenceVariant::Max;
  if (cfg.sampler == Sampler::CclmAvg) sched.variant = CompetenceVariant::Avg;
  const auto benchmarks = sc.benchmarks();
  SimTrainer trainer(sc.params, sc.graph, seed);

  SeedRun sr;
  sr.seed = seed;
  const bool dynamic = is_curriculum(cfg.sampler);
  sr.result = dynamic ? run(trainer, sc.graph, benchmarks, sc.dev_sizes(), sched)
                      : run_static(trainer, static_weights(cfg, sc), sc.graph, benchmarks,
                                   sc.dev_sizes(), sched);

  const auto problems = validate_trace(sr.result.trace, sc.graph, sched.threshold, dynamic);
  if (!problems.empty()) throw Error("trace validation failed: " + problems.front());

  const auto& trace = sr.result.trace;
  sr.best_weighted_loss = std::numeric_limits<double>::infinity();
  for (const auto& r : trace) {
    for (const auto& l : r.promoted) sr.promotion_step[l] = r.step;
    for (const auto& l : r.forced) {
      sr.promotion_step[l] = r.step;
      sr.forced.push_back(l);
    }
    if (r.weighted_loss < sr.best_weighted_loss) {
      sr.best_weighted_loss = r.weighted_loss;
      sr.best_step = r.step;
    }
  }
  for (const auto& r : trace)
    if (r.candidate.empty()) {
      sr.steps_to_exhaustion = r.step;
      break;
    }
  const auto& final_loss = sr.result.state.competence.loss;
  sr.lrl_mean = mean_over(final_loss, sc.graph.lrls());
  sr.hrl_mean = mean_over(final_loss, sc.graph.hrls());
  return sr;
}

inline RunOutput execute(const ExperimentConfig& cfg, const Scenario& sc) {
  cfg.validate();
  RunOutput out{cfg, sc.name, sc.graph.hrls(), sc.graph.lrls(), {}};
  for (auto seed : cfg.seeds) out.runs.push_back(execute_seed(cfg, sc, seed));
  return out;
}

inline ordered_json report_json(const RunOutput& o) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["scenario"] = o.scenario_name;
  j["method"] = o.config.method();
  j["config"] = o.config.echo();
  j["hrls"] = o.hrls;
  j["lrls"] = o.lrls;
  ordered_json runs = ordered_json::array();
  LangMap<double> mean_loss;
  double mean_wl = 0.0, mean_lrl = 0.0, mean_hrl = 0.0;
  const auto n = static_cast<double>(o.runs.size());
  for (const auto& r : o.runs) {
    const auto& st = r.result.state;
    ordered_json e;
    e["seed"] = r.seed;
    e["final_step"] = st.step;
    e["final_weighted_loss"] = r.result.trace.back().weighted_loss;
    e["best_weighted_loss"] = r.best_weighted_loss;
    e["best_step"] = r.best_step;
    e["lrl_mean"] = r.lrl_mean;
    e["hrl_mean"] = r.hrl_mean;
    e["final_loss"] = to_json(st.competence.loss);
    e["final_c"] = to_json(st.competence.c);
    ordered_json promo = ordered_json::object();
    for (const auto& [l, step] : r.promotion_step) promo[l] = step;
    e["promotions"] = promo;
    e["forced"] = r.forced;
    e["steps_to_exhaustion"] = r.steps_to_exhaustion;
    e["weights"] = to_json(st.weights.values());
    runs.push_back(e);
    for (const auto& [l, v] : st.competence.loss) mean_loss[l] += v / n;
    mean_wl += r.result.trace.back().weighted_loss / n;
    mean_lrl += r.lrl_mean / n;
    mean_hrl += r.hrl_mean / n;
  }
  j["runs"] = runs;
  ordered_json mean;
  mean["final_weighted_loss"] = mean_wl;
  mean["lrl_mean"] = mean_lrl;
  mean["hrl_mean"] = mean_hrl;
  mean["final_loss"] = to_json(mean_loss);
  j["mean"] = mean;
  return j;
}

inline std::string fixed(double v, int prec = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(prec) << v;
  return s.str();
}

inline std::string report_csv(const RunOutput& o) {
  std::vector<std::string> langs = o.hrls;
  langs.insert(langs.end(), o.lrls.begin(), o.lrls.end());
  std::ostringstream out;
  out << "seed,final_step,final_weighted_loss,best_weighted_loss,lrl_mean,hrl_mean,steps_to_exhaustion";
  for (const auto& l : langs) out << ",loss_" << l;
  out << '\n';
  const auto j = report_json(o);
  for (const auto& r : j["runs"]) {
    out << r["seed"].get<std::uint64_t>() << ',' << r["final_step"].get<std::int64_t>() << ','
        << kv::format_double(r["final_weighted_loss"]) << ','
        << kv::format_double(r["best_weighted_loss"]) << ',' << kv::format_double(r["lrl_mean"])
        << ',' << kv::format_double(r["hrl_mean"]) << ','
        << r["steps_to_exhaustion"].get<std::int64_t>();
    for (const auto& l : langs) out << ',' << kv::format_double(r["final_loss"][l]);
    out << '\n';
  }
  const auto& m = j["mean"];
  out << "mean,," << kv::format_double(m["final_weighted_loss"]) << ",,"
      << kv::format_double(m["lrl_mean"]) << ',' << kv::format_double(m["hrl_mean"]) << ',';
  for (const auto& l : langs) out << ',' << kv::format_double(m["final_loss"][l]);
  out << '\n';
  return out.str();
}

inline std::string report_summary(const RunOutput& o) {
  const auto j = report_json(o);
  std::ostringstream out;
  out << "method    " << o.config.method() << '\n'
      << "scenario  " << o.scenario_name << '\n'
      << "config    " << j["config"].dump() << "\n\n";
  out << std::left << std::setw(8) << "seed" << std::right << std::setw(8) << "steps"
      << std::setw(14) << "weighted" << std::setw(12) << "LRL-mean" << std::setw(12) << "HRL-mean"
      << std::setw(12) << "exhausted" << '\n';
  for (const auto& r : o.runs)
    out << std::left << std::setw(8) << r.seed << std::right << std::setw(8) << r.result.state.step
        << std::setw(14) << fixed(r.result.trace.back().weighted_loss) << std::setw(12)
        << fixed(r.lrl_mean) << std::setw(12) << fixed(r.hrl_mean) << std::setw(12)
        << r.steps_to_exhaustion << '\n';
  const auto& m = j["mean"];
  out << std::left << std::setw(8) << "mean" << std::right << std::setw(8) << "" << std::setw(14)
      << fixed(m["final_weighted_loss"]) << std::setw(12) << fixed(m["lrl_mean"]) << std::setw(12)
      << fixed(m["hrl_mean"]) << "\n\n";

  for (const auto& r : o.runs) {
    out << "seed " << r.seed << " promotions:";
    if (r.promotion_step.empty()) out << " (none, static sampler)";
    std::vector<std::pair<std::int64_t, std::string>> order;
    for (const auto& [l, step] : r.promotion_step) order.emplace_back(step, l);
    std::ranges::sort(order);
    for (const auto& [step, l] : order) {
      const bool f = std::ranges::find(r.forced, l) != r.forced.end();
      out << ' ' << l << '@' << step << (f ? "(fallback)" : "");
    }
    out << "\n  final weights:";
    for (const auto& [l, w] : r.result.state.weights.values()) out << ' ' << l << '=' << fixed(w);
    out << '\n';
  }
  return out.str();
}

inline std::string trace_file_name(std::uint64_t seed) {
  return "trace_seed" + std::to_string(seed) + ".ndjson";
}

/// Writes trace_seed<N>.ndjson per seed, report.json, report.csv and
/// summary.txt into the configured output directory.
inline void write_run(const RunOutput& o, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& r : o.runs) write_text(dir / trace_file_name(r.seed), trace_to_ndjson(r.result.trace));
  write_text(dir / "report.json", report_json(o).dump(2) + "\n");
  write_text(dir / "report.csv", report_csv(o));
  write_text(dir / "summary.txt", report_summary(o));
}

// ---------------------------------------------------------------------------
// grid-search

inline const std::vector<double>& default_threshold_grid() {
  static const std::vector<double> grid{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  return grid;
}

struct GridRow {
  double threshold = 0.0;
  std::vector<double> per_seed;  // final weighted dev loss
  double mean = std::numeric_limits<double>::quiet_NaN();
  std::string error;             // non-empty when a run in this cell failed
  bool argmin = false;
};

struct GridResult {
  std::string method;
  std::vector<std::uint64_t> seeds;
  std::vector<GridRow> rows;
  int failures = 0;
};

inline GridResult grid_search(const ExperimentConfig& base, const Scenario& sc,
                              const std::vector<double>& thresholds) {
  if (thresholds.empty()) throw Error("empty threshold list");
  if (!is_curriculum(base.sampler)) throw Error("grid search needs a cclm_max or cclm_avg sampler");
  for (double t : thresholds)
    if (!(t >= 0.0 && t <= 1.0)) throw Error("threshold outside [0,1]: " + kv::format_double(t));

  GridResult g;
  g.method = std::string(to_string(base.sampler));
  g.seeds = base.seeds;
  for (double t : thresholds) {
    GridRow row;
    row.threshold = t;
    ExperimentConfig cfg = base;
    cfg.scheduler.threshold = t;
    try {
      const auto out = execute(cfg, sc);
      double sum = 0.0;
      for (const auto& r : out.runs) {
        row.per_seed.push_back(r.result.trace.back().weighted_loss);
        sum += row.per_seed.back();
      }
      row.mean = sum / static_cast<double>(row.per_seed.size());
    } catch (const std::exception& e) {
      row.error = e.what();
      ++g.failures;
    }
    g.rows.push_back(std::move(row));
  }
  GridRow* best = nullptr;
  for (auto& r : g.rows)
    if (r.error.empty() && (!best || r.mean < best->mean)) best = &r;
  if (best) best->argmin = true;
  return g;
}

inline std::string grid_csv(const GridResult& g) {
  std::ostringstream out;
  out << "threshold,mean_final_weighted_loss";
  for (auto s : g.seeds) out << ",seed_" << s;
  out << ",argmin,error\n";
  for (const auto& r : g.rows) {
    out << kv::format_double(r.threshold) << ',' << (r.error.empty() ? kv::format_double(r.mean) : "");
    for (std::size_t i = 0; i < g.seeds.size(); ++i)
      out << ',' << (i < r.per_seed.size() ? kv::format_double(r.per_seed[i]) : "");
    out << ',' << (r.argmin ? "1" : "0") << ',' << '"' << r.error << '"' << '\n';
  }
  return out.str();
}

inline std::string grid_text(const GridResult& g) {
  std::ostringstream out;
  out << "grid search: " << g.method << ", seeds";
  for (auto s : g.seeds) out << ' ' << s;
  out << "\n\n" << std::setw(10) << "threshold" << std::setw(16) << "mean weighted" << '\n';
  for (const auto& r : g.rows) {
    out << std::setw(10) << fixed(r.threshold, 2) << std::setw(16)
        << (r.error.empty() ? fixed(r.mean) : std::string("FAILED")) << (r.argmin ? "  <- best" : "");
    if (!r.error.empty()) out << "  " << r.error;
    out << '\n';
  }
  if (g.failures) out << '\n' << g.failures << " cell(s) failed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// report

struct ComparisonRow {
  std::string method;
  std::string dir;
  double weighted = 0.0;
  double lrl_mean = 0.0;
  double hrl_mean = 0.0;
  LangMap<double> loss;
};

struct Comparison {
  std::string scenario;
  std::vector<std::string> languages;  // HRLs then LRLs
  std::vector<ComparisonRow> rows;
};

inline Comparison compare_runs(const std::vector<std::string>& dirs) {
  if (dirs.empty()) throw Error("report needs at least one run directory");
  Comparison cmp;
  for (const auto& d : dirs) {
    const auto path = fs::path(d) / "report.json";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::exception& e) {
      throw Error(path.string() + ": " + e.what());
    }
    try {
      if (j.at("schema").get<int>() != kReportSchema) throw Error("unsupported report schema");
      std::vector<std::string> langs = j.at("hrls").get<std::vector<std::string>>();
      for (const auto& l : j.at("lrls").get<std::vector<std::string>>()) langs.push_back(l);
      const auto scenario = j.at("scenario").get<std::string>();
      if (cmp.rows.empty()) {
        cmp.scenario = scenario;
        cmp.languages = langs;
      } else if (scenario != cmp.scenario || langs != cmp.languages) {
        throw Error("scenario mismatch");
      }
      const auto& m = j.at("mean");
      ComparisonRow row{j.at("method").get<std::string>(), d, m.at("final_weighted_loss").get<double>(),
                        m.at("lrl_mean").get<double>(), m.at("hrl_mean").get<double>(), {}};
      for (const auto& l : langs) row.loss[l] = m.at("final_loss").at(l).get<double>();
      cmp.rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw Error(path.string() + ": schema mismatch: " + e.what());
    } catch (const Error& e) {
      throw Error(path.string() + ": " + e.what());
    }
  }
  return cmp;
}

inline std::string comparison_csv(const Comparison& c) {
  std::ostringstream out;
  out << "method,run_dir,weighted_loss,lrl_mean,hrl_mean";
  for (const auto& l : c.languages) out << ',' << l;
  out << '\n';
  for (const auto& r : c.rows) {
    out << r.method << ',' << r.dir << ',' << kv::format_double(r.weighted) << ','
        << kv::format_double(r.lrl_mean) << ',' << kv::format_double(r.hrl_mean);
    for (const auto& l : c.languages) out << ',' << kv::format_double(r.loss.at(l));
    out << '\n';
  }
  return out.str();
}

inline std::string comparison_text(const Comparison& c) {
  std::size_t w = 8;
  for (const auto& r : c.rows) w = std::max(w, r.method.size() + 2);
  std::ostringstream out;
  out << "scenario " << c.scenario << " (final dev loss, mean over seeds; lower is better)\n\n";
  out << std::left << std::setw(static_cast<int>(w)) << "method" << std::right << std::setw(10)
      << "weighted" << std::setw(10) << "LRLs" << std::setw(10) << "HRLs";
  for (const auto& l : c.languages) out << std::setw(8) << l;
  out << '\n';
  for (const auto& r : c.rows) {
    out << std::left << std::setw(static_cast<int>(w)) << r.method << std::right << std::setw(10)
        << fixed(r.weighted, 4) << std::setw(10) << fixed(r.lrl_mean, 4) << std::setw(10)
        << fixed(r.hrl_mean, 4);
    for (const auto& l : c.languages) out << std::setw(8) << fixed(r.loss.at(l), 3);
    out << '\n';
  }
  return out.str();
}

}  // namespace cclm::harness
