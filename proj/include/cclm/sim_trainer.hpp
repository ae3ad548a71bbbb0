#pragma once

// Deterministic learning-curve simulator. Each language follows
//
//   L(n) = Lf + (L0 - Lf) * exp(-n / kappa)
//
// in its effective sample count n. HRLs count only their own samples; an LRL
// also receives alpha * e(h, lrl) * samples_h from every HRL h. Steps allocate
// batch_size * weight samples to each language (expected allocation, so
// noiseless runs carry no randomness at all).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cclm/competence.hpp"
#include "cclm/error.hpp"
#include "cclm/kv_format.hpp"
#include "cclm/lang_graph.hpp"
#include "cclm/sampling.hpp"
#include "cclm/trainer.hpp"

namespace cclm {

struct CurveParams {
  double initial_loss = 0.0;  // L0
  double floor_loss = 0.0;    // Lf
  double kappa = 1.0;         // samples per e-fold
  std::int64_t train_size = 1;
  std::int64_t dev_size = 1;

  void validate(const std::string& lang) const {
    if (!std::isfinite(initial_loss) || !std::isfinite(floor_loss))
      throw Error("non-finite curve for " + lang);
    if (!(floor_loss < initial_loss)) throw Error("floor must be below initial loss: " + lang);
    if (!(kappa > 0.0)) throw Error("kappa must be positive: " + lang);
    if (train_size < 1 || dev_size < 1) throw Error("corpus sizes must be positive: " + lang);
  }
};

struct LearningCurveParams {
  LangMap<CurveParams> curves;
  double alpha = 0.3;        // transfer coefficient
  double sigma = 0.0;        // dev-loss noise at sample size 1
  double batch_size = 64.0;  // samples per step

  void validate() const {
    if (curves.empty()) throw Error("no languages in simulator params");
    for (const auto& [lang, c] : curves) c.validate(lang);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("alpha must lie in [0,1]");
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw Error("sigma must be non-negative");
    if (!(batch_size > 0.0)) throw Error("batch_size must be positive");
  }

  const CurveParams& curve(std::string_view lang) const {
    auto it = curves.find(lang);
    if (it == curves.end()) throw Error("unknown language: " + std::string(lang));
    return it->second;
  }
};

inline double curve_loss(const CurveParams& c, double effective_samples) {
  return c.floor_loss + (c.initial_loss - c.floor_loss) * std::exp(-effective_samples / c.kappa);
}

class SimTrainer final : public Trainer {
 public:
  SimTrainer(LearningCurveParams params, BipartiteLangGraph graph, std::uint64_t seed)
      : params_(std::move(params)), graph_(std::move(graph)), rng_(seed) {
    params_.validate();
    for (const auto& lang : graph_.languages()) {
      params_.curve(lang);
      own_.emplace(lang, 0.0);
    }
    for (const auto& [lang, _] : params_.curves)
      if (!graph_.contains(lang)) throw Error("language not in graph: " + lang);
  }

  void train_steps(const SamplingWeights& weights, int steps) override {
    if (steps < 1) throw Error("train_steps: steps must be positive");
    for (const auto& [lang, w] : weights.values())
      if (!own_.contains(lang)) throw Error("unknown language: " + lang);
    const double samples = static_cast<double>(steps) * params_.batch_size;
    for (const auto& [lang, w] : weights.values()) own_.find(lang)->second += samples * w;
    step_ += steps;
  }

  TrainerReport eval_dev(int sample_size, const std::set<std::string>& languages) override {
    if (sample_size < 1) throw Error("eval_dev: sample_size must be positive");
    TrainerReport report{step_, {}};
    const double scale = params_.sigma / std::sqrt(static_cast<double>(sample_size));
    for (const auto& lang : languages) {
      double loss = sim_loss(lang);
      if (params_.sigma > 0.0) loss += scale * standard_normal(rng_);
      report.dev_loss.emplace(lang, loss);
    }
    return report;
  }

  /// own samples, plus similarity-weighted HRL samples for an LRL
  double effective_samples(std::string_view lang) const {
    const auto it = own_.find(lang);
    if (it == own_.end()) throw Error("unknown language: " + std::string(lang));
    double n = it->second;
    if (graph_.is_lrl(lang)) {
      double transfer = 0.0;
      for (const auto& h : graph_.hrls()) transfer += graph_.weight(h, lang) * own_.find(h)->second;
      n += params_.alpha * transfer;
    }
    return n;
  }

  /// Noiseless current loss.
  double sim_loss(std::string_view lang) const {
    return curve_loss(params_.curve(lang), effective_samples(lang));
  }

  double own_samples(std::string_view lang) const {
    const auto it = own_.find(lang);
    if (it == own_.end()) throw Error("unknown language: " + std::string(lang));
    return it->second;
  }

  std::int64_t step() const { return step_; }
  const LearningCurveParams& params() const { return params_; }
  const BipartiteLangGraph& graph() const { return graph_; }

 private:
  LearningCurveParams params_;
  BipartiteLangGraph graph_;
  LangMap<double> own_;
  std::int64_t step_ = 0;
  Rng rng_;
};

/// Fifty e-folds: the remaining gap is below 2e-22 of (L0 - Lf).
inline double default_bitext_budget(const CurveParams& c) { return 50.0 * c.kappa; }

/// Converged loss of a single-language model trained on `budget_samples` of
/// its own data: no transfer, no noise.
inline BenchmarkLoss run_bitext_benchmark(const std::string& lang, const LearningCurveParams& params,
                                          std::optional<double> budget_samples = std::nullopt) {
  const auto& c = params.curve(lang);
  c.validate(lang);
  const double budget = budget_samples.value_or(default_bitext_budget(c));
  return BenchmarkLoss(lang, curve_loss(c, budget));
}

// Scenario file:
//   schema = 1
//   name = related
//   graph = related_sim          (fixture name or path, relative to this file)
//   alpha = 0.3
//   sigma = 0
//   batch_size = 64
//   lang = aze, 12, 7.87, 20000, 5940, 671   (code, L0, Lf, kappa, train, dev)
//   benchmark = tur, 4.0                      (optional L* override)

inline constexpr int kScenarioSchema = 1;

struct Scenario {
  std::string name;
  std::string graph_ref;
  BipartiteLangGraph graph;
  LearningCurveParams params;
  LangMap<double> benchmark_overrides;

  CorpusSizes train_sizes() const {
    CorpusSizes s;
    for (const auto& [l, c] : params.curves) s.emplace(l, c.train_size);
    return s;
  }
  CorpusSizes dev_sizes() const {
    CorpusSizes s;
    for (const auto& [l, c] : params.curves) s.emplace(l, c.dev_size);
    return s;
  }

  /// L* per language: override when given, else the simulated bitext run.
  LangMap<BenchmarkLoss> benchmarks() const {
    LangMap<BenchmarkLoss> out;
    for (const auto& lang : graph.languages()) {
      auto it = benchmark_overrides.find(lang);
      out.emplace(lang, it != benchmark_overrides.end() ? BenchmarkLoss(lang, it->second)
                                                          : run_bitext_benchmark(lang, params));
    }
    return out;
  }
};

inline std::filesystem::path resolve_fixture(const std::filesystem::path& base_dir,
                                             const std::string& ref, const std::string& ext) {
  namespace fs = std::filesystem;
  for (const fs::path& cand : {fs::path(ref), base_dir / ref, base_dir / (ref + ext)})
    if (fs::is_regular_file(cand)) return cand;
  throw Error("cannot resolve fixture '" + ref + "' from " + base_dir.string());
}

inline Scenario parse_scenario(const kv::Document& doc, const std::filesystem::path& base_dir) {
  Scenario s;
  const auto& schema = doc.require("schema");
  if (kv::to_int(schema.value, doc.where(schema)) != kScenarioSchema)
    throw Error(doc.where(schema) + ": unsupported scenario schema");
  s.name = doc.require("name").value;
  s.graph_ref = doc.require("graph").value;
  s.graph = load_graph_fixture(resolve_fixture(base_dir, s.graph_ref, ".graph").string());

  auto num = [&](const char* key, double fallback) {
    const auto* r = doc.find(key);
    return r ? kv::to_double(r->value, doc.where(*r)) : fallback;
  };
  s.params.alpha = num("alpha", s.params.alpha);
  s.params.sigma = num("sigma", s.params.sigma);
  s.params.batch_size = num("batch_size", s.params.batch_size);

  for (const auto* r : doc.all("lang")) {
    const auto f = r->fields();
    const auto at = doc.where(*r);
    if (f.size() != 6) throw Error(at + ": lang needs 'code, L0, Lf, kappa, train, dev'");
    CurveParams c{kv::to_double(f[1], at), kv::to_double(f[2], at), kv::to_double(f[3], at),
                  kv::to_int(f[4], at), kv::to_int(f[5], at)};
    if (!s.params.curves.emplace(f[0], c).second) throw Error(at + ": duplicate language " + f[0]);
  }
  for (const auto* r : doc.all("benchmark")) {
    const auto f = r->fields();
    if (f.size() != 2) throw Error(doc.where(*r) + ": benchmark needs 'code, loss'");
    s.benchmark_overrides[f[0]] = kv::to_double(f[1], doc.where(*r));
  }
  try {
    s.params.validate();
    for (const auto& lang : s.graph.languages()) s.params.curve(lang);
    for (const auto& [lang, _] : s.params.curves)
      if (!s.graph.contains(lang)) throw Error("language not in graph: " + lang);
    for (const auto& [lang, _] : s.benchmark_overrides)
      if (!s.graph.contains(lang)) throw Error("benchmark for unknown language: " + lang);
  } catch (const Error& e) {
    throw Error(doc.source + ": " + e.what());
  }
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  return parse_scenario(kv::parse_file(path), std::filesystem::path(path).parent_path());
}

}  // namespace cclm
