#pragma once

// Competence-based curriculum scheduler.
//
// HRLs start in the selected (trained) set with uniform weights; LRLs wait in
// the candidate set. Every evaluation round refreshes each language's
// Self-evaluated Competence c = 2^(L* - L), promotes each candidate whose
// HRLs-evaluated Competence reaches the threshold, and resets the weights of
// the selected set to ψ ∝ 1/c. Candidates still waiting after
// `fallback_after` rounds (or when training otherwise stops) are added
// unconditionally. Training stops when the dev-size-weighted dev loss has not
// improved for `patience` rounds, or at max_steps.
//
// Round 0 is an observation at step 0, before any training: it records c and
// ĉ but neither promotes nor touches the uniform cold-start weights.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cclm/competence.hpp"
#include "cclm/error.hpp"
#include "cclm/lang_graph.hpp"
#include "cclm/sampling.hpp"
#include "cclm/trainer.hpp"

namespace cclm {

struct SchedulerConfig {
  double threshold = 0.8;
  int eval_interval = 100;
  int dev_sample_size = 256;
  CompetenceVariant variant = CompetenceVariant::Avg;
  int patience = 10;
  std::optional<int> fallback_after;  // evaluation rounds; unset = max_steps / eval_interval
  std::int64_t max_steps = 30000;
  std::uint64_t seed = 1;

  void validate() const {
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw Error("threshold must lie in [0,1]");
    if (eval_interval < 1) throw Error("eval_interval must be >= 1");
    if (dev_sample_size < 1) throw Error("dev_sample_size must be >= 1");
    if (patience < 1) throw Error("patience must be >= 1");
    if (fallback_after && *fallback_after < 1) throw Error("fallback_after must be >= 1");
    if (max_steps < 1) throw Error("max_steps must be >= 1");
  }

  int fallback_round() const {
    if (fallback_after) return *fallback_after;
    return static_cast<int>(std::max<std::int64_t>(1, max_steps / eval_interval));
  }
};

struct CompetenceState {
  LangMap<double> loss;   // L, latest observation
  LangMap<double> c;      // 2^(L* - L)
  LangMap<double> c_hat;  // candidates at the latest round
};

struct SchedulerState {
  std::set<std::string> selected;
  std::set<std::string> candidate;
  SamplingWeights weights;
  std::int64_t step = 0;
  int eval_round = 0;
  double best_weighted_loss = std::numeric_limits<double>::infinity();
  int rounds_since_best = 0;
  bool fallback_fired = false;
  CompetenceState competence;
};

struct EvalRecord {
  int round = 0;
  std::int64_t step = 0;
  bool initial = false;
  std::set<std::string> selected;   // after this round's promotions
  std::set<std::string> candidate;  // after this round's promotions
  LangMap<double> loss;
  LangMap<double> c;
  LangMap<double> c_hat;  // for the candidates entering the round
  std::vector<std::string> promoted;
  std::vector<std::string> forced;
  bool fallback = false;
  SamplingWeights weights;
  double weighted_loss = 0.0;
};

using ScheduleTrace = std::vector<EvalRecord>;

inline SchedulerState init(const SchedulerConfig& config, const BipartiteLangGraph& graph,
                           const LangMap<BenchmarkLoss>& benchmarks) {
  config.validate();
  for (const auto& lang : graph.languages())
    if (!benchmarks.contains(lang)) throw Error("no benchmark: " + lang);
  SchedulerState s;
  s.selected.insert(graph.hrls().begin(), graph.hrls().end());
  s.candidate.insert(graph.lrls().begin(), graph.lrls().end());
  s.weights = uniform_weights(s.selected);
  return s;
}

inline double weighted_dev_loss(const TrainerReport& report, const CorpusSizes& dev_sizes) {
  if (report.dev_loss.empty()) throw Error("empty report");
  double num = 0.0;
  double den = 0.0;
  for (const auto& [lang, loss] : report.dev_loss) {
    auto it = dev_sizes.find(lang);
    if (it == dev_sizes.end()) throw Error("missing dev size: " + lang);
    if (it->second < 1) throw Error("dev size must be positive: " + lang);
    const auto n = static_cast<double>(it->second);
    num += n * loss;
    den += n;
  }
  return num / den;
}

namespace detail {

inline void refresh_competence(SchedulerState& s, const TrainerReport& report,
                               const BipartiteLangGraph& graph,
                               const LangMap<BenchmarkLoss>& benchmarks,
                               const SchedulerConfig& config) {
  for (const auto* set : {&s.selected, &s.candidate})
    for (const auto& lang : *set)
      if (!report.dev_loss.contains(lang)) throw Error("report missing language: " + lang);
  for (const auto& [lang, loss] : report.dev_loss) {
    if (!graph.contains(lang)) throw Error("report has unknown language: " + lang);
    auto b = benchmarks.find(lang);
    if (b == benchmarks.end()) throw Error("no benchmark: " + lang);
    s.competence.loss[lang] = loss;
    s.competence.c[lang] = self_competence(loss, b->second);
  }
  LangMap<double> c_hrls;
  for (const auto& h : graph.hrls()) c_hrls[h] = s.competence.c.at(h);
  s.competence.c_hat.clear();
  for (const auto& lrl : s.candidate)
    s.competence.c_hat[lrl] = hrl_eval(config.variant, graph, lrl, c_hrls);
  s.step = report.step;
}

}  // namespace detail

/// Round-0 observation: competencies only, weights stay at the cold start.
inline SchedulerState observe_initial(const SchedulerState& state, const TrainerReport& report,
                                      const BipartiteLangGraph& graph,
                                      const LangMap<BenchmarkLoss>& benchmarks,
                                      const SchedulerConfig& config) {
  SchedulerState s = state;
  detail::refresh_competence(s, report, graph, benchmarks, config);
  return s;
}

struct EvaluationOutcome {
  SchedulerState state;
  std::vector<std::string> promotions;  // sorted by code
};

inline EvaluationOutcome on_evaluation(const SchedulerState& state, const TrainerReport& report,
                                       const BipartiteLangGraph& graph,
                                       const LangMap<BenchmarkLoss>& benchmarks,
                                       const SchedulerConfig& config) {
  EvaluationOutcome out{state, {}};
  auto& s = out.state;
  detail::refresh_competence(s, report, graph, benchmarks, config);
  ++s.eval_round;
  for (const auto& [lrl, c_hat] : s.competence.c_hat)
    if (c_hat >= config.threshold) out.promotions.push_back(lrl);
  for (const auto& lrl : out.promotions) {
    s.candidate.erase(lrl);
    s.selected.insert(lrl);
  }
  s.weights = competence_weights(s.competence.c, s.selected);
  return out;
}

/// Completeness fallback. No-op when nothing is waiting.
inline SchedulerState force_promote_remaining(const SchedulerState& state) {
  if (state.candidate.empty()) return state;
  SchedulerState s = state;
  s.selected.insert(s.candidate.begin(), s.candidate.end());
  s.candidate.clear();
  s.fallback_fired = true;
  const bool have_c = std::ranges::all_of(
      s.selected, [&](const std::string& l) { return s.competence.c.contains(l); });
  s.weights = have_c ? competence_weights(s.competence.c, s.selected) : uniform_weights(s.selected);
  return s;
}

struct RunResult {
  SchedulerState state;
  ScheduleTrace trace;
};

namespace detail {

inline std::set<std::string> all_languages(const BipartiteLangGraph& graph) {
  const auto v = graph.languages();
  return {v.begin(), v.end()};
}

inline TrainerReport evaluate(Trainer& trainer, const SchedulerConfig& config,
                              const std::set<std::string>& languages, std::int64_t step) {
  try {
    auto r = trainer.eval_dev(config.dev_sample_size, languages);
    r.step = step;
    return r;
  } catch (const std::exception& e) {
    throw Error("trainer failed at step " + std::to_string(step) + ": " + e.what());
  }
}

inline void train(Trainer& trainer, const SamplingWeights& w, int steps, std::int64_t at_step) {
  try {
    trainer.train_steps(w, steps);
  } catch (const std::exception& e) {
    throw Error("trainer failed at step " + std::to_string(at_step) + ": " + e.what());
  }
}

inline EvalRecord make_record(const SchedulerState& s, bool initial, double wl,
                              std::vector<std::string> promoted, std::vector<std::string> forced) {
  EvalRecord r;
  r.round = s.eval_round;
  r.step = s.step;
  r.initial = initial;
  r.selected = s.selected;
  r.candidate = s.candidate;
  r.loss = s.competence.loss;
  r.c = s.competence.c;
  r.c_hat = s.competence.c_hat;
  r.promoted = std::move(promoted);
  r.forced = std::move(forced);
  r.fallback = !r.forced.empty();
  r.weights = s.weights;
  r.weighted_loss = wl;
  return r;
}

/// Records wl and reports whether the early-stopping patience ran out.
inline bool track_improvement(SchedulerState& s, double wl, int patience) {
  if (wl < s.best_weighted_loss) {
    s.best_weighted_loss = wl;
    s.rounds_since_best = 0;
  } else {
    ++s.rounds_since_best;
  }
  return s.rounds_since_best >= patience;
}

}  // namespace detail

inline RunResult run(Trainer& trainer, const BipartiteLangGraph& graph,
                     const LangMap<BenchmarkLoss>& benchmarks, const CorpusSizes& dev_sizes,
                     const SchedulerConfig& config) {
  RunResult res{init(config, graph, benchmarks), {}};
  auto& s = res.state;
  const auto languages = detail::all_languages(graph);
  const int fallback_round = config.fallback_round();

  {
    const auto report = detail::evaluate(trainer, config, languages, 0);
    s = observe_initial(s, report, graph, benchmarks, config);
    const double wl = weighted_dev_loss(report, dev_sizes);
    detail::track_improvement(s, wl, config.patience);
    res.trace.push_back(detail::make_record(s, true, wl, {}, {}));
  }

  while (s.step < config.max_steps) {
    const auto n = static_cast<int>(std::min<std::int64_t>(config.eval_interval, config.max_steps - s.step));
    detail::train(trainer, s.weights, n, s.step);
    const auto report = detail::evaluate(trainer, config, languages, s.step + n);

    auto outcome = on_evaluation(s, report, graph, benchmarks, config);
    s = std::move(outcome.state);
    const double wl = weighted_dev_loss(report, dev_sizes);
    bool converged = detail::track_improvement(s, wl, config.patience);
    const bool out_of_budget = s.step >= config.max_steps;

    std::vector<std::string> forced;
    if (!s.candidate.empty() && (s.eval_round >= fallback_round || converged || out_of_budget)) {
      forced.assign(s.candidate.begin(), s.candidate.end());
      s = force_promote_remaining(s);
      // Training continues on the full set with a fresh patience window.
      if (converged && !out_of_budget) {
        s.rounds_since_best = 0;
        converged = false;
      }
    }
    res.trace.push_back(detail::make_record(s, false, wl, std::move(outcome.promotions), std::move(forced)));
    if (converged) break;
  }
  return res;
}

/// Baseline: a fixed distribution over every language, same evaluation
/// cadence and stopping rule. Records carry c but no ĉ.
inline RunResult run_static(Trainer& trainer, const SamplingWeights& weights,
                            const BipartiteLangGraph& graph,
                            const LangMap<BenchmarkLoss>& benchmarks, const CorpusSizes& dev_sizes,
                            const SchedulerConfig& config) {
  config.validate();
  const auto languages = detail::all_languages(graph);
  if (weights.support() != languages) throw Error("static weights must cover every language");
  for (const auto& lang : languages)
    if (!benchmarks.contains(lang)) throw Error("no benchmark: " + lang);

  RunResult res;
  auto& s = res.state;
  s.selected = languages;
  s.weights = weights;

  auto observe = [&](std::int64_t step) {
    const auto report = detail::evaluate(trainer, config, languages, step);
    s.step = step;
    for (const auto& lang : languages) {
      auto it = report.dev_loss.find(lang);
      if (it == report.dev_loss.end()) throw Error("report missing language: " + lang);
      s.competence.loss[lang] = it->second;
      s.competence.c[lang] = self_competence(it->second, benchmarks.at(lang));
    }
    return weighted_dev_loss(report, dev_sizes);
  };

  double wl = observe(0);
  detail::track_improvement(s, wl, config.patience);
  res.trace.push_back(detail::make_record(s, true, wl, {}, {}));
  while (s.step < config.max_steps) {
    const auto n = static_cast<int>(std::min<std::int64_t>(config.eval_interval, config.max_steps - s.step));
    detail::train(trainer, s.weights, n, s.step);
    wl = observe(s.step + n);
    ++s.eval_round;
    const bool converged = detail::track_improvement(s, wl, config.patience);
    res.trace.push_back(detail::make_record(s, false, wl, {}, {}));
    if (converged) break;
  }
  return res;
}

}  // namespace cclm
