#pragma once

// Likelihood Score, Self-evaluated Competence and the two HRLs-evaluated
// Competence estimators. Losses are base-2 cross-entropies; a trainer that
// reports natural-log losses must divide them by ln 2 first.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "cclm/error.hpp"
#include "cclm/kv_format.hpp"
#include "cclm/lang_graph.hpp"

namespace cclm {

enum class Direction { XxxToEng, EngToXxx };

inline std::string_view to_string(Direction d) {
  return d == Direction::XxxToEng ? "xxx-eng" : "eng-xxx";
}

inline Direction parse_direction(std::string_view s) {
  if (s == "xxx-eng") return Direction::XxxToEng;
  if (s == "eng-xxx") return Direction::EngToXxx;
  throw Error("unknown direction '" + std::string(s) + "'");
}

/// Dev loss of the converged single-pair model for a language.
struct BenchmarkLoss {
  std::string language;
  double loss = 0.0;

  BenchmarkLoss() = default;
  BenchmarkLoss(std::string lang, double l) : language(std::move(lang)), loss(l) {
    if (!std::isfinite(loss) || loss < 0.0) throw Error("invalid benchmark loss: " + language);
  }
};

inline void check_loss(double loss) {
  if (!std::isfinite(loss)) throw Error("invalid loss");
}

/// s = 2^-L
inline double likelihood_score(double loss) {
  check_loss(loss);
  return std::exp2(-loss);
}

/// c = s / s* = 2^(L* - L). Not clamped; exceeds 1 when L < L*.
inline double self_competence(double current_loss, const BenchmarkLoss& benchmark) {
  check_loss(current_loss);
  check_loss(benchmark.loss);
  return std::exp2(benchmark.loss - current_loss);
}

namespace detail {

inline void check_lrl(const BipartiteLangGraph& graph, std::string_view lrl) {
  if (!graph.is_lrl(lrl)) throw Error("unknown LRL: " + std::string(lrl));
  if (graph.hrls().empty()) throw Error("graph has no HRLs");
}

inline double hrl_competence(const LangMap<double>& c_hrls, const std::string& hrl) {
  auto it = c_hrls.find(hrl);
  if (it == c_hrls.end()) throw Error("no competence: " + hrl);
  return it->second;
}

inline std::vector<std::string> sorted_hrls(const BipartiteLangGraph& graph) {
  auto hrls = graph.hrls();
  std::ranges::sort(hrls);
  return hrls;
}

}  // namespace detail

/// HRL with the largest edge into `lrl`; equal weights resolve to the
/// lexicographically smaller code.
inline std::string most_similar_hrl(const BipartiteLangGraph& graph, std::string_view lrl) {
  detail::check_lrl(graph, lrl);
  std::string best;
  double best_w = -1.0;
  for (const auto& h : detail::sorted_hrls(graph)) {
    const double w = graph.weight(h, lrl);
    if (w > best_w) {
      best_w = w;
      best = h;
    }
  }
  return best;
}

/// ĉ_max(j) = c of argmax_i e_ij.
inline double hrl_eval_max(const BipartiteLangGraph& graph, std::string_view lrl,
                           const LangMap<double>& c_hrls) {
  for (const auto& h : graph.hrls()) detail::hrl_competence(c_hrls, h);
  return detail::hrl_competence(c_hrls, most_similar_hrl(graph, lrl));
}

/// ĉ_avg(j) = Σ_i (e_ij / Σ_k e_kj) · c_i
inline double hrl_eval_avg(const BipartiteLangGraph& graph, std::string_view lrl,
                           const LangMap<double>& c_hrls) {
  detail::check_lrl(graph, lrl);
  const auto hrls = detail::sorted_hrls(graph);
  double total = 0.0;
  for (const auto& h : hrls) total += graph.weight(h, lrl);
  if (!(total > 0.0)) throw Error("isolated LRL: " + std::string(lrl));
  double acc = 0.0;
  for (const auto& h : hrls) acc += graph.weight(h, lrl) / total * detail::hrl_competence(c_hrls, h);
  return acc;
}

enum class CompetenceVariant { Max, Avg };

inline std::string_view to_string(CompetenceVariant v) {
  return v == CompetenceVariant::Max ? "max" : "avg";
}

inline CompetenceVariant parse_variant(std::string_view s) {
  if (s == "max") return CompetenceVariant::Max;
  if (s == "avg") return CompetenceVariant::Avg;
  throw Error("unknown competence variant '" + std::string(s) + "'");
}

inline double hrl_eval(CompetenceVariant v, const BipartiteLangGraph& graph, std::string_view lrl,
                       const LangMap<double>& c_hrls) {
  return v == CompetenceVariant::Max ? hrl_eval_max(graph, lrl, c_hrls)
                                     : hrl_eval_avg(graph, lrl, c_hrls);
}

// Benchmark fixture:
//   loss = aze, xxx-eng, 7.87

class BenchmarkTable {
 public:
  void add(const std::string& lang, Direction dir, double loss) {
    auto& slot = dir == Direction::XxxToEng ? xxx_eng_ : eng_xxx_;
    if (!slot.emplace(lang, BenchmarkLoss(lang, loss)).second)
      throw Error("duplicate benchmark: " + lang + " " + std::string(to_string(dir)));
  }

  const LangMap<BenchmarkLoss>& direction(Direction dir) const {
    return dir == Direction::XxxToEng ? xxx_eng_ : eng_xxx_;
  }

  double loss(std::string_view lang, Direction dir) const {
    const auto& m = direction(dir);
    auto it = m.find(lang);
    if (it == m.end()) throw Error("no benchmark: " + std::string(lang));
    return it->second.loss;
  }

 private:
  LangMap<BenchmarkLoss> xxx_eng_;
  LangMap<BenchmarkLoss> eng_xxx_;
};

inline BenchmarkTable parse_benchmark_fixture(const kv::Document& doc) {
  BenchmarkTable table;
  for (const auto* r : doc.all("loss")) {
    const auto f = r->fields();
    if (f.size() != 3) throw Error(doc.where(*r) + ": loss needs 'language, direction, loss'");
    try {
      table.add(f[0], parse_direction(f[1]), kv::to_double(f[2], doc.where(*r)));
    } catch (const Error& e) {
      throw Error(doc.where(*r) + ": " + e.what());
    }
  }
  return table;
}

inline BenchmarkTable load_benchmark_fixture(const std::string& path) {
  return parse_benchmark_fixture(kv::parse_file(path));
}

}  // namespace cclm
