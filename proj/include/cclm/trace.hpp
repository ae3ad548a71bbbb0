#pragma once

// Trace serialization (one JSON object per evaluation round, fixed field
// order) and trace-only invariant checks.

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cclm/lang_graph.hpp"
#include "cclm/scheduler.hpp"

namespace cclm {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const LangMap<double>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

inline ordered_json to_json(const EvalRecord& r) {
  ordered_json j;
  j["round"] = r.round;
  j["step"] = r.step;
  j["initial"] = r.initial;
  j["selected"] = r.selected;
  j["candidate"] = r.candidate;
  j["loss"] = to_json(r.loss);
  j["c"] = to_json(r.c);
  j["c_hat"] = to_json(r.c_hat);
  j["promoted"] = r.promoted;
  j["forced"] = r.forced;
  j["fallback"] = r.fallback;
  j["weights"] = to_json(r.weights.values());
  j["weighted_loss"] = r.weighted_loss;
  return j;
}

inline std::string trace_to_ndjson(const ScheduleTrace& trace) {
  std::string out;
  for (const auto& r : trace) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

/// Every violated scheduler invariant, checked from the trace alone. Empty
/// means the trace is sound. `dynamic` = false checks a static-baseline trace
/// (everything selected from round 0, no promotions).
inline std::vector<std::string> validate_trace(const ScheduleTrace& trace,
                                               const BipartiteLangGraph& graph, double threshold,
                                               bool dynamic = true) {
  std::vector<std::string> bad;
  auto fail = [&](const EvalRecord& r, const std::string& what) {
    bad.push_back("round " + std::to_string(r.round) + " (step " + std::to_string(r.step) + "): " + what);
  };
  if (trace.empty()) return {"empty trace"};

  const auto langs = graph.languages();
  const std::set<std::string> all(langs.begin(), langs.end());
  std::set<std::string> prev_selected(graph.hrls().begin(), graph.hrls().end());
  std::set<std::string> prev_candidate(graph.lrls().begin(), graph.lrls().end());
  if (!dynamic) {
    prev_selected = all;
    prev_candidate.clear();
  }
  std::set<std::string> ever_promoted;

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& r = trace[i];
    if (i > 0 && r.step <= trace[i - 1].step) fail(r, "steps not strictly increasing");
    if ((i == 0) != r.initial) fail(r, "only the first record may be the initial observation");

    std::set<std::string> uni = r.selected;
    uni.insert(r.candidate.begin(), r.candidate.end());
    if (uni != all || uni.size() != r.selected.size() + r.candidate.size())
      fail(r, "selected/candidate is not a partition of the languages");
    for (const auto& h : graph.hrls())
      if (!r.selected.contains(h)) fail(r, "HRL " + h + " not selected");
    for (const auto& l : prev_selected)
      if (!r.selected.contains(l)) fail(r, "selected set shrank (" + l + ")");
    if (r.weights.support() != r.selected) fail(r, "weight support differs from selected set");
    double sum = 0.0;
    for (const auto& [_, w] : r.weights.values()) sum += w;
    if (std::abs(sum - 1.0) > SamplingWeights::kSumTolerance) fail(r, "weights not normalized");
    for (const auto& l : all)
      if (!r.loss.contains(l) || !r.c.contains(l)) fail(r, "missing observation for " + l);

    // Soundness: promoted = candidates with ĉ >= t; forced = the remainder
    // when the fallback fired.
    std::vector<std::string> expect_promoted;
    if (!r.initial) {
      for (const auto& l : prev_candidate) {
        auto it = r.c_hat.find(l);
        if (it == r.c_hat.end()) {
          fail(r, "no c_hat for candidate " + l);
          continue;
        }
        if (it->second >= threshold) expect_promoted.push_back(l);
      }
    }
    if (r.promoted != expect_promoted) fail(r, "threshold promotions do not match c_hat");
    std::set<std::string> moved(r.promoted.begin(), r.promoted.end());
    if (r.fallback) {
      std::vector<std::string> expect_forced;
      for (const auto& l : prev_candidate)
        if (!moved.contains(l)) expect_forced.push_back(l);
      if (r.forced != expect_forced || r.forced.empty()) fail(r, "fallback did not force exactly the remaining candidates");
    } else if (!r.forced.empty()) {
      fail(r, "forced promotions without fallback");
    }
    moved.insert(r.forced.begin(), r.forced.end());
    std::set<std::string> expect_selected = prev_selected;
    expect_selected.insert(moved.begin(), moved.end());
    if (r.selected != expect_selected) fail(r, "selected set changed other than by promotion");
    for (const auto& l : moved)
      if (!ever_promoted.insert(l).second) fail(r, l + " promoted twice");

    prev_selected = r.selected;
    prev_candidate = r.candidate;
  }
  if (!trace.back().candidate.empty()) fail(trace.back(), "run ended with candidates remaining");
  return bad;
}

}  // namespace cclm
