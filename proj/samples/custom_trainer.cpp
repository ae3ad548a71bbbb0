// Drives the scheduler with a hand-written Trainer instead of the simulator.
// Any training backend plugs in the same way: implement train_steps and
// eval_dev, hand the scheduler a graph and the benchmark losses.

#include <cmath>
#include <iostream>

#include "cclm/cclm.hpp"

namespace {

// Each language's loss falls with its own share of training, and LRLs borrow
// a fixed fraction of their best HRL's progress.
class ToyTrainer : public cclm::Trainer {
 public:
  explicit ToyTrainer(const cclm::BipartiteLangGraph& g) : graph_(g) {
    for (const auto& l : g.languages()) seen_[l] = 0.0;
  }

  void train_steps(const cclm::SamplingWeights& w, int steps) override {
    for (const auto& [lang, share] : w.values()) seen_[lang] += share * steps;
  }

  cclm::TrainerReport eval_dev(int, const std::set<std::string>& langs) override {
    cclm::TrainerReport r;
    for (const auto& l : langs) {
      double n = seen_.at(l);
      if (graph_.is_lrl(l)) n += 0.5 * seen_.at(cclm::most_similar_hrl(graph_, l));
      r.dev_loss[l] = 3.0 + 6.0 * std::exp(-n / 400.0);
    }
    return r;
  }

 private:
  cclm::BipartiteLangGraph graph_;
  cclm::LangMap<double> seen_;
};

}  // namespace

int main() {
  using namespace cclm;
  const BipartiteLangGraph graph({"deu", "spa"}, {"ltz", "ast"},
                                 {{{"deu", "ltz"}, 0.55}, {{"deu", "ast"}, 0.05},
                                  {{"spa", "ltz"}, 0.04}, {{"spa", "ast"}, 0.61}});
  LangMap<BenchmarkLoss> bench;
  CorpusSizes dev;
  for (const auto& l : graph.languages()) {
    bench.emplace(l, BenchmarkLoss(l, 3.0));
    dev[l] = graph.is_hrl(l) ? 3000 : 500;
  }

  SchedulerConfig cfg;
  cfg.threshold = 0.7;
  cfg.eval_interval = 50;
  cfg.max_steps = 3000;

  ToyTrainer trainer(graph);
  const auto result = run(trainer, graph, bench, dev, cfg);
  for (const auto& r : result.trace) {
    if (r.promoted.empty() && r.forced.empty()) continue;
    std::cout << "step " << r.step << ":";
    for (const auto& l : r.promoted) std::cout << ' ' << l;
    for (const auto& l : r.forced) std::cout << ' ' << l << "(fallback)";
    std::cout << '\n';
  }
  std::cout << "stopped at step " << result.state.step << ", weighted dev loss "
            << result.trace.back().weighted_loss << '\n';
  std::cout << trace_to_ndjson({result.trace.back()});
}
