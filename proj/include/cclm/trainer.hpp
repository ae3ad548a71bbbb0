#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "cclm/error.hpp"
#include "cclm/sampling.hpp"

namespace cclm {

/// Per-language dev losses observed at one evaluation point.
struct TrainerReport {
  std::int64_t step = 0;
  LangMap<double> dev_loss;
};

/// What the scheduler needs from a model trainer. Implementations report
/// base-2 losses and throw cclm::Error (or anything derived from
/// std::exception) on failure.
class Trainer {
 public:
  virtual ~Trainer() = default;

  /// Consume `steps` training steps, batches allocated across languages by
  /// `weights`. steps must be positive.
  virtual void train_steps(const SamplingWeights& weights, int steps) = 0;

  /// Current dev loss for each requested language, estimated from
  /// `sample_size` dev samples per language.
  virtual TrainerReport eval_dev(int sample_size, const std::set<std::string>& languages) = 0;
};

}  // namespace cclm
