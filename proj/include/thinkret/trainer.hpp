#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thinkret/losses.hpp"
#include "thinkret/model.hpp"
#include "thinkret/optimizer.hpp"
#include "thinkret/records.hpp"
#include "thinkret/synthesis.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

struct TrainConfig {
  LossConfig loss;
  OptimizerConfig optimizer;
  std::size_t batch_size = 64;
  /// Hard negatives used per item, taken from the front of each triplet's list.
  std::size_t n_hard_negatives = 15;
  /// Generation budget at retrieval time.
  std::size_t max_thought_tokens = 256;
  std::size_t k_thoughts = 4;
  std::size_t epochs = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Token ids of one triplet, ready to be rendered into a batch.
struct TrainExample {
  std::vector<TokenId> query;
  std::vector<TokenId> thought;
  std::vector<TokenId> positive;
  std::vector<std::vector<TokenId>> hard_negatives;
};

/// Tokenises triplets; hard-negative ids are resolved against the corpus.
/// Thoughts over the cap are cut to their prefix.
std::vector<TrainExample> prepare_examples(const std::vector<ThoughtTriplet>& triplets,
                                           const Corpus& corpus, const Vocab& vocab,
                                           const SequenceLimits& limits,
                                           std::size_t n_hard_negatives);

TrainingBatch make_batch(const std::vector<TrainExample>& examples,
                         std::span<const std::size_t> items, const SequenceLimits& limits);

/// Visiting order of the examples in an epoch; a pure function of (seed, epoch).
std::vector<std::size_t> epoch_order(std::size_t n, std::uint64_t seed, std::size_t epoch);

std::size_t steps_per_epoch(std::size_t n_examples, std::size_t batch_size);

/// Vocabulary over the corpus plus every triplet's query and thought.
Vocab build_training_vocab(const Corpus& corpus, const std::vector<ThoughtTriplet>& triplets);

struct StepLog {
  std::uint64_t step = 0;
  std::size_t epoch = 0;
  LossBreakdown loss;
};

struct EpochLog {
  std::size_t epoch = 0;
  double mean_joint = 0.0;
};

struct TrainHooks {
  std::function<void(const StepLog&)> on_step;
  /// Called after each completed epoch with the parameters at its end.
  std::function<void(const EpochLog&, const ModelParams&, const OptimizerState&)> on_epoch;
};

/// Runs the remaining steps of cfg.epochs epochs starting at state.step.
/// Batches follow epoch_order, so a resumed run visits the same batches as an
/// uninterrupted one. NumericError propagates with params at the last good step.
void train(ModelParams& params, OptimizerState& state, const std::vector<TrainExample>& examples,
           const TrainConfig& cfg, const SequenceLimits& limits, const TrainHooks& hooks = {},
           ExecPolicy policy = ExecPolicy::kParallel);

}  // namespace thinkret
