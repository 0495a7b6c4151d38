#pragma once

#include <cstddef>
#include <vector>

#include "thinkret/kernels.hpp"
#include "thinkret/model.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

enum class Similarity { kDot, kCosine };

struct LossConfig {
  /// Weight of the generation loss; the contrastive loss gets 1 - lambda.
  double lambda = 0.5;
  /// Contrastive temperature dividing every similarity.
  double tau = 0.05;
  Similarity similarity = Similarity::kDot;
  /// Adds every item's hard negatives to every item's candidate list.
  bool batch_hard_negatives = false;

  void validate() const;
  bool normalize() const { return similarity == Similarity::kCosine; }
};

/// Index-aligned training inputs. Item i contributes a thought-augmented
/// sequence, a query-only sequence, its positive document and its own hard
/// negatives; all of them end in `<emb>`.
struct TrainingBatch {
  std::vector<TokenSequence> thought;
  std::vector<TokenSequence> query;
  std::vector<TokenSequence> positive;
  std::vector<std::vector<TokenSequence>> hard_negatives;

  std::size_t size() const { return thought.size(); }
  void validate() const;
};

struct LossBreakdown {
  double gen = 0.0;
  double ctr = 0.0;
  double joint = 0.0;
};

/// Mean over items of the summed next-token NLL over the thought tokens and
/// the closing `</s>`. Query tokens carry no loss.
double loss_gen(const ModelParams& params, const TrainingBatch& batch,
                ExecPolicy policy = ExecPolicy::kParallel);

/// Mean over items of InfoNCE(query-only) + InfoNCE(thought-augmented), both
/// scored against the same candidate list: every in-batch positive plus the
/// item's hard negatives.
double loss_ctr(const ModelParams& params, const TrainingBatch& batch, const LossConfig& cfg,
                ExecPolicy policy = ExecPolicy::kParallel);

/// lambda * gen + (1 - lambda) * ctr from a single encode of each sequence;
/// the thought-augmented encoding feeds both heads.
LossBreakdown loss_joint(const ModelParams& params, const TrainingBatch& batch,
                         const LossConfig& cfg, ExecPolicy policy = ExecPolicy::kParallel);

struct GradResult {
  LossBreakdown loss;
  Gradient grad;
};

/// Joint loss and its exact gradient. The parallel path accumulates into a
/// fixed number of chunk buffers reduced in order, so its result does not
/// depend on the thread count.
GradResult compute_grad(const ModelParams& params, const TrainingBatch& batch,
                        const LossConfig& cfg, ExecPolicy policy = ExecPolicy::kParallel);

/// Candidate document indices of item i into [positives..., flattened hard
/// negatives...]. The item's own positive is always first.
std::vector<std::vector<std::size_t>> candidate_lists(const TrainingBatch& batch,
                                                      const LossConfig& cfg);

}  // namespace thinkret
