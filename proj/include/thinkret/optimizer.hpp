#pragma once

#include <cstdint>

#include "thinkret/losses.hpp"
#include "thinkret/model.hpp"

namespace thinkret {

enum class OptimizerKind { kAdam, kSgd };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::kAdam;
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  /// Global L2 norm cap on the gradient; 0 disables clipping.
  double grad_clip = 0.0;

  void validate() const;
};

struct OptimizerState {
  Gradient m;
  Gradient v;
  std::uint64_t step = 0;

  explicit OptimizerState(const ModelConfig& cfg) : m(cfg), v(cfg) {}
};

void apply_update(ModelParams& params, const Gradient& grad, OptimizerState& state,
                  const OptimizerConfig& cfg);

/// One optimisation step on `batch`. A non-finite loss or gradient throws
/// NumericError and leaves params and state untouched.
LossBreakdown train_step(ModelParams& params, const TrainingBatch& batch, OptimizerState& state,
                         const OptimizerConfig& opt, const LossConfig& loss,
                         ExecPolicy policy = ExecPolicy::kParallel);

}  // namespace thinkret
