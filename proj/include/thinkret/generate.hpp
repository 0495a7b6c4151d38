#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thinkret/model.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

struct SamplingConfig {
  /// Argmax decoding; only valid with k = 1.
  bool greedy = false;
  double temperature = 1.0;
  /// Restricts sampling to the k most likely tokens; 0 keeps all.
  std::size_t top_k = 0;
};

/// Decodes k thoughts from `<query> q <thought>`, each stopping at `</s>` or
/// after max_tokens. Sample i draws from a sub-seed of (seed, i). Returned
/// thoughts exclude the `</s>`. Only content tokens and `</s>` can be emitted.
std::vector<std::vector<TokenId>> generate_thoughts(const ModelParams& params,
                                                    std::span<const TokenId> query_ids,
                                                    std::size_t k, std::size_t max_tokens,
                                                    const SamplingConfig& sampling,
                                                    std::uint64_t seed,
                                                    const SequenceLimits& limits = {});

}  // namespace thinkret
