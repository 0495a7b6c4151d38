#pragma once

#include <filesystem>
#include <optional>

#include "thinkret/model.hpp"
#include "thinkret/optimizer.hpp"

namespace thinkret {

// Layout, all little-endian:
//   "TRCKPT01" | u32 version | u64 vocab_size, d_model, n_layers, n_heads,
//   d_ff, max_seq_len, seed | u8 tie_embeddings | f64 init_std |
//   u64 step | u8 has_optimizer | u32 tensor_count |
//   per tensor: str name, u64 rows, u64 cols, rows*cols f32 |
//   when has_optimizer: every tensor's Adam m values, then every v, as f32.
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  ModelParams params;
  std::uint64_t step = 0;
  std::optional<OptimizerState> optimizer;
};

void save_checkpoint(const std::filesystem::path& path, const ModelParams& params,
                     std::uint64_t step, const OptimizerState* optimizer = nullptr);

Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace thinkret
