#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thinkret/kernels.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

struct ModelConfig {
  std::size_t vocab_size = 0;
  std::size_t d_model = 32;
  std::size_t n_layers = 2;
  std::size_t n_heads = 4;
  std::size_t d_ff = 64;
  std::size_t max_seq_len = 64;
  std::uint64_t seed = 1;
  bool tie_embeddings = false;
  /// Std-dev of the zero-mean normal used for weight matrices and
  /// embeddings. Layer-norm gains start at 1, biases at 0.
  double init_std = 0.02;

  /// Throws InvalidArgument on a shape violation.
  void validate() const;
  std::size_t head_dim() const { return d_model / n_heads; }
  bool operator==(const ModelConfig&) const = default;
};

struct TensorInfo {
  std::string name;
  std::size_t offset = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t size() const { return rows * cols; }
};

struct LayerOffsets {
  std::size_t ln1_g, ln1_b, w_qkv, b_qkv, w_o, b_o;
  std::size_t ln2_g, ln2_b, w_ff1, b_ff1, w_ff2, b_ff2;
};

/// Offsets of every tensor inside the flat parameter vector, in declared
/// (checkpoint) order.
struct ParamLayout {
  std::size_t tok_emb = 0;
  std::size_t pos_emb = 0;
  std::vector<LayerOffsets> layers;
  std::size_t lnf_g = 0;
  std::size_t lnf_b = 0;
  /// Equals tok_emb when embeddings are tied.
  std::size_t w_out = 0;
  std::size_t total = 0;
  std::vector<TensorInfo> tensors;

  static ParamLayout make(const ModelConfig& cfg);
};

/// Flat parameter vector plus its layout. Gradients and optimizer moments use
/// the same type.
class ModelParams {
 public:
  ModelParams() = default;
  /// All-zero parameters.
  explicit ModelParams(const ModelConfig& cfg);

  const ModelConfig& config() const { return config_; }
  const ParamLayout& layout() const { return layout_; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  std::span<double> slice(std::size_t offset, std::size_t n) { return {values_.data() + offset, n}; }
  std::span<const double> slice(std::size_t offset, std::size_t n) const {
    return {values_.data() + offset, n};
  }
  std::span<double> tensor(const std::string& name);
  std::span<const double> output_projection() const {
    return slice(layout_.w_out, config_.vocab_size * config_.d_model);
  }

  void set_zero();
  void add(const ModelParams& other);
  bool all_finite() const;
  bool operator==(const ModelParams& other) const;

 private:
  ModelConfig config_;
  ParamLayout layout_;
  std::vector<double> values_;
};

using Gradient = ModelParams;

/// Deterministic initialisation from `seed`.
ModelParams init_params(const ModelConfig& cfg, std::uint64_t seed);

struct LayerCache {
  std::vector<double> x_in;
  std::vector<double> ln1_xhat, ln1_rstd, a;
  std::vector<double> qkv;
  std::vector<double> probs;  // heads x T x T, row t filled for u <= t
  std::vector<double> attn;
  std::vector<double> x_mid;
  std::vector<double> ln2_xhat, ln2_rstd, c;
  std::vector<double> ff_pre, ff_act;
};

/// Activations of one sequence kept for the backward pass.
struct ForwardCache {
  std::vector<TokenId> ids;
  std::vector<LayerCache> layers;
  std::vector<double> x_final;
  std::vector<double> lnf_xhat, lnf_rstd;
  Matrix hidden;  // T x d_model, final layer-norm output

  std::size_t length() const { return ids.size(); }
};

/// Causal forward pass. Throws on out-of-range ids or over-long input.
ForwardCache forward(const ModelParams& params, std::span<const TokenId> ids);

/// Final hidden states (T x d_model) of one sequence.
Matrix encode(const ModelParams& params, std::span<const TokenId> ids);

/// Encodes every sequence. Rows are independent so the parallel path is
/// bitwise identical to the serial one.
std::vector<Matrix> encode_batch(const ModelParams& params, std::span<const TokenSequence> seqs,
                                 ExecPolicy policy = ExecPolicy::kParallel);

/// Accumulates parameter gradients for one sequence given dL/dhidden.
void backward(const ModelParams& params, const ForwardCache& cache, const Matrix& dhidden,
              Gradient& grad);

/// Logits at `position` computed from the final hidden state.
std::vector<double> logits_at(const ModelParams& params, const Matrix& hidden,
                              std::size_t position);

struct EmbeddingVector {
  std::vector<double> values;
  bool normalized = false;
};

/// Hidden state at the sequence's `<emb>` position, L2-normalised iff asked.
EmbeddingVector extract_embedding(const Matrix& hidden, const TokenSequence& seq, bool normalize);

/// Per-position attention mass from the `<emb>` row at `layer`, summed over
/// heads. Positions after `<emb>` are zero.
std::vector<double> attention_attribution(const ModelParams& params, const TokenSequence& seq,
                                          std::size_t layer);

}  // namespace thinkret
