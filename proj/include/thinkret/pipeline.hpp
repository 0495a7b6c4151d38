#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thinkret/generate.hpp"
#include "thinkret/index.hpp"
#include "thinkret/model.hpp"
#include "thinkret/records.hpp"
#include "thinkret/runfile.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

struct RetrievalMode {
  enum class Kind { kWithThought, kQueryOnly };
  Kind kind = Kind::kWithThought;
  std::size_t k = 4;
  SamplingConfig sampling;
  std::size_t max_thought_tokens = 256;

  static RetrievalMode query_only() { return {Kind::kQueryOnly, 1, {}, 0}; }
  static RetrievalMode with_thought(std::size_t k, SamplingConfig sampling = {},
                                    std::size_t max_tokens = 256) {
    return {Kind::kWithThought, k, sampling, max_tokens};
  }
  void validate() const;
  std::string tag() const;
};

struct EmbedOptions {
  /// L2-normalise embeddings (cosine mode); pooled vectors are re-normalised.
  bool normalize = false;
  SequenceLimits limits;
  /// Base seed; each query samples from a sub-seed of (seed, query id).
  std::uint64_t seed = 0;
};

struct QueryEmbedding {
  EmbeddingVector vector;
  /// Thought-augmented mode had no usable thought and fell back to the
  /// query-only embedding.
  bool fell_back = false;
  std::vector<std::vector<TokenId>> thoughts;
};

/// Arithmetic mean of the vectors, then optional re-normalisation. A single
/// vector is returned unchanged.
EmbeddingVector mean_pool(const std::vector<EmbeddingVector>& vectors, bool renormalize);

/// Embeds `<query> q <thought> t </s> <emb>` for every thought and mean-pools.
EmbeddingVector embed_with_thoughts(const ModelParams& params, std::span<const TokenId> query_ids,
                                    const std::vector<std::vector<TokenId>>& thoughts,
                                    const EmbedOptions& opts);

/// Query-only or thought-augmented query embedding. A thought counts as
/// failed when it is empty or cannot be rendered; if all k fail the
/// query-only embedding is returned with fell_back set.
QueryEmbedding embed_query(const ModelParams& params, const Vocab& vocab, const Query& query,
                           const RetrievalMode& mode, const EmbedOptions& opts);

/// Renders every doc as `d </s> <emb>` (docs over the cap are truncated and
/// reported in `warnings`) and indexes the embeddings.
EmbeddingStore embed_corpus(const ModelParams& params, const Vocab& vocab, const Corpus& corpus,
                            const EmbedOptions& opts, ExecPolicy policy = ExecPolicy::kParallel,
                            std::vector<std::string>* warnings = nullptr);

/// Top-N retrieval for each query, output ordered by query id. `details`
/// receives each query's embedding and thoughts in the same order.
RunFile run_retrieval(const ModelParams& params, const Vocab& vocab, const EmbeddingStore& store,
                      const std::vector<Query>& queries, const RetrievalMode& mode, std::size_t n,
                      const EmbedOptions& opts, ExecPolicy policy = ExecPolicy::kParallel,
                      std::vector<QueryEmbedding>* details = nullptr);

}  // namespace thinkret
