#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thinkret/bm25.hpp"
#include "thinkret/model.hpp"
#include "thinkret/records.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

/// Dense text encoder used by embedding-kind committee members.
class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;
  virtual std::vector<double> embed(std::string_view text) const = 0;
};

/// Bag-of-words embedder: each token maps to a fixed pseudo-random Gaussian
/// vector seeded by (seed, token); a text is the sum over its tokens.
class HashedEmbedder : public TextEmbedder {
 public:
  HashedEmbedder(std::size_t dim, std::uint64_t seed);
  std::vector<double> embed(std::string_view text) const override;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

/// Embeds text as a document sequence with a trained checkpoint.
class ModelEmbedder : public TextEmbedder {
 public:
  ModelEmbedder(ModelParams params, Vocab vocab, SequenceLimits limits = {});
  std::vector<double> embed(std::string_view text) const override;

 private:
  ModelParams params_;
  Vocab vocab_;
  SequenceLimits limits_;
};

enum class ScorerKind { kLexicalBm25, kEmbeddingCosine };

struct EmbedderSpec {
  enum class Kind { kHashed, kCheckpoint };
  Kind kind = Kind::kHashed;
  std::size_t dim = 64;
  std::uint64_t seed = 0;
  std::string checkpoint;
  std::string vocab;
};

struct CommitteeMember {
  std::string name;
  ScorerKind kind = ScorerKind::kLexicalBm25;
  Bm25Params bm25;
  EmbedderSpec embedder;

  void validate() const;
};

/// A committee member bound to corpus statistics or an embedder.
class Scorer {
 public:
  /// BM25 member over the corpus's term statistics.
  Scorer(std::string name, const Corpus& corpus, Bm25Params params);
  /// Cosine member over the given embedder.
  Scorer(std::string name, std::shared_ptr<const TextEmbedder> embedder);

  static Scorer from_member(const CommitteeMember& member, const Corpus& corpus);

  const std::string& name() const { return name_; }
  ScorerKind kind() const { return kind_; }
  /// sigma(thought, doc). Throws on an empty document.
  double score(std::string_view thought, std::string_view doc) const;
  const TextEmbedder* embedder() const { return embedder_.get(); }

 private:
  std::string name_;
  ScorerKind kind_;
  std::shared_ptr<const Bm25> bm25_;
  std::shared_ptr<const TextEmbedder> embedder_;
};

double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace thinkret
