#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace thinkret {

using TokenId = std::int32_t;

/// Reserved ids. Specials occupy the lowest ids in exactly this order.
namespace special {
inline constexpr TokenId kPad = 0;
inline constexpr TokenId kUnk = 1;
inline constexpr TokenId kQuery = 2;
inline constexpr TokenId kThought = 3;
inline constexpr TokenId kEos = 4;
inline constexpr TokenId kEmb = 5;
inline constexpr TokenId kCount = 6;
}  // namespace special

/// Token strings of the reserved ids, indexed by id.
inline constexpr std::string_view kSpecialTokens[special::kCount] = {
    "<pad>", "<unk>", "<query>", "<thought>", "</s>", "<emb>"};

inline bool is_special(TokenId id) { return id >= 0 && id < special::kCount; }

/// Lowercases and splits on ASCII whitespace.
std::vector<std::string> tokenize(std::string_view text);

class Vocab {
 public:
  /// Vocabulary holding only the reserved tokens.
  Vocab();

  /// Frequency-built vocabulary. Tokens with count >= min_freq are kept,
  /// ordered by count descending then lexicographically.
  static Vocab build(std::span<const std::string> corpus, std::size_t min_freq = 1);

  /// One token per line, line number is the id.
  static Vocab load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::size_t size() const { return id_to_token_.size(); }
  std::optional<TokenId> find(std::string_view token) const;
  TokenId id_or_unk(std::string_view token) const;
  const std::string& token(TokenId id) const;

  std::vector<TokenId> encode(std::string_view text) const;
  /// Space-joined tokens; `<pad>` is skipped.
  std::string decode(std::span<const TokenId> ids) const;

  bool operator==(const Vocab& other) const { return id_to_token_ == other.id_to_token_; }

 private:
  void add(std::string token);

  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, TokenId> token_to_id_;
};

/// Half-open range [begin, end) of token positions.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return end == begin; }
  bool contains(std::size_t pos) const { return pos >= begin && pos < end; }
  bool operator==(const Span&) const = default;
};

struct TokenSequence {
  std::vector<TokenId> ids;
  Span query_span;
  Span thought_span;
  std::optional<std::size_t> emb_pos;

  std::size_t size() const { return ids.size(); }
  bool operator==(const TokenSequence&) const = default;
};

/// Length caps per segment. Queries over the cap are rejected; documents are
/// truncated by the caller (see render_document_sequence).
struct SequenceLimits {
  std::size_t max_query_tokens = 32;
  std::size_t max_thought_tokens = 192;
  std::size_t max_doc_tokens = 192;
};

/// `<query> q <thought> t </s>` with an optional trailing `<emb>`.
TokenSequence render_training_sequence(std::span<const TokenId> query_ids,
                                       std::span<const TokenId> thought_ids, bool with_emb,
                                       const SequenceLimits& limits = {});

/// `<query> q </s> <emb>`; the thought span is empty and sits at the `</s>`.
TokenSequence render_query_only_sequence(std::span<const TokenId> query_ids,
                                         const SequenceLimits& limits = {});

/// Generation prefix `<query> q <thought>`.
std::vector<TokenId> render_generation_prefix(std::span<const TokenId> query_ids,
                                              const SequenceLimits& limits = {});

/// `d </s> <emb>`. Documents longer than the cap are cut to their prefix and
/// `truncated` (when given) is set.
TokenSequence render_document_sequence(std::span<const TokenId> doc_ids,
                                       const SequenceLimits& limits = {},
                                       bool* truncated = nullptr);

struct PromptExample {
  std::string query;
  std::string response;
};

struct PromptTemplate {
  std::string system;
  std::string instruction;
  std::size_t m = 3;

  static PromptTemplate standard();
};

struct RenderedPrompt {
  std::string system;
  std::string user;
};

/// Task block, then exactly template.m Query/Response pairs, then the target
/// query with an open Response slot.
RenderedPrompt render_prompt(const PromptTemplate& tmpl, std::span<const PromptExample> examples,
                             std::string_view query);

/// Collapses whitespace runs to single spaces and trims.
std::string normalize_whitespace(std::string_view text);

}  // namespace thinkret
