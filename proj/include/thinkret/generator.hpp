#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thinkret/records.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

/// Latent key -> expansion words.
using KeyTable = std::map<std::string, std::vector<std::string>>;

/// Lines "key<TAB>word word ...".
KeyTable load_key_table(const std::filesystem::path& path);

struct GeneratorSpec {
  enum class Kind { kRemote, kSynthetic };
  Kind kind = Kind::kSynthetic;

  // remote: OpenAI-compatible chat completions
  std::string endpoint;
  std::string model;
  std::string api_key_env = "THINKRET_API_KEY";
  double temperature = 0.7;
  double timeout_seconds = 30.0;
  std::size_t retries = 3;
  double backoff_seconds = 0.5;

  std::size_t max_tokens = 256;

  // synthetic: expands the query's latent key with seeded lexical noise
  KeyTable keys;
  std::uint64_t noise_seed = 0;
  /// Chance that a candidate expands a different, wrong key.
  double p_wrong_key = 0.3;
  /// Per-word chance of being dropped / swapped for a random noise word.
  double p_drop = 0.15;
  double p_noise = 0.15;

  void validate() const;
};

struct Candidate {
  std::optional<std::string> text;
  std::string error;
  bool ok() const { return text.has_value(); }
};

/// One candidate per prompt. Remote: one chat-completion request each,
/// retried with exponential backoff, reply trimmed. Synthetic: deterministic
/// in (noise_seed, query id, doc id, candidate index); the prompts are unused.
std::vector<Candidate> generate_candidates(const QDocPair& target,
                                           const std::vector<RenderedPrompt>& prompts,
                                           const GeneratorSpec& spec);

/// Synthetic expansion of a key, one candidate. Exposed for tests.
std::string synthetic_thought(const GeneratorSpec& spec, const std::string& key,
                              std::uint64_t seed);

/// Chat-completion request body for one prompt.
std::string chat_request_body(const GeneratorSpec& spec, const RenderedPrompt& prompt);

}  // namespace thinkret
