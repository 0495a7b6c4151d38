#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thinkret/committee.hpp"
#include "thinkret/generator.hpp"
#include "thinkret/model.hpp"
#include "thinkret/pipeline.hpp"
#include "thinkret/synthesis.hpp"
#include "thinkret/textproc.hpp"
#include "thinkret/trainer.hpp"

namespace thinkret {

/// Raw `key = value` entries. Later entries replace earlier ones.
using ConfigMap = std::map<std::string, std::string>;

/// Reads a flat config file: one `key = value` per line, `#` starts a comment.
ConfigMap read_config_file(const std::filesystem::path& path);

/// Applies a `key=value` override.
void apply_override(ConfigMap& map, const std::string& assignment);

struct Paths {
  std::string corpus;
  std::string train_queries;
  std::string train_qrels;
  std::string queries;
  std::string qrels;
  std::string key_table;
  std::string triplets;
  std::string votes;
  std::string vocab;
  std::string checkpoint;
  std::string best_checkpoint;
  std::string index;
  std::string runfile;
  std::string report;
  std::string attribution;
};

struct SearchConfig {
  RetrievalMode::Kind mode = RetrievalMode::Kind::kWithThought;
  std::size_t k = 4;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  SamplingConfig sampling;
};

struct RunConfig {
  std::filesystem::path base_dir;
  Paths paths;
  ModelConfig model;
  TrainConfig train;
  SequenceLimits limits;
  GeneratorSpec generator;
  std::vector<CommitteeMember> committee;
  SynthesisConfig synth;
  SearchConfig search;
  std::vector<std::string> metrics{"mrr@10", "recall@1000", "ndcg@10"};
  /// 0 uses every available core.
  std::size_t threads = 0;
  /// Empty selects the last layer.
  std::optional<std::size_t> attribute_layer;

  /// Path relative to the config file's directory unless absolute.
  std::filesystem::path resolve(const std::string& p) const;
  /// Resolved path of a required field; throws ConfigError naming the key.
  std::filesystem::path require(const std::string& key) const;
  /// Like require() and the file must also exist.
  std::filesystem::path require_existing(const std::string& key) const;

  RetrievalMode retrieval_mode() const;
  EmbedOptions embed_options() const;
};

/// Parses and validates every field; unknown keys and invariant violations
/// throw ConfigError naming the key.
RunConfig parse_config(const ConfigMap& map, const std::filesystem::path& base_dir = ".");

/// Every recognised key with its default, in `key = value` form.
std::string describe_config_keys();

}  // namespace thinkret
