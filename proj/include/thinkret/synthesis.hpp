#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "thinkret/committee.hpp"
#include "thinkret/generator.hpp"
#include "thinkret/records.hpp"
#include "thinkret/textproc.hpp"

namespace thinkret {

/// Draws m pairs without replacement, never one belonging to the target's
/// query. Deterministic in seed.
std::vector<QDocPair> sample_examples(std::span<const QDocPair> pairs, const QDocPair& target,
                                      std::size_t m, std::uint64_t seed);

/// Index of the highest score; ties go to the lowest index.
std::size_t select_per_member(std::span<const double> scores);

enum class TieBreak { kNone, kNormalizedScore, kLowestIndex };
std::string to_string(TieBreak t);

struct VoteRecord {
  std::vector<std::size_t> member_choices;
  std::size_t selected = 0;
  TieBreak tie_break = TieBreak::kNone;
};

/// Plurality vote over the members' choices. Ties go to the highest mean of
/// per-member min-max normalised scores, then to the lowest index.
/// member_scores[r][i] is member r's score of candidate i.
VoteRecord vote(std::span<const std::size_t> member_choices,
                const std::vector<std::vector<double>>& member_scores);

struct ThoughtTriplet {
  std::string query_id;
  std::string query;
  std::string thought;
  std::string doc_id;
  std::string doc;
  std::vector<std::string> hard_negatives;
};

std::string triplet_to_json(const ThoughtTriplet& t);
ThoughtTriplet triplet_from_json(const std::string& line);
std::vector<ThoughtTriplet> load_triplets(const std::filesystem::path& path);

struct SynthesisConfig {
  std::size_t k_candidates = 4;
  std::size_t m = 3;
  std::uint64_t seed = 0;
  std::size_t n_hard_negatives = 15;
  /// Embedding member that mines hard negatives; empty picks the first one.
  std::string mining_member;
  PromptTemplate prompt = PromptTemplate::standard();
  /// Pairs whose candidates are generated concurrently before in-order writing.
  std::size_t block_size = 16;

  void validate() const;
};

struct SynthesisStats {
  std::size_t pairs = 0;
  std::size_t resumed = 0;
  std::size_t written = 0;
  std::size_t skipped_generation = 0;
  std::size_t dropped_duplicate = 0;
};

/// Sample -> generate -> score -> select -> vote for every pair, in pair
/// order, appending triplets and vote records as JSON lines. A vote log that
/// already covers a prefix of the pairs is resumed after that prefix.
SynthesisStats build_dataset(const std::vector<QDocPair>& pairs, const Corpus& corpus,
                             const QrelSet& qrels, const GeneratorSpec& generator,
                             const std::vector<Scorer>& committee, const SynthesisConfig& cfg,
                             const std::filesystem::path& triplets_path,
                             const std::filesystem::path& votes_path,
                             const std::function<void(const std::string&)>& log = {});

/// Top-n docs for the query under the member's embedder, skipping the
/// query's judged-relevant docs; ties by doc id.
std::vector<std::string> mine_hard_negatives(const Scorer& member, const Corpus& corpus,
                                             const std::vector<std::vector<double>>& doc_vectors,
                                             const QDocPair& pair, const QrelSet& qrels,
                                             std::size_t n);

}  // namespace thinkret
