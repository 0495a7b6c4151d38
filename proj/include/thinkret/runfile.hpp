#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace thinkret {

struct RunEntry {
  std::string doc_id;
  std::size_t rank = 0;
  double score = 0.0;
};

struct QueryRun {
  std::string query_id;
  std::string tag;
  std::vector<RunEntry> entries;  // rank order, ranks 1..n
};

/// Ranked retrieval output in the six-column TREC layout:
///   qid Q0 docid rank score tag
/// with ranks from 1 and scores printed with 6 decimals.
struct RunFile {
  std::vector<QueryRun> queries;

  std::string to_string() const;
  void save(const std::filesystem::path& path) const;
  /// Entries are re-sorted by rank; ranks, not scores, decide order.
  static RunFile parse(const std::string& text);
  static RunFile load(const std::filesystem::path& path);
  const QueryRun* find(const std::string& qid) const;
};

std::string format_score(double score);

}  // namespace thinkret
