#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace thinkret {

struct Bm25Params {
  double k1 = 0.9;
  double b = 0.4;
  void validate() const;
};

/// Okapi BM25 with corpus statistics (document frequencies, average length)
/// frozen at construction. idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5)).
class Bm25 {
 public:
  Bm25(const std::vector<std::vector<std::string>>& corpus_terms, Bm25Params params);

  double idf(const std::string& term) const;
  /// Sum over query terms (repeats count) of idf * tf (k1 + 1) /
  /// (tf + k1 (1 - b + b |d| / avgdl)).
  double score(std::span<const std::string> query_terms,
               std::span<const std::string> doc_terms) const;

  std::size_t num_docs() const { return n_docs_; }
  double avg_doc_len() const { return avgdl_; }

 private:
  Bm25Params params_;
  std::size_t n_docs_ = 0;
  double avgdl_ = 0.0;
  std::unordered_map<std::string, std::size_t> df_;
};

}  // namespace thinkret
