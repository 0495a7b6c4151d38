#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace thinkret {

struct Document {
  std::string id;
  std::string text;
};

/// A query. `key` is the latent expansion key used by the synthetic
/// generator; empty when unknown.
struct Query {
  std::string id;
  std::string text;
  std::string key;
};

struct QDocPair {
  std::string query_id;
  std::string query;
  std::string key;
  std::string doc_id;
  std::string doc;
};

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Document> docs);

  const std::vector<Document>& docs() const { return docs_; }
  std::size_t size() const { return docs_.size(); }
  const Document* find(const std::string& id) const;
  const Document& at(const std::string& id) const;

 private:
  std::vector<Document> docs_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// JSON lines with fields doc_id, text.
Corpus load_corpus(const std::filesystem::path& path);
/// JSON lines with fields query_id, text and optional key.
std::vector<Query> load_queries(const std::filesystem::path& path);

/// Graded judgments keyed by (query_id, doc_id).
class QrelSet {
 public:
  void add(const std::string& qid, const std::string& did, int grade);
  std::optional<int> grade(const std::string& qid, const std::string& did) const;
  /// Judged documents of a query, empty when the query is unjudged.
  const std::map<std::string, int>& judged(const std::string& qid) const;
  bool has_query(const std::string& qid) const { return by_query_.contains(qid); }
  std::vector<std::string> query_ids() const;
  std::size_t size() const;

 private:
  std::map<std::string, std::map<std::string, int>> by_query_;
};

/// Lines "qid 0 docid grade".
QrelSet load_qrels(const std::filesystem::path& path);
QrelSet parse_qrels(const std::string& text);

/// One pair per judged-relevant (grade >= 1) (query, doc), ordered by
/// query_id then doc_id. Queries or docs missing from the inputs throw.
std::vector<QDocPair> make_pairs(const std::vector<Query>& queries, const QrelSet& qrels,
                                 const Corpus& corpus);

}  // namespace thinkret
