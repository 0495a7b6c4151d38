#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "thinkret/records.hpp"
#include "thinkret/runfile.hpp"

namespace thinkret {

struct MetricReport {
  std::string metric;  // e.g. "mrr@10"
  std::map<std::string, double> per_query;
  double mean = 0.0;
  /// Run queries absent from the qrels.
  std::size_t missing_judgments = 0;
  /// Judged queries without any relevant document (excluded for MRR/Recall).
  std::size_t no_relevant = 0;

  std::size_t count() const { return per_query.size(); }
};

/// 1/rank of the first document with grade >= 1 within the top k.
MetricReport mrr_at_k(const RunFile& run, const QrelSet& qrels, std::size_t k);
/// Relevant documents in the top k over all judged-relevant documents.
MetricReport recall_at_k(const RunFile& run, const QrelSet& qrels, std::size_t k);
/// Exponential-gain nDCG: gain 2^g - 1, discount log2(rank + 1), normalised by
/// the ideal ordering of all judged grades; 0 when the ideal DCG is 0.
MetricReport ndcg_at_k(const RunFile& run, const QrelSet& qrels, std::size_t k);

/// Named metric, e.g. "mrr@10", "recall@1000", "ndcg@10".
MetricReport evaluate_metric(const RunFile& run, const QrelSet& qrels, const std::string& name);

struct DeltaRow {
  std::string name;
  double base = 0.0;
  double with_thought = 0.0;
  double delta = 0.0;  // with_thought - base, full precision
};

struct Comparison {
  std::string metric;
  std::vector<DeltaRow> per_query;
  DeltaRow overall;
};

/// Per-query and mean deltas. Throws when the query sets differ.
Comparison compare_runs(const MetricReport& base, const MetricReport& with_thought);

/// Base / with-thought / delta table over datasets plus an "Avg" row (mean of
/// the dataset means). Values are shown in points (x100) with one decimal.
struct DeltaTable {
  std::string metric;
  std::vector<DeltaRow> rows;

  DeltaRow average() const;
  std::string to_text() const;
};

/// Rounds to one decimal for display, with an explicit sign ("+1.6", "-0.1").
std::string format_delta(double delta_points);
std::string format_points(double value_points);

/// Aligned plain-text table of reports (one column per metric).
std::string format_report_table(const std::vector<MetricReport>& reports);
/// JSON lines {"metric", "query_id" (or "all"), "value"}.
std::string format_report_jsonl(const std::vector<MetricReport>& reports);

}  // namespace thinkret
