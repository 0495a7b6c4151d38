#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "thinkret/kernels.hpp"

namespace thinkret {

struct SearchHit {
  std::string doc_id;
  double score = 0.0;
  bool operator==(const SearchHit&) const = default;
};

/// Ranked hits, score descending, ties by ascending doc_id.
using SearchResult = std::vector<SearchHit>;

// Index file, little-endian:
//   "TRIDX001" | u32 version | u32 dimension | u64 count | u8 normalized |
//   count x str doc_id | count x dimension f32
inline constexpr std::uint32_t kIndexVersion = 1;

/// Exact inner-product index over float32 rows; scores accumulate in double.
class EmbeddingStore {
 public:
  EmbeddingStore(std::size_t dimension, bool normalized);

  /// Stores the vector, L2-normalised first when the store is normalised.
  void add(const std::string& doc_id, std::span<const double> vec);

  /// Exact top-n by inner product.
  SearchResult search(std::span<const double> query, std::size_t n,
                      ExecPolicy policy = ExecPolicy::kParallel) const;

  void save(const std::filesystem::path& path) const;
  /// Throws IoError on a corrupt or truncated file; never returns a partial store.
  static EmbeddingStore load(const std::filesystem::path& path);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool normalized() const { return normalized_; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::span<const float> vector(std::size_t row) const {
    return {data_.data() + row * dim_, dim_};
  }
  std::span<const float> data() const { return data_; }

  bool operator==(const EmbeddingStore& o) const {
    return dim_ == o.dim_ && normalized_ == o.normalized_ && ids_ == o.ids_ && data_ == o.data_;
  }

 private:
  std::size_t dim_;
  bool normalized_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> row_of_;
  std::vector<float> data_;
};

}  // namespace thinkret
