#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace thinkret {

/// Mixes a seed with a stream index into an independent sub-seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Stable 64-bit FNV-1a hash of a string, used to derive per-id seeds.
std::uint64_t hash_string(std::string_view s);

/// mt19937_64 with portable draws. The std distributions are
/// implementation-defined, which would break cross-platform determinism.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace thinkret
