#pragma once

#include <cstdint>

namespace nvdd {

// Small self-contained generator (SplitMix64 core) so that sampled clusters
// and noise draws are reproducible bit-for-bit across platforms and standard
// library versions. Streams derived from (seed, stream id) are independent,
// which lets ensemble draws run on any number of threads with identical
// results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // independent stream for a given task index
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // uniform in [0,1) with 53-bit resolution
  double uniform();

  // uniform in [0,n) without modulo bias
  std::uint64_t uniform_below(std::uint64_t n);

  // Gaussian via polar Box-Muller (spare value cached)
  double normal(double mean = 0.0, double stddev = 1.0);

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace nvdd
