#pragma once

#include <cstdint>

#include "l1sdp/linalg.hpp"

namespace l1sdp {

/// SplitMix64 stream with portable uniform and Gaussian draws, so seeded
/// runs give identical numbers on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Upper triangle (with diagonal) drawn uniform in [lo, hi).
SymMat random_symmetric(int n, double lo, double hi, SplitMix64& rng);

/// Full n x n matrix drawn uniform in [lo, hi) row by row, then (M + M^T)/2.
SymMat random_symmetrized(int n, double lo, double hi, SplitMix64& rng);

}  // namespace l1sdp
