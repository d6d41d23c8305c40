#pragma once

#include <cstdint>
#include <random>

namespace su4 {

/// Deterministic random stream keyed by (seed, stream index).
///
/// Sub-streams for parallel work are derived from the stream index, never
/// from the worker that happens to run them, so results depend only on the
/// seed and the partitioning of the work into chunks.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace su4
