#pragma once

// Bulk classification of conjugated two-qubit states.

#include <array>
#include <cstdint>
#include <functional>

#include "su4/density.hpp"
#include "su4/euler.hpp"
#include "su4/separability.hpp"

namespace su4 {

enum class SpectrumPolicy { uniform, fixed };

struct ScanConfig {
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  /// Bounds used for alpha_1..alpha_12 (and for corner values).
  RangeKind range = RangeKind::volume;
  /// uniform: theta uniform inside the spectrum profile; fixed: `theta`.
  SpectrumPolicy spectrum = SpectrumPolicy::uniform;
  SpectrumAngles theta{};
  double tolerance = kDefaultBoundaryTolerance;
  unsigned workers = 1;
  Subsystem subsystem = Subsystem::B;
};

struct ScanRecord {
  std::int64_t index = 0;
  ConjugationAngles alpha{};
  SpectrumAngles theta{};
  double d = 0.0;
  double min_eigenvalue = 0.0;
  int negative_count = 0;
  bool entangled = false;
  bool boundary = false;
};

struct ScanSummary {
  std::int64_t total = 0;
  /// Not entangled and off the boundary.
  std::int64_t separable = 0;
  std::int64_t entangled = 0;
  std::int64_t boundary = 0;
  int max_negative_count = 0;
  double min_d = 0.0;
  double max_d = 0.0;

  void add(const ScanRecord& r);
};

/// Receives records in sample-index order.
using ScanSink = std::function<void(const ScanRecord&)>;

/// Samples alpha_1..alpha_12 with the Haar angle sampler and theta per the
/// spectrum policy. Samples are grouped into fixed-size chunks, each drawing
/// from its own stream keyed by (seed, chunk index), so output depends on the
/// seed only, not on `workers`. ArgumentError for samples < 1.
ScanSummary scan(const ScanConfig& config, const ScanSink& sink = {});

inline constexpr std::int64_t kCornerCount = std::int64_t{1} << 15;

/// Every combination of alpha_i in {0, upper bound} (i = 1..12) and theta_j at
/// either end of the spectrum profile. Bit i of the record index selects the
/// upper value of alpha_{i+1}; bits 12..14 select theta_1..theta_3.
/// `samples`, `seed` and `spectrum` are ignored.
ScanSummary scan_corners(const ScanConfig& config, const ScanSink& sink = {});

/// Corner angles for one index of scan_corners.
void corner_angles(std::int64_t index, RangeKind range, ConjugationAngles& alpha, SpectrumAngles& theta);

}  // namespace su4
