#include "su4/scan.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "parallel.hpp"
#include "su4/errors.hpp"
#include "su4/haar.hpp"
#include "su4/kernels.hpp"
#include "su4/rng.hpp"

namespace su4 {

void ScanSummary::add(const ScanRecord& r) {
  if (total == 0) {
    min_d = r.d;
    max_d = r.d;
  } else {
    min_d = std::min(min_d, r.d);
    max_d = std::max(max_d, r.d);
  }
  ++total;
  if (r.entangled) {
    ++entangled;
  } else if (r.boundary) {
    ++boundary;
  } else {
    ++separable;
  }
  max_negative_count = std::max(max_negative_count, r.negative_count);
}

void corner_angles(std::int64_t index, RangeKind range, ConjugationAngles& alpha, SpectrumAngles& theta) {
  if (index < 0 || index >= kCornerCount) throw ArgumentError("corner index out of range");
  const RangeProfile& profile = range_profile(Group::SU4, range);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    alpha[i] = (index >> i) & 1 ? profile.bounds[i].hi : profile.bounds[i].lo;
  }
  const auto prof = spectrum_profile();
  theta.theta1 = (index >> 12) & 1 ? prof[0].hi : prof[0].lo;
  theta.theta2 = (index >> 13) & 1 ? prof[1].hi : prof[1].lo;
  theta.theta3 = (index >> 14) & 1 ? prof[2].hi : prof[2].lo;
}

namespace {

constexpr std::int64_t kChunk = 1024;

// Fills records[s].alpha / theta for the chunk; index is set by the caller.
using ChunkFiller = std::function<void(std::int64_t chunk, std::vector<ScanRecord>& records)>;

void classify_chunk(std::vector<ScanRecord>& records, const ScanConfig& config) {
  const std::size_t n = records.size();
  kernels::PlaneBatch trig(2 * kernels::kConjugationFactors, n);
  kernels::PlaneBatch diag(4, n);
  for (std::size_t s = 0; s < n; ++s) {
    const ScanRecord& r = records[s];
    for (std::size_t f = 0; f < kernels::kConjugationFactors; ++f) {
      trig.at(f, s) = std::cos(r.alpha[f]);
      trig.at(kernels::kConjugationFactors + f, s) = std::sin(r.alpha[f]);
    }
    const auto p = spectrum(r.theta);
    for (std::size_t k = 0; k < 4; ++k) diag.at(k, s) = p[k];
  }

  kernels::PlaneBatch rho;
  kernels::conjugate_diagonal(trig, diag, rho);
  kernels::PlaneBatch coeffs;
  kernels::char_poly(rho, config.subsystem == Subsystem::B ? kernels::Transpose::b : kernels::Transpose::a,
                     coeffs);

  for (std::size_t s = 0; s < n; ++s) {
    const Matrix4c pt = partial_transpose(kernels::load_matrix(rho, s), config.subsystem);
    const SeparabilityVerdict v = verdict_from(pt, coeffs.at(3, s), config.tolerance);
    ScanRecord& r = records[s];
    r.d = v.d_value;
    r.min_eigenvalue = v.min_eigenvalue;
    r.negative_count = v.negative_count;
    r.entangled = v.entangled;
    r.boundary = v.boundary;
  }
}

ScanSummary run(std::int64_t total, const ScanConfig& config, const ChunkFiller& fill, const ScanSink& sink) {
  if (!(config.tolerance >= 0.0) || !std::isfinite(config.tolerance)) {
    throw ArgumentError("tolerance must be finite and non-negative");
  }
  const std::int64_t n_chunks = (total + kChunk - 1) / kChunk;
  const std::int64_t window = 4 * static_cast<std::int64_t>(std::max(1u, config.workers));

  ScanSummary summary;
  std::vector<std::vector<ScanRecord>> slots(static_cast<std::size_t>(window));
  for (std::int64_t first = 0; first < n_chunks; first += window) {
    const std::int64_t count = std::min(window, n_chunks - first);
    detail::for_each_chunk(count, config.workers, [&](std::int64_t w) {
      const std::int64_t chunk = first + w;
      const std::int64_t begin = chunk * kChunk;
      const std::int64_t end = std::min(total, begin + kChunk);
      auto& records = slots[static_cast<std::size_t>(w)];
      records.assign(static_cast<std::size_t>(end - begin), ScanRecord{});
      for (std::int64_t i = begin; i < end; ++i) records[static_cast<std::size_t>(i - begin)].index = i;
      fill(chunk, records);
      classify_chunk(records, config);
    });
    for (std::int64_t w = 0; w < count; ++w) {
      for (const auto& r : slots[static_cast<std::size_t>(w)]) {
        summary.add(r);
        if (sink) sink(r);
      }
    }
  }
  return summary;
}

}  // namespace

ScanSummary scan(const ScanConfig& config, const ScanSink& sink) {
  if (config.samples < 1) throw ArgumentError("scan needs at least 1 sample");
  if (config.spectrum == SpectrumPolicy::fixed) {
    const auto& t = config.theta;
    if (!std::isfinite(t.theta1) || !std::isfinite(t.theta2) || !std::isfinite(t.theta3)) {
      throw ArgumentError("fixed spectrum angles must be finite");
    }
  }
  const RangeProfile& profile = range_profile(Group::SU4, config.range);
  const auto prof = spectrum_profile();

  const ChunkFiller fill = [&](std::int64_t chunk, std::vector<ScanRecord>& records) {
    RngStream rng(config.seed, static_cast<std::uint64_t>(chunk));
    for (auto& r : records) {
      const EulerAngles angles = sample_haar_angles(rng, profile);
      for (std::size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] = angles[i];
      if (config.spectrum == SpectrumPolicy::uniform) {
        r.theta.theta1 = rng.uniform(prof[0].lo, prof[0].hi);
        r.theta.theta2 = rng.uniform(prof[1].lo, prof[1].hi);
        r.theta.theta3 = rng.uniform(prof[2].lo, prof[2].hi);
      } else {
        r.theta = config.theta;
      }
    }
  };
  return run(config.samples, config, fill, sink);
}

ScanSummary scan_corners(const ScanConfig& config, const ScanSink& sink) {
  const ChunkFiller fill = [&](std::int64_t, std::vector<ScanRecord>& records) {
    for (auto& r : records) corner_angles(r.index, config.range, r.alpha, r.theta);
  };
  return run(kCornerCount, config, fill, sink);
}

}  // namespace su4
