#include "su4/haar.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "parallel.hpp"
#include "su4/errors.hpp"
#include "su4/quadrature.hpp"
#include "su4/su_algebra.hpp"

namespace su4 {

namespace detail {

AngleFactor angle_factor(Group group, std::size_t angle) {
  switch (group) {
    case Group::SU2:
      return angle == 1 ? AngleFactor::sin2 : AngleFactor::uniform;
    case Group::SU3:
      // alpha_8, alpha_10, alpha_12 sit at positions 1, 3, 5.
      switch (angle) {
        case 1: return AngleFactor::sin2;
        case 3: return AngleFactor::cos1_sin3;
        case 5: return AngleFactor::sin2;
        default: return AngleFactor::uniform;
      }
    case Group::SU4:
      switch (angle + 1) {
        case 2: return AngleFactor::sin2;
        case 4: return AngleFactor::cos3_sin1;
        case 6: return AngleFactor::cos1_sin5;
        case 8: return AngleFactor::sin2;
        case 10: return AngleFactor::cos1_sin3;
        case 12: return AngleFactor::sin2;
        default: return AngleFactor::uniform;
      }
  }
  return AngleFactor::uniform;
}

double factor_value(AngleFactor f, double x) {
  switch (f) {
    case AngleFactor::uniform: return 1.0;
    case AngleFactor::sin2: return std::sin(2.0 * x);
    case AngleFactor::cos3_sin1: {
      const double c = std::cos(x);
      return c * c * c * std::sin(x);
    }
    case AngleFactor::cos1_sin5: {
      const double s = std::sin(x);
      return std::cos(x) * s * s * s * s * s;
    }
    case AngleFactor::cos1_sin3: {
      const double s = std::sin(x);
      return std::cos(x) * s * s * s;
    }
  }
  return 0.0;
}

double factor_inverse_cdf(AngleFactor f, double u) {
  // CDFs on [0, pi/2]: sin^2 x, 1 - cos^4 x, sin^6 x, sin^4 x.
  switch (f) {
    case AngleFactor::uniform: return u * (kPi / 2.0);
    case AngleFactor::sin2: return std::asin(std::sqrt(u));
    case AngleFactor::cos3_sin1: return std::acos(std::pow(1.0 - u, 0.25));
    case AngleFactor::cos1_sin5: return std::asin(std::pow(u, 1.0 / 6.0));
    case AngleFactor::cos1_sin3: return std::asin(std::pow(u, 0.25));
  }
  return 0.0;
}

}  // namespace detail

using detail::AngleFactor;

double OneFormCoefficients::determinant() const { return c.partialPivLu().determinant(); }

double OneFormCoefficients::zero_block_max() const {
  if (c.rows() != 15) throw ArgumentError("zero block is defined for SU4 coefficients only");
  // Parameters alpha_7..alpha_15 -> rows 6..14; generators lambda_9..lambda_14 -> cols 8..13.
  return c.block(6, 8, 9, 6).cwiseAbs().maxCoeff();
}

OneFormCoefficients one_form_matrix(const EulerAngles& angles) {
  const auto gens = factor_generators(angles.group());
  const auto n = static_cast<int>(gens.size());

  OneFormCoefficients out{Eigen::MatrixXd::Zero(n, n)};

  // E^L for parameter k is F_{n-1}^T ... F_{k+1}^T; walk k downward and
  // extend the prefix by one transposed factor per step.
  Matrix4c prefix = Matrix4c::Identity();
  for (int k = n - 1; k >= 0; --k) {
    if (k < n - 1) {
      const auto next = static_cast<std::size_t>(k + 1);
      prefix = prefix * exp_generator(gens[next], angles[next]).transpose();
    }
    const Matrix4c generator_t = gell_mann(gens[static_cast<std::size_t>(k)]).matrix().transpose();
    const Matrix4c m = prefix * (kI * generator_t) * prefix.adjoint();
    for (int j = 0; j < n; ++j) {
      const Complex v = Complex(0.0, -0.5) * (gell_mann(j + 1).matrix().transpose() * m).trace();
      if (std::abs(v.imag()) > 1e-12) {
        throw ConsistencyError("one-form coefficient c(" + std::to_string(k + 1) + "," +
                               std::to_string(j + 1) + ") has an imaginary residue");
      }
      out.c(k, j) = v.real();
    }
  }
  return out;
}

double haar_density(const EulerAngles& angles) {
  double value = 1.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const AngleFactor f = detail::angle_factor(angles.group(), i);
    if (f != AngleFactor::uniform) value *= detail::factor_value(f, angles[i]);
  }
  return value;
}

double haar_density_su3(const EulerAngles& angles) {
  if (angles.group() != Group::SU3) throw ArgumentError("haar_density_su3 needs SU3 angles");
  return haar_density(angles);
}

int normalization_factor(Group group) {
  switch (group) {
    case Group::SU2: return 2;
    case Group::SU3: return 2 * 2 * 3;
    case Group::SU4: return 2 * 2 * 2 * 2 * 3 * 4;
  }
  return 0;
}

double analytic_volume(Group group) {
  switch (group) {
    case Group::SU2: return 2.0 * kPi * kPi;
    case Group::SU3: return std::sqrt(3.0) * std::pow(kPi, 5);
    case Group::SU4: return std::sqrt(2.0) * std::pow(kPi, 9) / 3.0;
  }
  return 0.0;
}

const char* to_string(VolumeMethod method) {
  return method == VolumeMethod::quadrature ? "quadrature" : "monte_carlo";
}

double integrate_density(const RangeProfile& profile, int nodes) {
  const GaussLegendreRule rule = gauss_legendre(nodes);
  double total = 1.0;
  for (std::size_t i = 0; i < profile.bounds.size(); ++i) {
    const Interval& iv = profile.bounds[i];
    const AngleFactor f = detail::angle_factor(profile.group, i);
    if (f == AngleFactor::uniform) {
      total *= iv.length();
    } else {
      total *= integrate(rule, iv.lo, iv.hi, [f](double x) { return detail::factor_value(f, x); });
    }
  }
  return total;
}

namespace {

constexpr std::int64_t kMonteCarloChunk = 4096;

struct ChunkMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

VolumeResult monte_carlo_volume(Group group, std::int64_t samples, std::uint64_t seed,
                                unsigned workers) {
  const RangeProfile& profile = range_profile(group, RangeKind::volume);
  double trivial_length = 1.0;
  double box = 1.0;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < profile.bounds.size(); ++i) {
    if (detail::angle_factor(group, i) == AngleFactor::uniform) {
      trivial_length *= profile.bounds[i].length();
    } else {
      box *= profile.bounds[i].length();
      active.push_back(i);
    }
  }

  const std::int64_t n_chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<ChunkMoments> moments(static_cast<std::size_t>(n_chunks));
  detail::for_each_chunk(n_chunks, workers, [&](std::int64_t chunk) {
    RngStream rng(seed, static_cast<std::uint64_t>(chunk));
    const std::int64_t begin = chunk * kMonteCarloChunk;
    const std::int64_t end = std::min(samples, begin + kMonteCarloChunk);
    ChunkMoments m;
    for (std::int64_t s = begin; s < end; ++s) {
      double value = 1.0;
      for (std::size_t i : active) {
        const Interval& iv = profile.bounds[i];
        value *= detail::factor_value(detail::angle_factor(group, i), rng.uniform(iv.lo, iv.hi));
      }
      m.sum += value;
      m.sum_sq += value * value;
    }
    moments[static_cast<std::size_t>(chunk)] = m;
  });

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& m : moments) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const auto n = static_cast<double>(samples);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  const double scale = normalization_factor(group) * trivial_length * box;

  VolumeResult r;
  r.method = VolumeMethod::monte_carlo;
  r.samples_or_nodes = samples;
  r.normalization = normalization_factor(group);
  r.estimate = scale * mean;
  r.standard_error = scale * std::sqrt(variance / n);
  return r;
}

}  // namespace

VolumeResult group_volume(Group group, VolumeMethod method, std::int64_t resolution,
                          std::uint64_t seed, unsigned workers) {
  if (method == VolumeMethod::quadrature) {
    if (resolution < 2) throw ArgumentError("quadrature needs at least 2 nodes per axis");
    if (resolution > 100000) throw ArgumentError("quadrature node count is unreasonably large");
    VolumeResult r;
    r.method = method;
    r.samples_or_nodes = resolution;
    r.normalization = normalization_factor(group);
    r.estimate = r.normalization *
                 integrate_density(range_profile(group, RangeKind::volume), static_cast<int>(resolution));
    return r;
  }
  if (resolution < 1000) throw ArgumentError("Monte Carlo needs at least 1000 samples");
  return monte_carlo_volume(group, resolution, seed, workers);
}

EulerAngles sample_haar_angles(RngStream& rng, const RangeProfile& profile) {
  std::vector<double> values(profile.bounds.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Interval& iv = profile.bounds[i];
    const AngleFactor f = detail::angle_factor(profile.group, i);
    const double u = rng.uniform();
    if (f == AngleFactor::uniform) {
      values[i] = iv.lo + iv.length() * u;
    } else {
      if (iv.lo != 0.0 || iv.hi != kPi / 2.0) {
        throw ArgumentError("Haar sampling expects [0, pi/2] for density-carrying angles");
      }
      values[i] = detail::factor_inverse_cdf(f, u);
    }
  }
  return EulerAngles(profile.group, std::move(values));
}

GroupElement sample_haar_unitary(RngStream& rng, const RangeProfile& profile) {
  return compose(sample_haar_angles(rng, profile));
}

}  // namespace su4
