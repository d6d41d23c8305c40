#pragma once

// Haar measure in Euler coordinates: the one-form coefficient matrix, the
// closed-form density, group volumes and Haar sampling.

#include <cstdint>

#include <Eigen/Core>

#include "su4/euler.hpp"
#include "su4/rng.hpp"

namespace su4 {

/// Coefficients c_kj of the left-invariant one-forms,
/// U^{-1} dU/d(alpha_k) = i sum_j c_kj lambda_j.
/// Row k is the Euler parameter, column j the generator (both 0-based).
struct OneFormCoefficients {
  Eigen::MatrixXd c;

  /// det(c) by LU with partial pivoting.
  double determinant() const;

  /// SU4 only: largest |c_kj| over parameters alpha_7..alpha_15 and generators
  /// lambda_9..lambda_14. This block vanishes identically.
  double zero_block_max() const;
};

/// Builds c for any of the three groups. Each row comes from conjugating
/// i lambda^T of one factor by the cached prefix of the transposed factor
/// chain; no derivatives or series are involved. Throws ConsistencyError if a
/// coefficient carries an imaginary residue above 1e-12.
OneFormCoefficients one_form_matrix(const EulerAngles& angles);

/// Closed-form Haar density with respect to d(alpha_1)...d(alpha_n).
///   SU2: sin(2 nu)
///   SU3: sin(2 a8) cos(a10) sin^3(a10) sin(2 a12)
///   SU4: cos^3(a4) cos(a6) cos(a10) sin(2 a2) sin(a4) sin^5(a6) sin(2 a8)
///        sin^3(a10) sin(2 a12)
double haar_density(const EulerAngles& angles);

double haar_density_su3(const EulerAngles& angles);

/// Number of identified center elements folded into the volume ranges:
/// 2, 12, 192.
int normalization_factor(Group group);

/// 2 pi^2, sqrt(3) pi^5, sqrt(2) pi^9 / 3.
double analytic_volume(Group group);

enum class VolumeMethod { quadrature, monte_carlo };

const char* to_string(VolumeMethod method);

struct VolumeResult {
  double estimate = 0.0;
  double standard_error = 0.0;
  VolumeMethod method = VolumeMethod::quadrature;
  std::int64_t samples_or_nodes = 0;
  int normalization = 0;
};

/// Integral of the closed-form density over `profile` (no normalization).
/// The density is a product of one-dimensional factors, so this is a product
/// of one-dimensional Gauss-Legendre integrals with `nodes` points each.
double integrate_density(const RangeProfile& profile, int nodes);

/// Group volume: integral over the volume profile times the normalization
/// factor.
///
/// Quadrature takes `resolution` Gauss-Legendre nodes per nontrivial axis
/// (>= 2). Monte Carlo draws `resolution` uniform points (>= 1000) over the
/// box spanned by the nontrivial axes and reports the sample standard error;
/// samples are split into fixed chunks with one stream per chunk, so the
/// result depends on the seed only, not on `workers`.
VolumeResult group_volume(Group group, VolumeMethod method, std::int64_t resolution,
                          std::uint64_t seed = 0, unsigned workers = 1);

/// Angles distributed proportionally to the Haar density restricted to
/// `profile`. The density factorizes, so each angle is an independent
/// inverse-CDF draw (uniform where the density does not depend on it).
EulerAngles sample_haar_angles(RngStream& rng, const RangeProfile& profile);

GroupElement sample_haar_unitary(RngStream& rng, const RangeProfile& profile);

namespace detail {

/// One-dimensional factor of the density attached to a single angle.
enum class AngleFactor {
  uniform,    // 1
  sin2,       // sin(2x)
  cos3_sin1,  // cos^3 x sin x
  cos1_sin5,  // cos x sin^5 x
  cos1_sin3,  // cos x sin^3 x
};

AngleFactor angle_factor(Group group, std::size_t angle);
double factor_value(AngleFactor f, double x);
/// Inverse CDF of the normalized factor on [0, pi/2].
double factor_inverse_cdf(AngleFactor f, double u);

}  // namespace detail

}  // namespace su4
