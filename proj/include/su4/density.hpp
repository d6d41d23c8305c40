#pragma once

// Two-qubit density matrices built from three spectrum angles and twelve
// conjugation angles.

#include <array>

#include "su4/euler.hpp"
#include "su4/types.hpp"

namespace su4 {

/// theta_1..theta_3. With w^2 = sin^2 theta_1, x^2 = sin^2 theta_2 and
/// y^2 = sin^2 theta_3 the eigenvalues are
/// (w^2 x^2 y^2, (1 - w^2) x^2 y^2, (1 - x^2) y^2, 1 - y^2).
struct SpectrumAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

/// pi/4 <= theta_1 <= pi/2, acos(1/sqrt 3) <= theta_2 <= pi/2,
/// pi/3 <= theta_3 <= pi/2.
std::array<Interval, 3> spectrum_profile();

bool spectrum_profile_check(const SpectrumAngles& theta);

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTol = 1e-13;
  static constexpr double kTraceTol = 1e-13;
  static constexpr double kEigenvalueTol = 1e-12;

  /// Checks the three invariants and throws ValidationError naming the first
  /// one violated ("hermiticity invariant violated", "trace invariant
  /// violated", "positivity invariant violated").
  static DensityMatrix validated(const Matrix4c& m);

  /// For matrices that hold the invariants by construction.
  static DensityMatrix trusted(const Matrix4c& m) { return DensityMatrix(m); }

  const Matrix4c& matrix() const { return m_; }

 private:
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

/// Eigenvalues of rho_d in diagonal order. Trace is one analytically.
std::array<double, 4> spectrum(const SpectrumAngles& theta);

DensityMatrix rho_diagonal(const SpectrumAngles& theta);

/// rho_d = w0 I + w3 lambda_3 + w8 lambda_8 + w15 lambda_15.
struct BlochCoefficients {
  double w0 = 0.25;
  double w3 = 0.0;
  double w8 = 0.0;
  double w15 = 0.0;

  Matrix4c reconstruct() const;
};

/// Closed-form coefficients. Also projects rho_d onto all fifteen generators
/// with Tr[rho_d lambda_j] / 2 and throws ConsistencyError if any coefficient
/// off lambda_3, lambda_8, lambda_15 exceeds 1e-13 or an on-axis coefficient
/// disagrees with the closed form.
BlochCoefficients bloch_coefficients(const SpectrumAngles& theta);

using ConjugationAngles = std::array<double, 12>;

/// V rho_d V^dagger where V is the product of the first twelve SU(4) Euler
/// factors. The trailing lambda_3, lambda_8, lambda_15 factors commute with
/// rho_d and drop out. Throws ArgumentError on non-finite input.
DensityMatrix rho_full(const ConjugationAngles& alpha, const SpectrumAngles& theta);

/// U rho_d U^dagger with U from all fifteen angles.
DensityMatrix rho_from_unitary(const GroupElement& u, const SpectrumAngles& theta);

/// Ascending eigenvalues of a Hermitian matrix (self-adjoint solver).
std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m);

}  // namespace su4
