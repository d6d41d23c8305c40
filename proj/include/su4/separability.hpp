#pragma once

// Partial-transpose separability test for two qubits, reduced to the sign of
// the constant coefficient d = det(rho^T_B) of the characteristic polynomial.
// The partial transpose of a two-qubit state has at most one negative
// eigenvalue, so d < 0 exactly when the state is entangled.

#include <array>
#include <optional>

#include "su4/density.hpp"
#include "su4/types.hpp"

namespace su4 {

Matrix4c partial_transpose(const Matrix4c& m, Subsystem subsystem);

/// lambda^4 + a lambda^3 + b lambda^2 + c lambda + d, i.e. a = -e1, b = e2,
/// c = -e3, d = e4 in the elementary symmetric polynomials of the spectrum.
struct CharPolyCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double evaluate(double lambda) const;
};

/// Faddeev-LeVerrier trace recursion (no root finding). Expects a Hermitian
/// matrix; only real parts are kept.
CharPolyCoeffs char_poly_coeffs(const Matrix4c& m);

/// tau^4 + p tau^2 + q tau + r after the shift lambda = tau + 1/4.
struct DepressedQuartic {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;

  double evaluate(double tau) const;
};

/// Shifts a unit-trace quartic (a = -1 within 1e-12, else ArgumentError):
///   p = b - 3/8,  q = b/2 + c - 1/8,  r = b/16 + c/4 + d - 3/256.
/// The shifted polynomial is checked against the original at five points
/// (a quartic identity) and ConsistencyError is thrown on disagreement.
DepressedQuartic depressed_quartic(const CharPolyCoeffs& coeffs);

/// Roots of the resolvent cubic g^3 + 2p g^2 + (p^2 - 4r) g - q^2 = 0.
struct ResolventRoots {
  std::array<Complex, 3> gamma{};
  /// All three roots real and >= 0 within 1e-10.
  bool branch_valid = false;
};

/// Cardano with the principal cube root, then one Newton step per root.
ResolventRoots resolvent_roots(const DepressedQuartic& dq);

/// lambda-eigenvalues (ascending) from tau = (+-sqrt g1 +- sqrt g2 +- sqrt g3)/2
/// + 1/4, signs chosen so sqrt g1 sqrt g2 sqrt g3 has the sign of -q.
/// std::nullopt when the resolvent branch is invalid; callers fall back to a
/// Hermitian eigensolver.
std::optional<std::array<double, 4>> eigenvalues_via_resolvent(const DepressedQuartic& dq);

struct SeparabilityVerdict {
  bool entangled = false;
  double d_value = 0.0;
  /// Audit data from the eigensolver on the partial transpose.
  double min_eigenvalue = 0.0;
  int negative_count = 0;
  /// |d| <= tolerance; such states are reported as not entangled.
  bool boundary = false;
};

inline constexpr double kDefaultBoundaryTolerance = 1e-10;

/// Eigenvalues below -1e-12 count as negative in SeparabilityVerdict.
inline constexpr double kNegativeEigenvalueTol = 1e-12;

SeparabilityVerdict is_entangled(const DensityMatrix& rho, double tolerance = kDefaultBoundaryTolerance,
                                 Subsystem subsystem = Subsystem::B);

/// Validates `m` as a density matrix first (ValidationError on failure).
SeparabilityVerdict is_entangled(const Matrix4c& m, double tolerance = kDefaultBoundaryTolerance,
                                 Subsystem subsystem = Subsystem::B);

/// Verdict for a partial transpose whose coefficients are already known.
SeparabilityVerdict verdict_from(const Matrix4c& partial_transposed, double d, double tolerance);

}  // namespace su4
