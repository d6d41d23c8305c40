#include "su4/density.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "su4/errors.hpp"
#include "su4/kernels.hpp"
#include "su4/su_algebra.hpp"

namespace su4 {

std::array<Interval, 3> spectrum_profile() {
  return {Interval{kPi / 4.0, kPi / 2.0}, Interval{std::acos(1.0 / std::sqrt(3.0)), kPi / 2.0},
          Interval{kPi / 3.0, kPi / 2.0}};
}

bool spectrum_profile_check(const SpectrumAngles& theta) {
  const auto p = spectrum_profile();
  return p[0].contains(theta.theta1) && p[1].contains(theta.theta2) && p[2].contains(theta.theta3);
}

DensityMatrix DensityMatrix::validated(const Matrix4c& m) {
  if (!m.allFinite()) throw ValidationError("finiteness invariant violated: non-finite entry");
  if (max_abs(m - m.adjoint()) > kHermiticityTol) throw ValidationError("hermiticity invariant violated");
  if (std::abs(m.trace() - 1.0) > kTraceTol) throw ValidationError("trace invariant violated");
  if (hermitian_eigenvalues(m)[0] < -kEigenvalueTol) throw ValidationError("positivity invariant violated");
  return DensityMatrix(m);
}

std::array<double, 4> spectrum(const SpectrumAngles& theta) {
  const double w2 = std::sin(theta.theta1) * std::sin(theta.theta1);
  const double x2 = std::sin(theta.theta2) * std::sin(theta.theta2);
  const double y2 = std::sin(theta.theta3) * std::sin(theta.theta3);
  return {w2 * x2 * y2, (1.0 - w2) * x2 * y2, (1.0 - x2) * y2, 1.0 - y2};
}

DensityMatrix rho_diagonal(const SpectrumAngles& theta) {
  const auto p = spectrum(theta);
  Matrix4c m = Matrix4c::Zero();
  for (int r = 0; r < 4; ++r) m(r, r) = p[static_cast<std::size_t>(r)];
  return DensityMatrix::trusted(m);
}

Matrix4c BlochCoefficients::reconstruct() const {
  return w0 * Matrix4c::Identity() + w3 * gell_mann(3).matrix() + w8 * gell_mann(8).matrix() +
         w15 * gell_mann(15).matrix();
}

BlochCoefficients bloch_coefficients(const SpectrumAngles& theta) {
  const double w2 = std::sin(theta.theta1) * std::sin(theta.theta1);
  const double x2 = std::sin(theta.theta2) * std::sin(theta.theta2);
  const double y2 = std::sin(theta.theta3) * std::sin(theta.theta3);

  BlochCoefficients out;
  out.w0 = 0.25;
  out.w3 = 0.5 * (-1.0 + 2.0 * w2) * x2 * y2;
  out.w8 = (-2.0 + 3.0 * x2) * y2 / (2.0 * std::sqrt(3.0));
  out.w15 = (-3.0 + 4.0 * y2) / (2.0 * std::sqrt(6.0));

  const Matrix4c rho_d = rho_diagonal(theta).matrix();
  for (int j = 1; j <= kNumGenerators; ++j) {
    const double projected = 0.5 * (rho_d * gell_mann(j).matrix()).trace().real();
    double expected = 0.0;
    if (j == 3) expected = out.w3;
    if (j == 8) expected = out.w8;
    if (j == 15) expected = out.w15;
    if (std::abs(projected - expected) > 1e-13) {
      throw ConsistencyError("Bloch projection onto lambda_" + std::to_string(j) +
                             " disagrees with the closed form");
    }
  }
  return out;
}

DensityMatrix rho_full(const ConjugationAngles& alpha, const SpectrumAngles& theta) {
  for (double a : alpha) {
    if (!std::isfinite(a)) throw ArgumentError("rho_full: conjugation angles must be finite");
  }
  if (!std::isfinite(theta.theta1) || !std::isfinite(theta.theta2) || !std::isfinite(theta.theta3)) {
    throw ArgumentError("rho_full: spectrum angles must be finite");
  }
  // Batch of one through the same kernel the scans use, so a scan record and
  // a recomputation from its angles agree exactly.
  kernels::PlaneBatch trig(2 * kernels::kConjugationFactors, 1);
  kernels::PlaneBatch diag(4, 1);
  for (std::size_t f = 0; f < kernels::kConjugationFactors; ++f) {
    trig.at(f, 0) = std::cos(alpha[f]);
    trig.at(kernels::kConjugationFactors + f, 0) = std::sin(alpha[f]);
  }
  const auto p = spectrum(theta);
  for (std::size_t r = 0; r < 4; ++r) diag.at(r, 0) = p[r];
  kernels::PlaneBatch rho;
  kernels::conjugate_diagonal(trig, diag, rho, kernels::Isa::scalar);
  return DensityMatrix::trusted(kernels::load_matrix(rho, 0));
}

DensityMatrix rho_from_unitary(const GroupElement& u, const SpectrumAngles& theta) {
  const Matrix4c& m = u.matrix();
  return DensityMatrix::trusted(m * rho_diagonal(theta).matrix() * m.adjoint());
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
  const Vector4d ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

}  // namespace su4
