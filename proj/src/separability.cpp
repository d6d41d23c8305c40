#include "su4/separability.hpp"

#include <algorithm>
#include <cmath>

#include "su4/errors.hpp"
#include "su4/kernels.hpp"

namespace su4 {

Matrix4c partial_transpose(const Matrix4c& m, Subsystem subsystem) {
  Matrix4c out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int a = r / 2, b = r % 2, a2 = c / 2, b2 = c % 2;
      if (subsystem == Subsystem::B) {
        out(r, c) = m(2 * a + b2, 2 * a2 + b);
      } else {
        out(r, c) = m(2 * a2 + b, 2 * a + b2);
      }
    }
  }
  return out;
}

double CharPolyCoeffs::evaluate(double lambda) const {
  return (((lambda + a) * lambda + b) * lambda + c) * lambda + d;
}

CharPolyCoeffs char_poly_coeffs(const Matrix4c& m) {
  kernels::PlaneBatch batch(kernels::kMatrixPlanes, 1);
  kernels::store_matrix(m, batch, 0);
  kernels::PlaneBatch out;
  kernels::char_poly(batch, kernels::Transpose::none, out, kernels::Isa::scalar);
  return {out.at(0, 0), out.at(1, 0), out.at(2, 0), out.at(3, 0)};
}

double DepressedQuartic::evaluate(double tau) const {
  const double t2 = tau * tau;
  return (t2 + p) * t2 + q * tau + r;
}

DepressedQuartic depressed_quartic(const CharPolyCoeffs& k) {
  if (std::abs(k.a + 1.0) > 1e-12) {
    throw ArgumentError("depressed_quartic expects a unit-trace quartic (a = -1)");
  }
  // Expansion of (tau + 1/4)^4 - (tau + 1/4)^3 + b (tau + 1/4)^2 + c (tau + 1/4) + d.
  DepressedQuartic dq;
  dq.p = k.b - 3.0 / 8.0;
  dq.q = k.b / 2.0 + k.c - 1.0 / 8.0;
  dq.r = k.b / 16.0 + k.c / 4.0 + k.d - 3.0 / 256.0;

  // Two quartics agreeing at five points are identical. The cubic term of the
  // original is taken as exactly -1 here; a is within 1e-12 of that.
  const double scale = 1.0 + std::abs(k.b) + std::abs(k.c) + std::abs(k.d);
  for (double tau : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const double lambda = tau + 0.25;
    const double original = (((lambda - 1.0) * lambda + k.b) * lambda + k.c) * lambda + k.d;
    if (std::abs(original - dq.evaluate(tau)) > 1e-12 * scale) {
      throw ConsistencyError("depressed quartic disagrees with the shifted characteristic polynomial");
    }
  }
  return dq;
}

namespace {

Complex cubic_value(const std::array<double, 3>& k, Complex x) { return ((x + k[0]) * x + k[1]) * x + k[2]; }

Complex cubic_slope(const std::array<double, 3>& k, Complex x) { return (3.0 * x + 2.0 * k[0]) * x + k[1]; }

}  // namespace

ResolventRoots resolvent_roots(const DepressedQuartic& dq) {
  // Monic cubic x^3 + B x^2 + C x + D.
  const std::array<double, 3> k{2.0 * dq.p, dq.p * dq.p - 4.0 * dq.r, -dq.q * dq.q};
  const double b = k[0], c = k[1], d = k[2];

  const double delta0 = b * b - 3.0 * c;
  const double delta1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
  const Complex disc = std::sqrt(Complex(delta1 * delta1 - 4.0 * delta0 * delta0 * delta0, 0.0));
  // Take the sign that avoids cancellation.
  const Complex plus = (delta1 + disc) / 2.0;
  const Complex minus = (delta1 - disc) / 2.0;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;

  ResolventRoots out;
  if (std::abs(big) == 0.0) {
    out.gamma.fill(Complex(-b / 3.0, 0.0));
  } else {
    const Complex cc = std::pow(big, 1.0 / 3.0);
    const Complex xi(-0.5, std::sqrt(3.0) / 2.0);
    Complex rot(1.0, 0.0);
    for (auto& g : out.gamma) {
      const Complex ck = rot * cc;
      g = -(b + ck + delta0 / ck) / 3.0;
      rot *= xi;
    }
  }

  for (auto& g : out.gamma) {
    const Complex slope = cubic_slope(k, g);
    if (std::abs(slope) > 0.0) {
      const Complex next = g - cubic_value(k, g) / slope;
      if (std::isfinite(next.real()) && std::isfinite(next.imag())) g = next;
    }
  }

  out.branch_valid = std::all_of(out.gamma.begin(), out.gamma.end(), [](const Complex& g) {
    return std::abs(g.imag()) <= 1e-10 && g.real() >= -1e-10;
  });
  return out;
}

std::optional<std::array<double, 4>> eigenvalues_via_resolvent(const DepressedQuartic& dq) {
  const ResolventRoots roots = resolvent_roots(dq);
  if (!roots.branch_valid) return std::nullopt;

  std::array<double, 3> s{};
  for (std::size_t i = 0; i < 3; ++i) s[i] = std::sqrt(std::max(0.0, roots.gamma[i].real()));
  // s1 s2 s3 must carry the sign of -q.
  if (-dq.q < 0.0) s[2] = -s[2];

  std::array<double, 4> lambda{
      0.5 * (s[0] + s[1] + s[2]),
      0.5 * (s[0] - s[1] - s[2]),
      0.5 * (-s[0] + s[1] - s[2]),
      0.5 * (-s[0] - s[1] + s[2]),
  };
  for (double& l : lambda) l += 0.25;
  std::sort(lambda.begin(), lambda.end());
  return lambda;
}

SeparabilityVerdict verdict_from(const Matrix4c& partial_transposed, double d, double tolerance) {
  SeparabilityVerdict v;
  v.d_value = d;
  v.boundary = std::abs(d) <= tolerance;
  v.entangled = d < -tolerance;
  const auto ev = hermitian_eigenvalues(partial_transposed);
  v.min_eigenvalue = ev[0];
  v.negative_count = static_cast<int>(
      std::count_if(ev.begin(), ev.end(), [](double x) { return x < -kNegativeEigenvalueTol; }));
  return v;
}

SeparabilityVerdict is_entangled(const DensityMatrix& rho, double tolerance, Subsystem subsystem) {
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw ArgumentError("tolerance must be finite and non-negative");
  }
  const Matrix4c pt = partial_transpose(rho.matrix(), subsystem);
  // The kernel applies the transpose through its index map; same arithmetic
  // as the batched scans.
  kernels::PlaneBatch batch(kernels::kMatrixPlanes, 1);
  kernels::store_matrix(rho.matrix(), batch, 0);
  kernels::PlaneBatch coeffs;
  kernels::char_poly(batch, subsystem == Subsystem::B ? kernels::Transpose::b : kernels::Transpose::a, coeffs,
                     kernels::Isa::scalar);
  return verdict_from(pt, coeffs.at(3, 0), tolerance);
}

SeparabilityVerdict is_entangled(const Matrix4c& m, double tolerance, Subsystem subsystem) {
  return is_entangled(DensityMatrix::validated(m), tolerance, subsystem);
}

}  // namespace su4
