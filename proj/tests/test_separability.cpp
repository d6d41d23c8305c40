#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "su4/errors.hpp"
#include "su4/haar.hpp"
#include "su4/separability.hpp"

using namespace su4;

namespace {

using Matrix2c = Eigen::Matrix2cd;

Matrix4c bell() {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

Matrix4c random_state(RngStream& rng) {
  const EulerAngles a = sample_haar_angles(rng, range_profile(Group::SU4, RangeKind::volume));
  ConjugationAngles alpha{};
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = a[i];
  const auto p = spectrum_profile();
  const SpectrumAngles t{rng.uniform(p[0].lo, p[0].hi), rng.uniform(p[1].lo, p[1].hi),
                         rng.uniform(p[2].lo, p[2].hi)};
  return rho_full(alpha, t).matrix();
}

// (I + r.sigma) / 2 with |r| <= 1.
Matrix2c random_qubit(RngStream& rng) {
  double x, y, z;
  do {
    x = rng.uniform(-1.0, 1.0);
    y = rng.uniform(-1.0, 1.0);
    z = rng.uniform(-1.0, 1.0);
  } while (x * x + y * y + z * z > 1.0);
  Matrix2c m;
  m << 0.5 * (1.0 + z), 0.5 * Complex(x, -y), 0.5 * Complex(x, y), 0.5 * (1.0 - z);
  return m;
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(i, j) = a(i / 2, j / 2) * b(i % 2, j % 2);
  }
  return out;
}

}  // namespace

TEST_CASE("partial transpose") {
  SUBCASE("diagonal matrices are fixed") {
    Matrix4c d = Matrix4c::Zero();
    d.diagonal() << 0.4, 0.3, 0.2, 0.1;
    CHECK(max_abs(partial_transpose(d, Subsystem::A) - d) == 0.0);
    CHECK(max_abs(partial_transpose(d, Subsystem::B) - d) == 0.0);
  }
  SUBCASE("Bell projector") {
    const auto ev = test::generic_eigenvalues(partial_transpose(bell(), Subsystem::B));
    CHECK(ev[0] == doctest::Approx(-0.5));
    for (int k = 1; k < 4; ++k) CHECK(ev[static_cast<std::size_t>(k)] == doctest::Approx(0.5));
  }
  SUBCASE("involutions and composition") {
    RngStream rng(1);
    for (int i = 0; i < 50; ++i) {
      const Matrix4c rho = random_state(rng);
      const Matrix4c ta = partial_transpose(rho, Subsystem::A);
      CHECK(max_abs(partial_transpose(ta, Subsystem::A) - rho) == 0.0);
      CHECK(max_abs(partial_transpose(ta, Subsystem::B) - rho.transpose()) == 0.0);
      // T_A and T_B differ by a full transpose, so the spectra agree.
      const auto ea = hermitian_eigenvalues(ta);
      const auto eb = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(ea[k] - eb[k]) <= 1e-14);
    }
  }
  SUBCASE("explicit index map for B") {
    Matrix4c m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = Complex(10 * r + c, 0);
    const Matrix4c pt = partial_transpose(m, Subsystem::B);
    CHECK(pt(0, 1).real() == 10.0);  // inside a diagonal block: plain transpose
    CHECK(pt(0, 3).real() == 12.0);  // off-diagonal block (0,1) transposed in place
    CHECK(pt(2, 1).real() == 30.0);
  }
}

TEST_CASE("characteristic polynomial coefficients") {
  const CharPolyCoeffs mixed = char_poly_coeffs(Matrix4c::Identity() / 4.0);
  CHECK(mixed.a == doctest::Approx(-1.0));
  CHECK(mixed.b == doctest::Approx(3.0 / 8.0));
  CHECK(mixed.c == doctest::Approx(-1.0 / 16.0));
  CHECK(mixed.d == doctest::Approx(1.0 / 256.0));

  Matrix4c pure = Matrix4c::Zero();
  pure(0, 0) = 1.0;
  const CharPolyCoeffs p = char_poly_coeffs(pure);
  CHECK(p.a == -1.0);
  CHECK(p.b == 0.0);
  CHECK(p.c == 0.0);
  CHECK(p.d == 0.0);

  CHECK(char_poly_coeffs(partial_transpose(bell(), Subsystem::B)).d == doctest::Approx(-1.0 / 16.0));
}

TEST_CASE("coefficients agree with determinant interpolation and the determinant") {
  RngStream rng(21);
  for (int i = 0; i < 300; ++i) {
    const Matrix4c pt = partial_transpose(random_state(rng), Subsystem::B);
    const CharPolyCoeffs k = char_poly_coeffs(pt);
    const auto ref = test::char_poly_by_interpolation(pt);
    CHECK(ref[0] == doctest::Approx(1.0));
    CHECK(std::abs(k.a - ref[1]) <= 1e-11);
    CHECK(std::abs(k.b - ref[2]) <= 1e-11);
    CHECK(std::abs(k.c - ref[3]) <= 1e-11);
    CHECK(std::abs(k.d - ref[4]) <= 1e-11);
    CHECK(std::abs(k.a + 1.0) <= 1e-12);
    CHECK(std::abs(k.d - pt.determinant().real()) <= 1e-12);
  }
}

TEST_CASE("depressed quartic") {
  const DepressedQuartic zero = depressed_quartic({-1.0, 3.0 / 8.0, -1.0 / 16.0, 1.0 / 256.0});
  CHECK(std::abs(zero.p) < 1e-16);
  CHECK(std::abs(zero.q) < 1e-16);
  CHECK(std::abs(zero.r) < 1e-16);

  const DepressedQuartic pure = depressed_quartic({-1.0, 0.0, 0.0, 0.0});
  CHECK(pure.p == -3.0 / 8.0);
  for (double tau : {0.75, -0.25}) CHECK(std::abs(pure.evaluate(tau)) < 1e-16);

  CHECK_THROWS_AS(depressed_quartic({-0.9, 0.0, 0.0, 0.0}), ArgumentError);

  RngStream rng(5);
  for (int i = 0; i < 100; ++i) {
    const Matrix4c pt = partial_transpose(random_state(rng), Subsystem::B);
    const CharPolyCoeffs k = char_poly_coeffs(pt);
    const DepressedQuartic dq = depressed_quartic(k);
    const auto lam = test::companion_roots({k.a, k.b, k.c, k.d});
    const auto tau = test::companion_roots({0.0, dq.p, dq.q, dq.r});
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(tau[j] + 0.25 - lam[j]) <= 1e-10);
  }
}

TEST_CASE("resolvent cubic") {
  SUBCASE("zero coefficients") {
    const ResolventRoots r = resolvent_roots({0.0, 0.0, 0.0});
    CHECK(r.branch_valid);
    for (const auto& g : r.gamma) CHECK(std::abs(g) == 0.0);
  }
  SUBCASE("pure state against the companion oracle") {
    // Spectrum {3/4, -1/4, -1/4, -1/4}: the resolvent is (g - 1/4)^3.
    const DepressedQuartic dq = depressed_quartic({-1.0, 0.0, 0.0, 0.0});
    const ResolventRoots r = resolvent_roots(dq);
    CHECK(r.branch_valid);
    for (const auto& g : r.gamma) CHECK(std::abs(g - 0.25) <= 1e-10);
    // A triple root limits the non-symmetric companion eigensolver to about
    // eps^(1/3), so the oracle is only held to that accuracy here.
    const auto ref = test::companion_roots({2.0 * dq.p, dq.p * dq.p - 4.0 * dq.r, -dq.q * dq.q});
    for (const auto& g : ref) CHECK(std::abs(g - 0.25) <= 1e-5);
  }
  SUBCASE("generic states against the companion oracle") {
    RngStream rng(30);
    for (int i = 0; i < 200; ++i) {
      const DepressedQuartic dq =
          depressed_quartic(char_poly_coeffs(partial_transpose(random_state(rng), Subsystem::B)));
      const ResolventRoots r = resolvent_roots(dq);
      std::vector<Complex> got(r.gamma.begin(), r.gamma.end());
      std::sort(got.begin(), got.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
      const auto ref = test::companion_roots({2.0 * dq.p, dq.p * dq.p - 4.0 * dq.r, -dq.q * dq.q});
      for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(got[j] - ref[j]) <= 1e-10);
    }
  }
  SUBCASE("product identity on random states") {
    RngStream rng(31);
    for (int i = 0; i < 500; ++i) {
      const DepressedQuartic dq =
          depressed_quartic(char_poly_coeffs(partial_transpose(random_state(rng), Subsystem::B)));
      const ResolventRoots r = resolvent_roots(dq);
      REQUIRE(r.branch_valid);
      const double prod = (r.gamma[0] * r.gamma[1] * r.gamma[2]).real();
      CHECK(std::abs(prod - dq.q * dq.q) <= 1e-9 * dq.q * dq.q);
    }
  }
  SUBCASE("a negative resolvent root invalidates the branch") {
    // tau^4 + 1 has no real roots; its resolvent g^3 - 4g has the root -2.
    const ResolventRoots r = resolvent_roots({0.0, 0.0, 1.0});
    CHECK_FALSE(r.branch_valid);
    CHECK_FALSE(eigenvalues_via_resolvent({0.0, 0.0, 1.0}).has_value());
  }
}

TEST_CASE("eigenvalues via the resolvent") {
  const auto flat = eigenvalues_via_resolvent({0.0, 0.0, 0.0});
  REQUIRE(flat.has_value());
  for (double l : *flat) CHECK(l == 0.25);

  const auto b = eigenvalues_via_resolvent(
      depressed_quartic(char_poly_coeffs(partial_transpose(bell(), Subsystem::B))));
  REQUIRE(b.has_value());
  CHECK(std::abs((*b)[0] + 0.5) <= 1e-10);
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs((*b)[k] - 0.5) <= 1e-10);

  RngStream rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Matrix4c pt = partial_transpose(random_state(rng), Subsystem::B);
    const auto ev = eigenvalues_via_resolvent(depressed_quartic(char_poly_coeffs(pt)));
    REQUIRE(ev.has_value());
    const auto ref = test::generic_eigenvalues(pt);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs((*ev)[k] - ref[k]) <= 1e-8);
  }
}

TEST_CASE("verdicts on known states") {
  const SeparabilityVerdict mixed = is_entangled(Matrix4c(Matrix4c::Identity() / 4.0));
  CHECK_FALSE(mixed.entangled);
  CHECK_FALSE(mixed.boundary);
  CHECK(mixed.d_value == doctest::Approx(1.0 / 256.0));
  CHECK(mixed.negative_count == 0);

  const SeparabilityVerdict b = is_entangled(bell());
  CHECK(b.entangled);
  CHECK(b.d_value == doctest::Approx(-1.0 / 16.0));
  CHECK(b.negative_count == 1);
  CHECK(b.min_eigenvalue == doctest::Approx(-0.5));
  CHECK(is_entangled(bell(), 1e-10, Subsystem::A).entangled);

  Matrix4c pure = Matrix4c::Zero();
  pure(0, 0) = 1.0;
  const SeparabilityVerdict edge = is_entangled(pure);
  CHECK_FALSE(edge.entangled);
  CHECK(edge.boundary);

  Matrix4c bad = Matrix4c::Identity() / 2.0;
  CHECK_THROWS_WITH_AS(is_entangled(bad), "trace invariant violated", ValidationError);
  CHECK_THROWS_AS(is_entangled(bell(), -1.0), ArgumentError);
}

TEST_CASE("product states are never entangled") {
  RngStream rng(17);
  for (int i = 0; i < 500; ++i) {
    const Matrix4c rho = kron(random_qubit(rng), random_qubit(rng));
    const SeparabilityVerdict v = is_entangled(rho);
    CHECK_FALSE(v.entangled);
    CHECK(v.d_value >= -1e-15);
  }
}

TEST_CASE("sign of d agrees with the eigenvalue verdict") {
  RngStream rng(71);
  int entangled = 0;
  for (int i = 0; i < 10000; ++i) {
    const Matrix4c rho = random_state(rng);
    const SeparabilityVerdict v = is_entangled(DensityMatrix::trusted(rho));
    REQUIRE(v.negative_count <= 1);
    const auto ev = test::generic_eigenvalues(partial_transpose(rho, Subsystem::B));
    const double prod = ev[0] * ev[1] * ev[2] * ev[3];
    if (std::abs(v.d_value) > 1e-10) {
      REQUIRE((v.d_value < 0.0) == (prod < 0.0));
      REQUIRE(v.entangled == (v.min_eigenvalue < 0.0));
    }
    entangled += v.entangled ? 1 : 0;
  }
  CHECK(entangled > 0);
  CHECK(entangled < 10000);
}

TEST_CASE("d is unchanged by the commuting tail factors") {
  RngStream rng(72);
  const auto p = spectrum_profile();
  for (int i = 0; i < 200; ++i) {
    const EulerAngles a = sample_haar_angles(rng, range_profile(Group::SU4, RangeKind::volume));
    const SpectrumAngles t{rng.uniform(p[0].lo, p[0].hi), rng.uniform(p[1].lo, p[1].hi),
                           rng.uniform(p[2].lo, p[2].hi)};
    ConjugationAngles alpha{};
    for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] = a[k];
    const double d12 = is_entangled(rho_full(alpha, t)).d_value;
    const double d15 = is_entangled(rho_from_unitary(compose(a), t)).d_value;
    CHECK(std::abs(d12 - d15) <= 1e-13);
  }
}
