#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "su4/errors.hpp"
#include "su4/euler.hpp"
#include "su4/rng.hpp"
#include "su4/su_algebra.hpp"

using namespace su4;

namespace {

std::vector<double> random_angles(RngStream& rng, Group g) {
  const RangeProfile& p = range_profile(g, RangeKind::covering);
  std::vector<double> v;
  for (const auto& iv : p.bounds) v.push_back(rng.uniform(iv.lo, iv.hi));
  return v;
}

}  // namespace

TEST_CASE("angle vectors are validated") {
  CHECK_THROWS_AS(EulerAngles(Group::SU4, std::vector<double>(14, 0.0)), ArgumentError);
  CHECK_THROWS_AS(EulerAngles(Group::SU2, {0.0, std::nan(""), 0.0}), ArgumentError);
  CHECK_THROWS_AS(EulerAngles(Group::SU3, {0, 0, 0, 0, 0, 0, 0, INFINITY}), ArgumentError);
  CHECK(EulerAngles::zeros(Group::SU3).size() == 8);
  CHECK(factor_generators(Group::SU4).size() == 15);
  CHECK(factor_generators(Group::SU4)[5] == 10);
}

TEST_CASE("zero angles give the identity") {
  for (Group g : {Group::SU2, Group::SU3, Group::SU4}) {
    CHECK(max_abs(compose(EulerAngles::zeros(g)).matrix() - Matrix4c::Identity()) == 0.0);
  }
}

TEST_CASE("SU(2) closed form") {
  const double mu = 0.7, nu = 0.4, xi = -1.3;
  const Matrix4c u = compose_su2(mu, nu, xi).matrix();
  const Complex ep = std::exp(kI * (mu + xi));
  const Complex em = std::exp(kI * (mu - xi));
  CHECK(std::abs(u(0, 0) - ep * std::cos(nu)) < 1e-15);
  CHECK(std::abs(u(0, 1) - em * std::sin(nu)) < 1e-15);
  CHECK(std::abs(u(1, 0) + std::conj(em) * std::sin(nu)) < 1e-15);
  CHECK(std::abs(u(1, 1) - std::conj(ep) * std::cos(nu)) < 1e-15);
  CHECK(std::abs(u(2, 2) - 1.0) == 0.0);
  CHECK(std::abs(u(3, 3) - 1.0) == 0.0);
}

TEST_CASE("products agree with series exponentials and stay special unitary") {
  RngStream rng(11);
  for (Group g : {Group::SU2, Group::SU3, Group::SU4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const EulerAngles a(g, random_angles(rng, g));
      Matrix4c expected = Matrix4c::Identity();
      const auto gens = factor_generators(g);
      for (std::size_t f = 0; f < gens.size(); ++f) {
        expected = expected * test::expm_taylor(kI * a[f] * gell_mann(gens[f]).matrix());
      }
      const GroupElement u = compose(a);
      CHECK(max_abs(u.matrix() - expected) <= 1e-13);
      CHECK(u.unitarity_error() <= 1e-14);
      CHECK(u.determinant_error() <= 1e-14);
    }
  }
}

TEST_CASE("SU(3) elements leave the fourth basis vector alone") {
  RngStream rng(5);
  const Matrix4c u = compose_su3(EulerAngles(Group::SU3, random_angles(rng, Group::SU3))).matrix();
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(u(i, 3)) == 0.0);
    CHECK(std::abs(u(3, i)) == 0.0);
  }
  CHECK(std::abs(u(3, 3) - 1.0) == 0.0);
  CHECK_THROWS_AS(compose_su3(EulerAngles::zeros(Group::SU4)), ArgumentError);
}

TEST_CASE("range profiles") {
  const double pi = kPi;
  const RangeProfile& v4 = range_profile(Group::SU4, RangeKind::volume);
  const RangeProfile& c4 = range_profile(Group::SU4, RangeKind::covering);
  REQUIRE(v4.bounds.size() == 15);
  CHECK(v4.bounds[0].hi == pi);
  CHECK(v4.bounds[1].hi == pi / 2.0);
  CHECK(v4.bounds[13].hi == doctest::Approx(pi / std::sqrt(3.0)));
  CHECK(v4.bounds[14].hi == doctest::Approx(pi / std::sqrt(6.0)));
  CHECK(c4.bounds[2].hi == 2.0 * pi);
  CHECK(c4.bounds[13].hi == doctest::Approx(std::sqrt(3.0) * pi));
  CHECK(c4.bounds[14].hi == doctest::Approx(2.0 * std::sqrt(2.0 / 3.0) * pi));
  for (std::size_t i = 0; i < 15; ++i) {
    CHECK(v4.bounds[i].lo == 0.0);
    CHECK(c4.bounds[i].hi >= v4.bounds[i].hi);
  }
  CHECK(range_profile(Group::SU2, RangeKind::covering).bounds[2].hi == 2.0 * pi);
  CHECK(v4.contains(EulerAngles::zeros(Group::SU4)));
  CHECK_FALSE(v4.contains(EulerAngles::zeros(Group::SU3)));
}
