#include "su4/euler.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "su4/errors.hpp"
#include "su4/su_algebra.hpp"

namespace su4 {

namespace {

constexpr std::array<int, 3> kSu2Factors{3, 2, 3};
constexpr std::array<int, 8> kSu3Factors{3, 2, 3, 5, 3, 2, 3, 8};
constexpr std::array<int, 15> kSu4Factors{3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15};

RangeProfile make_profile(Group group, RangeKind kind) {
  const double pi = kPi;
  const double half = kPi / 2.0;
  RangeProfile p{group, kind, {}};
  const bool cover = kind == RangeKind::covering;
  switch (group) {
    case Group::SU2:
      p.bounds = {{0, pi}, {0, half}, {0, cover ? 2 * pi : pi}};
      break;
    case Group::SU3:
      // alpha_7 .. alpha_14
      p.bounds = {{0, pi},
                  {0, half},
                  {0, cover ? 2 * pi : pi},
                  {0, half},
                  {0, pi},
                  {0, half},
                  {0, cover ? 2 * pi : pi},
                  {0, cover ? std::sqrt(3.0) * pi : pi / std::sqrt(3.0)}};
      break;
    case Group::SU4:
      p.bounds = {{0, pi},
                  {0, half},
                  {0, cover ? 2 * pi : pi},
                  {0, half},
                  {0, cover ? 2 * pi : pi},
                  {0, half},
                  {0, pi},
                  {0, half},
                  {0, cover ? 2 * pi : pi},
                  {0, half},
                  {0, pi},
                  {0, half},
                  {0, cover ? 2 * pi : pi},
                  {0, cover ? std::sqrt(3.0) * pi : pi / std::sqrt(3.0)},
                  {0, cover ? 2.0 * std::sqrt(2.0 / 3.0) * pi : pi / std::sqrt(6.0)}};
      break;
  }
  return p;
}

Matrix4c product(std::span<const int> generators, std::span<const double> angles) {
  Matrix4c u = Matrix4c::Identity();
  for (std::size_t f = 0; f < generators.size(); ++f) u = u * exp_generator(generators[f], angles[f]);
  return u;
}

}  // namespace

EulerAngles::EulerAngles(Group group, std::vector<double> values)
    : group_(group), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(dimension(group_))) {
    throw ArgumentError(std::string("expected ") + std::to_string(dimension(group_)) +
                        " Euler angles for " + to_string(group_) + ", got " +
                        std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ArgumentError("Euler angles must be finite");
  }
}

EulerAngles EulerAngles::zeros(Group group) {
  return EulerAngles(group, std::vector<double>(static_cast<std::size_t>(dimension(group)), 0.0));
}

std::span<const int> factor_generators(Group group) {
  switch (group) {
    case Group::SU2: return kSu2Factors;
    case Group::SU3: return kSu3Factors;
    case Group::SU4: return kSu4Factors;
  }
  return {};
}

const char* to_string(RangeKind kind) {
  return kind == RangeKind::volume ? "volume" : "covering";
}

bool RangeProfile::contains(const EulerAngles& angles) const {
  if (angles.group() != group) return false;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (!bounds[i].contains(angles[i])) return false;
  }
  return true;
}

const RangeProfile& range_profile(Group group, RangeKind kind) {
  static const std::array<RangeProfile, 6> profiles{
      make_profile(Group::SU2, RangeKind::volume), make_profile(Group::SU2, RangeKind::covering),
      make_profile(Group::SU3, RangeKind::volume), make_profile(Group::SU3, RangeKind::covering),
      make_profile(Group::SU4, RangeKind::volume), make_profile(Group::SU4, RangeKind::covering)};
  const std::size_t g = static_cast<std::size_t>(group);
  return profiles[2 * g + (kind == RangeKind::covering ? 1 : 0)];
}

double GroupElement::unitarity_error() const {
  return max_abs(m_.adjoint() * m_ - Matrix4c::Identity());
}

double GroupElement::determinant_error() const { return std::abs(m_.determinant() - 1.0); }

GroupElement compose_su2(double mu, double nu, double xi) {
  const std::array<double, 3> a{mu, nu, xi};
  return GroupElement(product(kSu2Factors, a));
}

GroupElement compose_su3(const EulerAngles& angles) {
  if (angles.group() != Group::SU3) throw ArgumentError("compose_su3 needs SU3 angles");
  return GroupElement(product(kSu3Factors, angles.values()));
}

GroupElement compose_su4(const EulerAngles& angles) {
  if (angles.group() != Group::SU4) throw ArgumentError("compose_su4 needs SU4 angles");
  return GroupElement(product(kSu4Factors, angles.values()));
}

GroupElement compose(const EulerAngles& angles) {
  return GroupElement(product(factor_generators(angles.group()), angles.values()));
}

}  // namespace su4
