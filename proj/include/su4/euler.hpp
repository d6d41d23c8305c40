#pragma once

// Euler-angle composition of SU(2), SU(3) and SU(4) elements and the two
// parameter-range tables (volume ranges and covering ranges).

#include <array>
#include <span>
#include <vector>

#include "su4/types.hpp"

namespace su4 {

/// Ordered Euler angles (radians) for one of the three groups.
///
///   SU2: (mu, nu, xi)
///   SU3: alpha_7 .. alpha_14
///   SU4: alpha_1 .. alpha_15
///
/// Values are stored 0-based in that order. Angles outside the range
/// profiles are accepted; the parametrization is periodic.
class EulerAngles {
 public:
  /// Throws ArgumentError if the length does not match the group or any value
  /// is not finite.
  EulerAngles(Group group, std::vector<double> values);

  static EulerAngles zeros(Group group);

  Group group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  Group group_;
  std::vector<double> values_;
};

/// Generator index of each Euler factor, left to right.
std::span<const int> factor_generators(Group group);

enum class RangeKind { volume, covering };

const char* to_string(RangeKind kind);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Per-angle bounds. The volume ranges integrate to the group volume divided
/// by the center factor; the covering ranges cover the whole group.
struct RangeProfile {
  Group group;
  RangeKind kind;
  std::vector<Interval> bounds;

  bool contains(const EulerAngles& angles) const;
};

const RangeProfile& range_profile(Group group, RangeKind kind);

/// Special unitary 4x4 matrix. SU(2) and SU(3) elements sit in the top-left
/// block with identity padding.
class GroupElement {
 public:
  explicit GroupElement(const Matrix4c& m) : m_(m) {}

  const Matrix4c& matrix() const { return m_; }

  /// max |U^dagger U - I|
  double unitarity_error() const;
  /// |det U - 1|
  double determinant_error() const;

 private:
  Matrix4c m_;
};

/// e^{i l3 mu} e^{i l2 nu} e^{i l3 xi}
GroupElement compose_su2(double mu, double nu, double xi);

/// e^{i l3 a7} e^{i l2 a8} e^{i l3 a9} e^{i l5 a10} D(a11, a12, a13) e^{i l8 a14}
GroupElement compose_su3(const EulerAngles& angles);

/// The fifteen-factor product with generators 3,2,3,5,3,10,3,2,3,5,3,2,3,8,15.
GroupElement compose_su4(const EulerAngles& angles);

/// Dispatches on angles.group().
GroupElement compose(const EulerAngles& angles);

}  // namespace su4
