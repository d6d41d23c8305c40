#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace su4 {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Vector4d = Eigen::Vector4d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

enum class Group { SU2, SU3, SU4 };

/// Which qubit of a two-qubit operator a partial transpose acts on. Basis
/// index is 2 * q_A + q_B.
enum class Subsystem { A, B };

/// Number of Euler angles (= group dimension) for each group.
constexpr int dimension(Group g) {
  switch (g) {
    case Group::SU2: return 3;
    case Group::SU3: return 8;
    case Group::SU4: return 15;
  }
  return 0;
}

const char* to_string(Group g);

/// Largest absolute entry of a matrix expression.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace su4
