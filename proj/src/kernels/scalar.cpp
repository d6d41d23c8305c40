#include <array>
#include <cstddef>

#include "kernels/variants.hpp"

namespace su4::kernels {
namespace {

struct Lane {
  static constexpr std::size_t width = 1;
  double v;

  static Lane load(const double* p) { return {*p}; }
  static Lane broadcast(double x) { return {x}; }
  void store(double* p) const { *p = v; }
};

inline Lane operator+(Lane a, Lane b) { return {a.v + b.v}; }
inline Lane operator-(Lane a, Lane b) { return {a.v - b.v}; }
inline Lane operator*(Lane a, Lane b) { return {a.v * b.v}; }
inline Lane operator/(Lane a, Lane b) { return {a.v / b.v}; }

#include "kernels/impl.hpp"

}  // namespace

namespace scalar_variant {

void conjugate_diagonal(const ConjugationPlanes& p, std::size_t begin, std::size_t end) {
  for (std::size_t s = begin; s < end; ++s) body::conjugate_lanes<Lane>(p.cos, p.sin, p.diag, p.out, s);
}

void char_poly(const CharPolyPlanes& p, Transpose t, std::size_t begin, std::size_t end) {
  for (std::size_t s = begin; s < end; ++s) body::char_poly_lanes<Lane>(p.in, t, p.out, s);
}

}  // namespace scalar_variant
}  // namespace su4::kernels
