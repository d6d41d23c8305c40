#include <immintrin.h>

#include <array>
#include <cstddef>

#include "kernels/variants.hpp"

namespace su4::kernels {
namespace {

struct Lane {
  static constexpr std::size_t width = 4;
  __m256d v;

  static Lane load(const double* p) { return {_mm256_loadu_pd(p)}; }
  static Lane broadcast(double x) { return {_mm256_set1_pd(x)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }
};

inline Lane operator+(Lane a, Lane b) { return {_mm256_add_pd(a.v, b.v)}; }
inline Lane operator-(Lane a, Lane b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline Lane operator*(Lane a, Lane b) { return {_mm256_mul_pd(a.v, b.v)}; }
inline Lane operator/(Lane a, Lane b) { return {_mm256_div_pd(a.v, b.v)}; }

#include "kernels/impl.hpp"

}  // namespace

namespace avx2_variant {

// Whole groups of four go through the vector body; the remainder is handed to
// the scalar variant, which computes the same bits.
void conjugate_diagonal(const ConjugationPlanes& p, std::size_t begin, std::size_t end) {
  std::size_t s = begin;
  for (; s + Lane::width <= end; s += Lane::width) body::conjugate_lanes<Lane>(p.cos, p.sin, p.diag, p.out, s);
  scalar_variant::conjugate_diagonal(p, s, end);
}

void char_poly(const CharPolyPlanes& p, Transpose t, std::size_t begin, std::size_t end) {
  std::size_t s = begin;
  for (; s + Lane::width <= end; s += Lane::width) body::char_poly_lanes<Lane>(p.in, t, p.out, s);
  scalar_variant::char_poly(p, t, s, end);
}

}  // namespace avx2_variant
}  // namespace su4::kernels
