#pragma once

// Raw entry points of each ISA variant; dispatch.cpp is the only caller.
// All ranges are [begin, end) sample indices into the planes.

#include <cstddef>

#include "su4/kernels.hpp"

namespace su4::kernels {

struct ConjugationPlanes {
  const double* cos[kConjugationFactors];
  const double* sin[kConjugationFactors];
  const double* diag[4];
  double* out[kMatrixPlanes];
};

struct CharPolyPlanes {
  const double* in[kMatrixPlanes];
  double* out[4];
};

namespace scalar_variant {
void conjugate_diagonal(const ConjugationPlanes& p, std::size_t begin, std::size_t end);
void char_poly(const CharPolyPlanes& p, Transpose t, std::size_t begin, std::size_t end);
}  // namespace scalar_variant

namespace avx2_variant {
void conjugate_diagonal(const ConjugationPlanes& p, std::size_t begin, std::size_t end);
void char_poly(const CharPolyPlanes& p, Transpose t, std::size_t begin, std::size_t end);
}  // namespace avx2_variant

}  // namespace su4::kernels
