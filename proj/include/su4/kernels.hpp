#pragma once

// Batched arithmetic kernels over structure-of-arrays data.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant chosen at runtime. Both variants evaluate the same expression tree
// in the same order without fused multiply-adds, so they agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "su4/types.hpp"

namespace su4::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// True when the variant was compiled in and the CPU supports it.
bool isa_supported(Isa isa);

/// Best supported variant, unless SU4_KERNEL_ISA=scalar|avx2 says otherwise
/// (an unsupported request falls back to scalar).
Isa active_isa();

/// `planes` contiguous planes of `count` doubles; element s of plane p lives at
/// p * count + s.
class PlaneBatch {
 public:
  PlaneBatch() = default;
  PlaneBatch(std::size_t planes, std::size_t count) : planes_(planes), count_(count), data_(planes * count) {}

  std::size_t planes() const { return planes_; }
  std::size_t count() const { return count_; }

  std::span<double> plane(std::size_t p) { return {data_.data() + p * count_, count_}; }
  std::span<const double> plane(std::size_t p) const { return {data_.data() + p * count_, count_}; }

  double& at(std::size_t p, std::size_t s) { return data_[p * count_ + s]; }
  double at(std::size_t p, std::size_t s) const { return data_[p * count_ + s]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

 private:
  std::size_t planes_ = 0;
  std::size_t count_ = 0;
  std::vector<double> data_;
};

/// Number of conjugation factors (alpha_1..alpha_12).
inline constexpr std::size_t kConjugationFactors = 12;

/// Planes of a complex 4x4 matrix batch: 16 real planes then 16 imaginary
/// planes, row-major entry order.
inline constexpr std::size_t kMatrixPlanes = 32;

/// rho = V diag(p) V^dagger with V the twelve-factor Euler product.
///   trig: 24 planes, cos(alpha_f) in plane f and sin(alpha_f) in plane 12 + f
///   diag: 4 planes, the diagonal of rho_d
///   rho:  kMatrixPlanes planes (resized by the call)
void conjugate_diagonal(const PlaneBatch& trig, const PlaneBatch& diag, PlaneBatch& rho,
                        Isa isa = active_isa());

enum class Transpose { none, a, b };

/// Characteristic-polynomial coefficients (a, b, c, d) of lambda^4 + a
/// lambda^3 + b lambda^2 + c lambda + d for each matrix, after applying the
/// requested partial transpose. Faddeev-LeVerrier trace recursion; real parts
/// only, so inputs are expected to be Hermitian.
///   coeffs: 4 planes a, b, c, d (resized by the call)
void char_poly(const PlaneBatch& matrices, Transpose transpose, PlaneBatch& coeffs,
               Isa isa = active_isa());

/// Helpers for moving single matrices in and out of batches.
void store_matrix(const Matrix4c& m, PlaneBatch& batch, std::size_t s);
Matrix4c load_matrix(const PlaneBatch& batch, std::size_t s);

}  // namespace su4::kernels
