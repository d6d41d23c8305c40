#include <cstdlib>
#include <string_view>

#include "kernels/variants.hpp"
#include "su4/errors.hpp"

namespace su4::kernels {

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SU4_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("SU4_KERNEL_ISA")) {
      const std::string_view want(env);
      if (want == "scalar") return Isa::scalar;
      if (want == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
      return Isa::scalar;
    }
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ArgumentError(what);
}

Isa resolve(Isa isa) {
  if (!isa_supported(isa)) throw ArgumentError("requested kernel ISA is not available on this machine");
  return isa;
}

}  // namespace

void conjugate_diagonal(const PlaneBatch& trig, const PlaneBatch& diag, PlaneBatch& rho, Isa isa) {
  require(trig.planes() == 2 * kConjugationFactors, "conjugate_diagonal: trig needs 24 planes");
  require(diag.planes() == 4, "conjugate_diagonal: diag needs 4 planes");
  require(trig.count() == diag.count(), "conjugate_diagonal: batch sizes differ");
  const std::size_t n = trig.count();
  if (rho.planes() != kMatrixPlanes || rho.count() != n) rho = PlaneBatch(kMatrixPlanes, n);

  ConjugationPlanes p{};
  for (std::size_t f = 0; f < kConjugationFactors; ++f) {
    p.cos[f] = trig.plane(f).data();
    p.sin[f] = trig.plane(kConjugationFactors + f).data();
  }
  for (std::size_t r = 0; r < 4; ++r) p.diag[r] = diag.plane(r).data();
  for (std::size_t e = 0; e < kMatrixPlanes; ++e) p.out[e] = rho.plane(e).data();

  if (resolve(isa) == Isa::avx2) {
    avx2_variant::conjugate_diagonal(p, 0, n);
  } else {
    scalar_variant::conjugate_diagonal(p, 0, n);
  }
}

void char_poly(const PlaneBatch& matrices, Transpose transpose, PlaneBatch& coeffs, Isa isa) {
  require(matrices.planes() == kMatrixPlanes, "char_poly: matrices need 32 planes");
  const std::size_t n = matrices.count();
  if (coeffs.planes() != 4 || coeffs.count() != n) coeffs = PlaneBatch(4, n);

  CharPolyPlanes p{};
  for (std::size_t e = 0; e < kMatrixPlanes; ++e) p.in[e] = matrices.plane(e).data();
  for (std::size_t k = 0; k < 4; ++k) p.out[k] = coeffs.plane(k).data();

  if (resolve(isa) == Isa::avx2) {
    avx2_variant::char_poly(p, transpose, 0, n);
  } else {
    scalar_variant::char_poly(p, transpose, 0, n);
  }
}

void store_matrix(const Matrix4c& m, PlaneBatch& batch, std::size_t s) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto e = static_cast<std::size_t>(r * 4 + c);
      batch.at(e, s) = m(r, c).real();
      batch.at(16 + e, s) = m(r, c).imag();
    }
  }
}

Matrix4c load_matrix(const PlaneBatch& batch, std::size_t s) {
  Matrix4c m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto e = static_cast<std::size_t>(r * 4 + c);
      m(r, c) = Complex(batch.at(e, s), batch.at(16 + e, s));
    }
  }
  return m;
}

}  // namespace su4::kernels
