// Kernel bodies shared by every ISA variant. Include from exactly one
// translation unit per variant, inside an anonymous namespace, so each
// variant gets its own internally-linked instantiation compiled with its
// own target flags.
//
// V is a lane type: a one-double wrapper for the scalar path or a vector
// wrapper. It must provide V::width, V::load(const double*),
// V::broadcast(double), store(double*) and + - * / with IEEE semantics.

// No include guard and no includes: the including file provides <array>,
// <cstddef> and su4/kernels.hpp, and opens the enclosing namespaces.

namespace body {

// Generator of each conjugation factor: 3 = phase on (0,1), 2/5/10 = real
// rotation on (0,1)/(0,2)/(0,3).
inline constexpr std::array<int, kConjugationFactors> kConjugationGenerators{3, 2, 3, 5, 3, 10,
                                                                             3, 2, 3, 5, 3, 2};

template <class V>
struct Mat {
  V re[16];
  V im[16];
};

template <class V>
inline void rotate_rows(Mat<V>& m, int p, int q, V c, V s) {
  for (int j = 0; j < 4; ++j) {
    const V pr = m.re[p * 4 + j], pi = m.im[p * 4 + j];
    const V qr = m.re[q * 4 + j], qi = m.im[q * 4 + j];
    m.re[p * 4 + j] = c * pr + s * qr;
    m.im[p * 4 + j] = c * pi + s * qi;
    m.re[q * 4 + j] = c * qr - s * pr;
    m.im[q * 4 + j] = c * qi - s * pi;
  }
}

template <class V>
inline void rotate_cols(Mat<V>& m, int p, int q, V c, V s) {
  for (int i = 0; i < 4; ++i) {
    const V pr = m.re[i * 4 + p], pi = m.im[i * 4 + p];
    const V qr = m.re[i * 4 + q], qi = m.im[i * 4 + q];
    m.re[i * 4 + p] = c * pr + s * qr;
    m.im[i * 4 + p] = c * pi + s * qi;
    m.re[i * 4 + q] = c * qr - s * pr;
    m.im[i * 4 + q] = c * qi - s * pi;
  }
}

// (x + iy)(c + is)
template <class V>
inline void mul_phase(V& x, V& y, V c, V s) {
  const V xr = x * c - y * s;
  const V yr = x * s + y * c;
  x = xr;
  y = yr;
}

// diag(e^{ia}, e^{-ia}, 1, 1) * m * diag(e^{-ia}, e^{ia}, 1, 1)
template <class V>
inline void phase_01(Mat<V>& m, V c, V s) {
  const V ns = V::broadcast(0.0) - s;
  for (int j = 0; j < 4; ++j) {
    mul_phase(m.re[j], m.im[j], c, s);
    mul_phase(m.re[4 + j], m.im[4 + j], c, ns);
  }
  for (int i = 0; i < 4; ++i) {
    mul_phase(m.re[i * 4], m.im[i * 4], c, ns);
    mul_phase(m.re[i * 4 + 1], m.im[i * 4 + 1], c, s);
  }
}

template <class V>
inline void conjugate_lanes(const double* const* cos_planes, const double* const* sin_planes,
                            const double* const* diag_planes, double* const* out_planes,
                            std::size_t s) {
  Mat<V> m;
  for (int e = 0; e < 16; ++e) {
    m.re[e] = V::broadcast(0.0);
    m.im[e] = V::broadcast(0.0);
  }
  for (int r = 0; r < 4; ++r) m.re[r * 5] = V::load(diag_planes[r] + s);

  // Innermost factor first: rho <- F rho F^dagger for F = F_12, ..., F_1.
  for (int f = static_cast<int>(kConjugationFactors) - 1; f >= 0; --f) {
    const V c = V::load(cos_planes[f] + s);
    const V sn = V::load(sin_planes[f] + s);
    switch (kConjugationGenerators[static_cast<std::size_t>(f)]) {
      case 3:
        phase_01(m, c, sn);
        break;
      case 2:
        rotate_rows(m, 0, 1, c, sn);
        rotate_cols(m, 0, 1, c, sn);
        break;
      case 5:
        rotate_rows(m, 0, 2, c, sn);
        rotate_cols(m, 0, 2, c, sn);
        break;
      case 10:
        rotate_rows(m, 0, 3, c, sn);
        rotate_cols(m, 0, 3, c, sn);
        break;
      default:
        break;
    }
  }
  for (int e = 0; e < 16; ++e) {
    m.re[e].store(out_planes[e] + s);
    m.im[e].store(out_planes[16 + e] + s);
  }
}

// Source index of entry (r, c) after the requested partial transpose. With
// r = 2 a + b and c = 2 a' + b', T_B swaps b and b', T_A swaps a and a'.
constexpr int transposed_source(Transpose t, int r, int c) {
  const int a = r / 2, b = r % 2, a2 = c / 2, b2 = c % 2;
  switch (t) {
    case Transpose::none: return r * 4 + c;
    case Transpose::b: return (2 * a + b2) * 4 + (2 * a2 + b);
    case Transpose::a: return (2 * a2 + b) * 4 + (2 * a + b2);
  }
  return r * 4 + c;
}

// out = x * y
template <class V>
inline void matmul(const Mat<V>& x, const Mat<V>& y, Mat<V>& out) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      V sr = x.re[i * 4] * y.re[j] - x.im[i * 4] * y.im[j];
      V si = x.re[i * 4] * y.im[j] + x.im[i * 4] * y.re[j];
      for (int k = 1; k < 4; ++k) {
        sr = sr + (x.re[i * 4 + k] * y.re[k * 4 + j] - x.im[i * 4 + k] * y.im[k * 4 + j]);
        si = si + (x.re[i * 4 + k] * y.im[k * 4 + j] + x.im[i * 4 + k] * y.re[k * 4 + j]);
      }
      out.re[i * 4 + j] = sr;
      out.im[i * 4 + j] = si;
    }
  }
}

template <class V>
inline V trace_re(const Mat<V>& m) {
  return ((m.re[0] + m.re[5]) + m.re[10]) + m.re[15];
}

// Re tr(x * y)
template <class V>
inline V trace_product_re(const Mat<V>& x, const Mat<V>& y) {
  V acc = V::broadcast(0.0);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      acc = acc + (x.re[i * 4 + k] * y.re[k * 4 + i] - x.im[i * 4 + k] * y.im[k * 4 + i]);
    }
  }
  return acc;
}

template <class V>
inline void add_diagonal(Mat<V>& m, V v) {
  for (int r = 0; r < 4; ++r) m.re[r * 5] = m.re[r * 5] + v;
}

template <class V>
inline void char_poly_lanes(const double* const* in_planes, Transpose t, double* const* out_planes,
                            std::size_t s) {
  Mat<V> a;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int src = transposed_source(t, r, c);
      a.re[r * 4 + c] = V::load(in_planes[src] + s);
      a.im[r * 4 + c] = V::load(in_planes[16 + src] + s);
    }
  }
  // Faddeev-LeVerrier: M_1 = A, c_1 = -tr M_1; M_k = A (M_{k-1} + c_{k-1} I),
  // c_k = -tr(M_k) / k.
  const V c1 = V::broadcast(0.0) - trace_re(a);

  Mat<V> work = a;
  add_diagonal(work, c1);
  Mat<V> m2;
  matmul(a, work, m2);
  const V c2 = (V::broadcast(0.0) - trace_re(m2)) / V::broadcast(2.0);

  add_diagonal(m2, c2);
  Mat<V> m3;
  matmul(a, m2, m3);
  const V c3 = (V::broadcast(0.0) - trace_re(m3)) / V::broadcast(3.0);

  add_diagonal(m3, c3);
  const V c4 = (V::broadcast(0.0) - trace_product_re(a, m3)) / V::broadcast(4.0);

  c1.store(out_planes[0] + s);
  c2.store(out_planes[1] + s);
  c3.store(out_planes[2] + s);
  c4.store(out_planes[3] + s);
}

}  // namespace body
