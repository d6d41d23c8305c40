#include "su4/su_algebra.hpp"

#include <cmath>
#include <string>

#include "su4/errors.hpp"

namespace su4 {

const char* to_string(Group g) {
  switch (g) {
    case Group::SU2: return "su2";
    case Group::SU3: return "su3";
    case Group::SU4: return "su4";
  }
  return "?";
}

namespace {

void check_index(int index) {
  if (index < 1 || index > kNumGenerators) {
    throw ArgumentError("index out of range 1..15 (got " + std::to_string(index) + ")");
  }
}

// Off-diagonal generators in index order: (p, q, imaginary).
struct OffDiagonal {
  int index, p, q;
  bool imaginary;
};

constexpr std::array<OffDiagonal, 12> kOffDiagonal{{
    {1, 0, 1, false},  {2, 0, 1, true},   {4, 0, 2, false},  {5, 0, 2, true},
    {6, 1, 2, false},  {7, 1, 2, true},   {9, 0, 3, false},  {10, 0, 3, true},
    {11, 1, 3, false}, {12, 1, 3, true},  {13, 2, 3, false}, {14, 2, 3, true},
}};

std::array<double, 4> diagonal_entries(int index) {
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  switch (index) {
    case 3: return {1.0, -1.0, 0.0, 0.0};
    case 8: return {s3, s3, -2.0 * s3, 0.0};
    case 15: return {s6, s6, s6, -3.0 * s6};
    default: return {};
  }
}

Matrix4c build_generator(int index) {
  Matrix4c m = Matrix4c::Zero();
  const GeneratorClass cls = generator_class(index);
  if (cls.kind == GeneratorKind::diagonal) {
    for (int r = 0; r < 4; ++r) m(r, r) = cls.diagonal[r];
    return m;
  }
  const auto [p, q] = cls.support;
  if (cls.imaginary) {
    m(p, q) = Complex(0.0, -1.0);
    m(q, p) = Complex(0.0, 1.0);
  } else {
    m(p, q) = 1.0;
    m(q, p) = 1.0;
  }
  return m;
}

std::size_t flat(int i, int j, int k) {
  return static_cast<std::size_t>(((i - 1) * kNumGenerators + (j - 1)) * kNumGenerators + (k - 1));
}

}  // namespace

AlgebraElement::AlgebraElement(const Matrix4c& m, double tol) : m_(m) {
  if (max_abs(m - m.adjoint()) > tol) throw ArgumentError("algebra element is not Hermitian");
  if (std::abs(m.trace()) > tol) throw ArgumentError("algebra element is not traceless");
}

GeneratorClass generator_class(int index) {
  check_index(index);
  if (index == 3 || index == 8 || index == 15) {
    return GeneratorClass{GeneratorKind::diagonal, {0, 3}, false, diagonal_entries(index)};
  }
  for (const auto& od : kOffDiagonal) {
    if (od.index == index) {
      return GeneratorClass{GeneratorKind::embedded_rotation, {od.p, od.q}, od.imaginary, {}};
    }
  }
  throw ArgumentError("unreachable generator index");
}

const AlgebraElement& gell_mann(int index) {
  static const std::vector<AlgebraElement> basis = [] {
    std::vector<AlgebraElement> out;
    out.reserve(kNumGenerators);
    for (int i = 1; i <= kNumGenerators; ++i) out.emplace_back(build_generator(i));
    return out;
  }();
  check_index(index);
  return basis[static_cast<std::size_t>(index - 1)];
}

double pairing(int i, int j) {
  return (gell_mann(i).matrix() * gell_mann(j).matrix()).trace().real();
}

Matrix4c commutator(const Matrix4c& a, const Matrix4c& b) { return a * b - b * a; }

StructureConstants::StructureConstants() {
  for (int i = 1; i <= kNumGenerators; ++i) {
    for (int j = 1; j <= kNumGenerators; ++j) {
      const Matrix4c c = commutator(gell_mann(i).matrix(), gell_mann(j).matrix());
      for (int k = 1; k <= kNumGenerators; ++k) {
        const Complex v = (c * gell_mann(k).matrix()).trace() / Complex(0.0, 4.0);
        if (std::abs(v.imag()) > 1e-12) {
          throw ConsistencyError("structure constant f(" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 ") has an imaginary residue");
        }
        f_[flat(i, j, k)] = v.real();
      }
    }
  }
}

const StructureConstants& StructureConstants::instance() {
  static const StructureConstants table;
  return table;
}

double StructureConstants::operator()(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  return f_[flat(i, j, k)];
}

std::vector<StructureConstants::Entry> StructureConstants::nonzero_ordered() const {
  std::vector<Entry> out;
  for (int i = 1; i <= kNumGenerators; ++i)
    for (int j = i + 1; j <= kNumGenerators; ++j)
      for (int k = j + 1; k <= kNumGenerators; ++k) {
        const double v = f_[flat(i, j, k)];
        if (std::abs(v) > 1e-14) out.push_back({i, j, k, v});
      }
  return out;
}

Matrix4c StructureConstants::reconstruct_commutator(int i, int j) const {
  Matrix4c out = Matrix4c::Zero();
  for (int k = 1; k <= kNumGenerators; ++k) {
    const double f = (*this)(i, j, k);
    if (f != 0.0) out += Complex(0.0, 2.0 * f) * gell_mann(k).matrix();
  }
  return out;
}

double structure_constant(int i, int j, int k) { return StructureConstants::instance()(i, j, k); }

Matrix4c exp_generator(int index, double angle) {
  if (!std::isfinite(angle)) throw ArgumentError("exp_generator: angle must be finite");
  const GeneratorClass cls = generator_class(index);
  Matrix4c u = Matrix4c::Identity();
  if (cls.kind == GeneratorKind::diagonal) {
    for (int r = 0; r < 4; ++r) u(r, r) = std::polar(1.0, angle * cls.diagonal[r]);
    return u;
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const auto [p, q] = cls.support;
  u(p, p) = c;
  u(q, q) = c;
  if (cls.imaginary) {
    // i * lambda = |p><q| - |q><p|
    u(p, q) = s;
    u(q, p) = -s;
  } else {
    u(p, q) = Complex(0.0, s);
    u(q, p) = Complex(0.0, s);
  }
  return u;
}

bool in_k_subalgebra(int index) {
  check_index(index);
  return index <= 8 || index == 15;
}

bool ClosureReport::all_ok() const { return failures() == 0; }

int ClosureReport::failures() const {
  int n = 0;
  for (const auto& p : pairs) n += p.ok ? 0 : 1;
  return n;
}

ClosureReport cartan_closure_check() {
  const auto& f = StructureConstants::instance();
  ClosureReport report;
  for (int i = 1; i <= kNumGenerators; ++i) {
    for (int j = i + 1; j <= kNumGenerators; ++j) {
      const bool ki = in_k_subalgebra(i);
      const bool kj = in_k_subalgebra(j);
      ClosureReport::Pair pair{i, j, ClosureReport::Relation::kk_in_k, {}, true};
      bool want_k = true;
      if (ki && kj) {
        pair.relation = ClosureReport::Relation::kk_in_k;
      } else if (!ki && !kj) {
        pair.relation = ClosureReport::Relation::pp_in_k;
      } else {
        pair.relation = ClosureReport::Relation::kp_in_p;
        want_k = false;
      }
      for (int k = 1; k <= kNumGenerators; ++k) {
        if (std::abs(f(i, j, k)) <= 1e-14) continue;
        pair.support.push_back(k);
        if (in_k_subalgebra(k) != want_k) pair.ok = false;
      }
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

}  // namespace su4
