#pragma once

// Gell-Mann basis of su(4), its structure constants, and closed-form
// exponentials of single generators.
//
// Generators are indexed 1..15 throughout, matching the usual physics
// labelling lambda_1 .. lambda_15.

#include <array>
#include <vector>

#include "su4/types.hpp"

namespace su4 {

inline constexpr int kNumGenerators = 15;

/// Hermitian, traceless 4x4 matrix.
class AlgebraElement {
 public:
  /// Validates hermiticity and tracelessness within `tol`; throws
  /// ArgumentError otherwise.
  explicit AlgebraElement(const Matrix4c& m, double tol = 1e-14);

  const Matrix4c& matrix() const { return m_; }

 private:
  Matrix4c m_;
};

enum class GeneratorKind {
  diagonal,          // lambda_3, lambda_8, lambda_15
  embedded_rotation  // one off-diagonal pair (p, q)
};

/// How a generator acts, which is enough to exponentiate it in closed form.
struct GeneratorClass {
  GeneratorKind kind;
  /// Rows/columns touched by an embedded rotation (0-based, p < q). For a
  /// diagonal generator this is {0, 3}, i.e. the full range.
  std::array<int, 2> support;
  /// Embedded rotations only: true for the antisymmetric (imaginary) pattern
  /// -i|p><q| + i|q><p|, false for the symmetric |p><q| + |q><p|.
  bool imaginary = false;
  /// Diagonal generators only: the four real diagonal entries.
  std::array<double, 4> diagonal{};
};

/// The generator lambda_index. Throws ArgumentError unless 1 <= index <= 15.
const AlgebraElement& gell_mann(int index);

GeneratorClass generator_class(int index);

/// Tr[lambda_i lambda_j]; equals 2 delta_ij.
double pairing(int i, int j);

Matrix4c commutator(const Matrix4c& a, const Matrix4c& b);

/// Totally antisymmetric f_ijk with [lambda_i, lambda_j] = 2i f_ijk lambda_k.
///
/// The table is built once from the trace formula (1/4i) Tr[[l_i, l_j] l_k];
/// construction throws ConsistencyError if any trace carries an imaginary
/// residue above 1e-12. Queries are lookups.
class StructureConstants {
 public:
  struct Entry {
    int i, j, k;
    double value;
  };

  static const StructureConstants& instance();

  /// 1-based indices; throws ArgumentError when out of range.
  double operator()(int i, int j, int k) const;

  /// Nonzero entries with i < j < k, ordered lexicographically.
  std::vector<Entry> nonzero_ordered() const;

  /// 2i sum_k f_ijk lambda_k, i.e. the commutator rebuilt from the table.
  Matrix4c reconstruct_commutator(int i, int j) const;

 private:
  StructureConstants();
  std::array<double, kNumGenerators * kNumGenerators * kNumGenerators> f_{};
};

double structure_constant(int i, int j, int k);

/// exp(i * lambda_index * angle) in closed form. Throws ArgumentError on a
/// bad index or non-finite angle.
Matrix4c exp_generator(int index, double angle);

/// Cartan split used by the Euler factorization:
/// L(K) = {1..8, 15}, L(P) = {9..14}.
bool in_k_subalgebra(int index);

struct ClosureReport {
  enum class Relation { kk_in_k, pp_in_k, kp_in_p };

  struct Pair {
    int i, j;
    Relation relation;
    /// Indices k with f_ijk != 0.
    std::vector<int> support;
    bool ok;
  };

  std::vector<Pair> pairs;

  bool all_ok() const;
  int failures() const;
};

/// Checks [K,K] in K, [P,P] in K, [K,P] in P for every unordered pair.
ClosureReport cartan_closure_check();

}  // namespace su4
