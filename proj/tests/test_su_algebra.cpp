#include <doctest.h>

#include <cmath>

#include "commutator_tables.hpp"
#include "oracles.hpp"
#include "su4/errors.hpp"
#include "su4/su_algebra.hpp"

using namespace su4;

TEST_CASE("generators are Hermitian, traceless and orthogonal") {
  for (int i = 1; i <= kNumGenerators; ++i) {
    const Matrix4c& m = gell_mann(i).matrix();
    CHECK(max_abs(m - m.adjoint()) == 0.0);
    CHECK(std::abs(m.trace()) < 1e-15);
    for (int j = 1; j <= kNumGenerators; ++j) {
      CHECK(std::abs(pairing(i, j) - (i == j ? 2.0 : 0.0)) <= 1e-15);
    }
  }
}

TEST_CASE("diagonal generators carry the normalized entries") {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  const Matrix4c& l8 = gell_mann(8).matrix();
  const Matrix4c& l15 = gell_mann(15).matrix();
  CHECK(l8(0, 0).real() == doctest::Approx(r3));
  CHECK(l8(2, 2).real() == doctest::Approx(-2.0 * r3));
  CHECK(l8(3, 3).real() == 0.0);
  for (int d = 0; d < 3; ++d) CHECK(l15(d, d).real() == doctest::Approx(r6));
  CHECK(l15(3, 3).real() == doctest::Approx(-3.0 * r6));
  CHECK(generator_class(15).kind == GeneratorKind::diagonal);
  CHECK(generator_class(10).support == std::array<int, 2>{0, 3});
  CHECK(generator_class(10).imaginary);
  CHECK_FALSE(generator_class(9).imaginary);
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(gell_mann(0), ArgumentError);
  CHECK_THROWS_WITH(gell_mann(16), doctest::Contains("index out of range 1..15"));
  CHECK_THROWS_AS(structure_constant(1, 2, 16), ArgumentError);
  CHECK_THROWS_AS(exp_generator(0, 0.1), ArgumentError);
  CHECK_THROWS_AS(exp_generator(3, std::nan("")), ArgumentError);
}

TEST_CASE("algebra elements are validated") {
  Matrix4c m = gell_mann(1).matrix();
  CHECK_NOTHROW(AlgebraElement{m});
  m(0, 0) = 1.0;
  CHECK_THROWS_AS(AlgebraElement{m}, ArgumentError);
  Matrix4c n = gell_mann(2).matrix();
  n(0, 1) *= 2.0;
  CHECK_THROWS_AS(AlgebraElement{n}, ArgumentError);
}

TEST_CASE("structure constants: known values and total antisymmetry") {
  CHECK(structure_constant(1, 2, 3) == doctest::Approx(1.0));
  CHECK(structure_constant(1, 4, 7) == doctest::Approx(0.5));
  CHECK(structure_constant(4, 5, 8) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(structure_constant(13, 14, 15) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  for (int i = 1; i <= 15; ++i) {
    for (int j = 1; j <= 15; ++j) {
      for (int k = 1; k <= 15; ++k) {
        const double f = structure_constant(i, j, k);
        REQUIRE(structure_constant(j, i, k) == doctest::Approx(-f).scale(1.0));
        REQUIRE(structure_constant(i, k, j) == doctest::Approx(-f).scale(1.0));
      }
    }
  }
  const auto entries = StructureConstants::instance().nonzero_ordered();
  CHECK(entries.size() == 29);
  for (const auto& e : entries) CHECK((e.i < e.j && e.j < e.k));
}

TEST_CASE("commutators rebuilt from structure constants match direct products") {
  const auto& table = StructureConstants::instance();
  for (int i = 1; i <= 15; ++i) {
    for (int j = 1; j <= 15; ++j) {
      const Matrix4c direct = commutator(gell_mann(i).matrix(), gell_mann(j).matrix());
      REQUIRE(max_abs(direct - table.reconstruct_commutator(i, j)) <= 1e-14);
    }
  }
}

namespace {

Matrix4c table_commutator(const test::TableEntry& e) {
  Matrix4c m = Matrix4c::Zero();
  for (const auto& t : e.terms) m += kI * t.coef * gell_mann(t.k).matrix();
  return m;
}

}  // namespace

TEST_CASE("frozen commutator tables") {
  const auto& table = StructureConstants::instance();
  const auto& printed = test::printed_commutator_tables();
  REQUIRE(printed.size() == 225);

  SUBCASE("every corrected entry is reproduced") {
    for (const auto& e : test::corrected_commutator_tables()) {
      INFO("[" << e.i << "," << e.j << "]");
      CHECK(max_abs(table.reconstruct_commutator(e.i, e.j) - table_commutator(e)) <= 1e-13);
    }
  }

  SUBCASE("exactly the four misprinted entries differ as transcribed") {
    int mismatches = 0;
    for (const auto& e : printed) {
      const double err = max_abs(table.reconstruct_commutator(e.i, e.j) - table_commutator(e));
      if (err > 1e-13) {
        ++mismatches;
        CHECK(test::is_misprinted_entry(e.i, e.j));
        // Off by the factor two: the printed coefficient is 1/sqrt(3), the
        // commutator needs 2/sqrt(3).
        CHECK(err == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
      }
    }
    CHECK(mismatches == 4);
  }
}

TEST_CASE("closed-form exponentials agree with the series oracle") {
  for (int g = 1; g <= 15; ++g) {
    for (double angle : {0.0, 0.3, -1.1, 2.9, 7.5}) {
      const Matrix4c expected = test::expm_taylor(kI * angle * gell_mann(g).matrix());
      INFO("lambda_" << g << " angle " << angle);
      CHECK(max_abs(exp_generator(g, angle) - expected) <= 1e-14);
    }
  }
}

TEST_CASE("Cartan closure") {
  CHECK(in_k_subalgebra(8));
  CHECK(in_k_subalgebra(15));
  CHECK_FALSE(in_k_subalgebra(9));
  const ClosureReport report = cartan_closure_check();
  CHECK(report.pairs.size() == 105);
  CHECK(report.all_ok());
  CHECK(report.failures() == 0);
}
