#include "doctest.h"

#include "corpus.hpp"
#include "orelab/algebra.hpp"
#include "orelab/errors.hpp"
#include "orelab/lnd.hpp"

using namespace orelab;

TEST_CASE("validate_presentation") {
  SUBCASE("Q x Q is associative and unital") {
    CHECK(validate_presentation(corpus::q_power(2)).ok);
  }
  SUBCASE("Grassmann truncations validate") {
    for (int g = 1; g <= 5; ++g) {
      CHECK(validate_presentation(grassmann_algebra(g).algebra).ok);
    }
  }
  SUBCASE("a perturbed table fails with a witness") {
    // One-dimensional algebra with e0^2 = e0; perturbing associativity is
    // impossible at dim 1, so break a dim-2 table instead: e0 e0 = e1,
    // e0 e1 = e0 makes (e0 e0) e0 = e0 e0 = e1 but e0 (e0 e0) = e0 e1 = e0.
    std::vector<std::vector<Vec>> table(2, std::vector<Vec>(2, zero_vec(2)));
    table[0][0] = unit_vec(2, 1);
    table[0][1] = unit_vec(2, 0);
    AlgebraPresentation bad = AlgebraPresentation::from_table(2, table);
    CheckResult rc = validate_presentation(bad);
    CHECK_FALSE(rc.ok);
    CHECK(rc.witness == std::vector<int>{0, 0, 0});
  }
  SUBCASE("matrix-unit algebras validate") {
    CHECK(validate_presentation(corpus::ut_algebra(2).algebra).ok);
    CHECK(validate_presentation(corpus::ut_algebra(3).algebra).ok);
    CHECK(validate_presentation(corpus::m2_algebra()).ok);
  }
}

TEST_CASE("multiply") {
  auto g3 = grassmann_algebra(3);
  GrassmannBasis basis(3);
  int e1 = basis.index_of({1}), e2 = basis.index_of({2}), e12 = basis.index_of({1, 2});

  SUBCASE("x * 0 = 0") {
    Vec x = unit_vec(7, e1);
    CHECK(is_zero_vec(g3.algebra.multiply(x, zero_vec(7))));
  }
  SUBCASE("anticommuting generators") {
    Vec p = g3.algebra.multiply(unit_vec(7, e1), unit_vec(7, e2));
    Vec q = g3.algebra.multiply(unit_vec(7, e2), unit_vec(7, e1));
    CHECK(p == unit_vec(7, e12));
    CHECK(q == scaled(unit_vec(7, e12), Rational(-1)));
  }
  SUBCASE("upper-triangular against the matrix-multiplication oracle") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    int i12 = ut.index_of(0, 1);
    Vec sq = ut.algebra.multiply(unit_vec(3, i12), unit_vec(3, i12));
    CHECK(is_zero_vec(sq));  // E12 E12 = 0
    corpus::DenseTable oracle(ut.algebra);
    corpus::Rng rng(7);
    for (int t = 0; t < 10; ++t) {
      Vec x = rng.vector(3), y = rng.vector(3);
      CHECK(ut.algebra.multiply(x, y) == oracle.mul(x, y));
    }
  }
}

TEST_CASE("ideal_generated_by") {
  SUBCASE("ideal of zero is zero") {
    auto a = corpus::q_power(2);
    CHECK(ideal_generated_by(a, Subspace::zero(2)).space.is_zero());
  }
  SUBCASE("span{E12} is already an ideal of UT2") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    Subspace s = Subspace::span(3, {unit_vec(3, ut.index_of(0, 1))});
    Ideal i = ideal_generated_by(ut.algebra, s);
    CHECK(i.space == s);
  }
  SUBCASE("ideal of span{e1} in E_3 saturates by hand") {
    auto g3 = grassmann_algebra(3);
    GrassmannBasis basis(3);
    Subspace s = Subspace::span(7, {unit_vec(7, basis.index_of({1}))});
    Ideal i = ideal_generated_by(g3.algebra, s);
    Subspace expected = Subspace::span(7, {unit_vec(7, basis.index_of({1})),
                                           unit_vec(7, basis.index_of({1, 2})),
                                           unit_vec(7, basis.index_of({1, 3})),
                                           unit_vec(7, basis.index_of({1, 2, 3}))});
    CHECK(i.space == expected);
  }
  SUBCASE("saturation is a fixpoint") {
    auto g3 = grassmann_algebra(3);
    corpus::Rng rng(17);
    Subspace s = Subspace::span(7, {rng.vector(7), rng.vector(7)});
    Ideal i = ideal_generated_by(g3.algebra, s);
    CHECK(ideal_generated_by(g3.algebra, i.space).space == i.space);
    CHECK(is_ideal(g3.algebra, i.space));
  }
}

TEST_CASE("nilpotency_index") {
  SUBCASE("zero ideal has index 1") {
    auto a = corpus::q_power(2);
    CHECK(nilpotency_index(a, Ideal{Subspace::zero(2)}) == 1);
  }
  SUBCASE("span{E12} squares to zero") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    Subspace s = Subspace::span(3, {unit_vec(3, ut.index_of(0, 1))});
    CHECK(nilpotency_index(ut.algebra, Ideal{s}) == 2);
  }
  SUBCASE("the whole Grassmann truncation has index g + 1") {
    for (int g = 1; g <= 4; ++g) {
      auto inst = grassmann_algebra(g);
      Ideal whole{Subspace::full(inst.algebra.dim())};
      CHECK(nilpotency_index(inst.algebra, whole) == g + 1);
    }
  }
  SUBCASE("idempotents are not nilpotent") {
    auto a = corpus::q_power(2);
    CHECK_FALSE(nilpotency_index(a, Ideal{Subspace::full(2)}).has_value());
  }
}

TEST_CASE("wedderburn_radical") {
  SUBCASE("semisimple algebras have zero radical") {
    CHECK(wedderburn_radical(corpus::q_power(2)).space.is_zero());
    CHECK(wedderburn_radical(corpus::q_power(4)).space.is_zero());
    CHECK(wedderburn_radical(corpus::m2_algebra()).space.is_zero());
  }
  SUBCASE("UT2 radical is span{E12}") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    Subspace expected = Subspace::span(3, {unit_vec(3, ut.index_of(0, 1))});
    CHECK(wedderburn_radical(ut.algebra).space == expected);
  }
  SUBCASE("the Grassmann truncation is its own radical") {
    for (int g = 1; g <= 4; ++g) {
      auto inst = grassmann_algebra(g);
      CHECK(wedderburn_radical(inst.algebra).space == Subspace::full(inst.algebra.dim()));
    }
  }
  SUBCASE("brute-force oracle agreement on small algebras") {
    std::vector<AlgebraPresentation> algs = {corpus::q_power(1),      corpus::q_power(2),
                                             corpus::zero_algebra(2), corpus::dual_numbers(),
                                             corpus::truncated_poly(3), corpus::ut_algebra(2).algebra,
                                             corpus::m2_algebra(),    grassmann_algebra(2).algebra};
    for (const auto& a : algs) {
      CHECK(wedderburn_radical(a).space == corpus::oracle_wedderburn(a));
    }
  }
  SUBCASE("the quotient by the radical is semiprime") {
    std::vector<AlgebraPresentation> algs = {corpus::ut_algebra(3).algebra,
                                             corpus::truncated_poly(4),
                                             grassmann_algebra(3).algebra};
    for (const auto& a : algs) {
      Ideal w = wedderburn_radical(a);
      QuotientPresentation q = quotient_by(a, w.space);
      CHECK(wedderburn_radical(q.algebra).space.is_zero());
    }
  }
}

TEST_CASE("prime_radical_chain") {
  SUBCASE("semisimple: single zero stage") {
    RadicalChain c = prime_radical_chain(corpus::q_power(2));
    CHECK(c.stages.size() == 1);
    CHECK(c.stabilization_index == 0);
    CHECK(c.stages[0].space.is_zero());
  }
  SUBCASE("UT2: [0, span{E12}]") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    RadicalChain c = prime_radical_chain(ut.algebra);
    REQUIRE(c.stages.size() == 2);
    CHECK(c.stabilization_index == 1);
    CHECK(c.stages[1].space == Subspace::span(3, {unit_vec(3, ut.index_of(0, 1))}));
  }
  SUBCASE("Grassmann: [0, everything]") {
    auto inst = grassmann_algebra(3);
    RadicalChain c = prime_radical_chain(inst.algebra);
    REQUIRE(c.stages.size() == 2);
    CHECK(c.stages[1].space == Subspace::full(7));
  }
}

TEST_CASE("jacobson_radical") {
  SUBCASE("matches wedderburn on the corpus") {
    std::vector<AlgebraPresentation> algs = {corpus::q_power(2), corpus::ut_algebra(2).algebra,
                                             grassmann_algebra(2).algebra,
                                             corpus::truncated_poly(3)};
    for (const auto& a : algs) {
      CHECK(jacobson_radical(a).space == wedderburn_radical(a).space);
    }
  }
  SUBCASE("quasi-inverse via the geometric series") {
    // For x in J and any a, z = xa is nilpotent and b = -(z + z^2 + ...)
    // satisfies z + b = zb = bz.
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    const AlgebraPresentation& a = ut.algebra;
    corpus::Rng rng(29);
    Subspace j = jacobson_radical(a).space;
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = zero_vec(3);
      for (const Vec& b : j.basis()) x = add(x, scaled(b, rng.rational()));
      Vec z = a.multiply(x, rng.vector(3));
      Vec b = zero_vec(3);
      Vec power = z;
      while (!is_zero_vec(power)) {
        b = sub(b, power);
        power = a.multiply(power, z);
      }
      CHECK(add(z, b) == a.multiply(z, b));
      CHECK(add(z, b) == a.multiply(b, z));
    }
  }
  SUBCASE("quasi-regularity oracle agreement") {
    corpus::Rng rng(31);
    std::vector<AlgebraPresentation> algs = {corpus::q_power(2), corpus::zero_algebra(3),
                                             corpus::ut_algebra(2).algebra,
                                             corpus::dual_numbers(), grassmann_algebra(2).algebra};
    for (const auto& a : algs) {
      CHECK(jacobson_radical(a).space == corpus::oracle_jacobson(a, rng));
    }
  }
}

TEST_CASE("power_in_radical") {
  SUBCASE("radical algebras at n = 1") {
    auto e2 = grassmann_algebra(2);
    CHECK(power_in_radical(e2.algebra, 1));
  }
  SUBCASE("UT2 fails at every n") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    CHECK_FALSE(power_in_radical(ut.algebra, 2));
    CHECK_FALSE(power_in_radical(ut.algebra, 3));
  }
  SUBCASE("Grassmann passes at n = 2") {
    for (int g = 2; g <= 4; ++g) {
      CHECK(power_in_radical(grassmann_algebra(g).algebra, 2));
    }
  }
}

TEST_CASE("is_commutative_on") {
  auto g3 = grassmann_algebra(3);
  GrassmannBasis basis(3);
  SUBCASE("one-dimensional subspaces commute") {
    CHECK(is_commutative_on(g3.algebra, Subspace::span(7, {unit_vec(7, 3)})));
  }
  SUBCASE("two Grassmann generators do not commute") {
    Subspace s = Subspace::span(7, {unit_vec(7, basis.index_of({1})),
                                    unit_vec(7, basis.index_of({2}))});
    CHECK_FALSE(is_commutative_on(g3.algebra, s));
  }
  SUBCASE("the diagonal of UT2 commutes") {
    corpus::UpperTriangular ut = corpus::ut_algebra(2);
    Subspace s = Subspace::span(3, {unit_vec(3, ut.index_of(0, 0)),
                                    unit_vec(3, ut.index_of(1, 1))});
    CHECK(is_commutative_on(ut.algebra, s));
  }
}

TEST_CASE("quotient and subalgebra presentations re-validate") {
  corpus::UpperTriangular ut = corpus::ut_algebra(3);
  Ideal w = wedderburn_radical(ut.algebra);
  QuotientPresentation q = quotient_by(ut.algebra, w.space);
  CHECK(q.algebra.dim() == 3);
  CHECK(validate_presentation(q.algebra).ok);
  CHECK(q.algebra.is_unital());

  // Projection respects multiplication.
  corpus::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    Vec x = rng.vector(6), y = rng.vector(6);
    CHECK(q.project(ut.algebra.multiply(x, y)) == q.algebra.multiply(q.project(x), q.project(y)));
  }
}
