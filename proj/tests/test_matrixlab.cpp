#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mirabolic;

TEST_CASE("Jordan types read off the rank sequence") {
  CHECK(jordan_partition(jordan_matrix(std::vector<int>{5})) == Partition({5}));
  CHECK(jordan_partition(ExactMatrix(4, 4)) == Partition({1, 1, 1, 1}));
  CHECK(jordan_partition(jordan_matrix(std::vector<int>{2, 2})) == Partition({2, 2}));
  CHECK(jordan_partition(ExactMatrix(0, 0)) == Partition());

  // A conjugate of diag(J2, J2) keeps the type (2, 2).
  ExactMatrix j = jordan_matrix(std::vector<int>{2, 2});
  ExactMatrix p = ExactMatrix::identity(4);
  p(0, 2) = GaussianRational(Rational(3));
  p(1, 3) = GaussianRational(Rational(-2), Rational(1));
  CHECK(jordan_partition(p * j * inverse(p)) == Partition({2, 2}));

  ExactMatrix id = ExactMatrix::identity(3);
  CHECK_THROWS_AS(jordan_partition(id), domain_error);
  CHECK_THROWS_WITH(jordan_partition(id),
                    Catch::Matchers::ContainsSubstring("not nilpotent"));
}

TEST_CASE("Jordan types are conjugation invariants") {
  testsupport::Rng rng(31);
  for (int n = 2; n <= 8; ++n) {
    for (const Partition& lambda : testsupport::partitions_of(n)) {
      ExactMatrix j = jordan_matrix(lambda);
      for (int trial = 0; trial < 6; ++trial) {
        ExactMatrix p = testsupport::random_unimodular(rng, n);
        ExactMatrix conj = p * j * inverse(p);
        CHECK(jordan_partition(conj) == lambda);

        // Rank sequence identity: conjugate part k is rank drop at power k.
        Partition conjugate = transpose(lambda);
        ExactMatrix power = ExactMatrix::identity(n);
        for (std::size_t k = 0; k < conjugate.parts().size(); ++k) {
          int before = rank(power);
          power = power * conj;
          CHECK(conjugate.parts()[k] == before - rank(power));
        }
      }
    }
  }
}

TEST_CASE("functionals attached to compositions") {
  // lambda = (n): the sum of superdiagonal entries, dual on the subdiagonal.
  LinearFunctional f4 = psi_lambda(Composition({4}));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      GaussianRational expected(Rational(b == a + 1 ? 1 : 0));
      CHECK(f4.evaluate_elementary(a, b) == expected);
    }
  ExactMatrix z(4, 4);
  z(0, 1) = GaussianRational(Rational(2));
  z(1, 2) = GaussianRational(Rational(5));
  z(3, 0) = GaussianRational(Rational(11));  // off the superdiagonal, ignored
  CHECK(f4.evaluate(z) == GaussianRational(Rational(7)));

  // lambda = 1^n gives the zero functional.
  LinearFunctional ones = psi_lambda(Composition({1, 1, 1}));
  CHECK(ones.dual.is_zero());
  CHECK(depth_of_functional(ones) == 1);

  // The dual matrix has Jordan type sort(lambda), whatever the order.
  testsupport::Rng rng(13);
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& lambda : testsupport::compositions_of(n)) {
      LinearFunctional f = psi_lambda(lambda);
      Partition sorted = Partition::from_unsorted(lambda.parts());
      CHECK(jordan_partition(f.dual) == sorted);
      CHECK(depth_of_functional(f) == sorted.largest());
    }
  }
}

TEST_CASE("depth of a functional is the nilpotency order of its dual") {
  LinearFunctional f = psi_lambda(Composition({3, 2}));
  CHECK(depth_of_functional(f) == 3);
  CHECK(depth_of_functional(psi_lambda(Composition({2, 3}))) == 3);
  CHECK(depth_of_functional(psi_lambda(Composition({1}))) == 1);

  LinearFunctional bad{2, ExactMatrix::identity(2)};
  CHECK_THROWS_AS(depth_of_functional(bad), domain_error);
}

TEST_CASE("powers of perturbed superdiagonal units") {
  // n = 3, d = 2: u = E23, v sits in column 2, row 1.
  ExactMatrix u = superdiagonal_unit(3, 2);
  CHECK(u(1, 2) == GaussianRational(Rational(1)));
  CHECK(rank(u) == 1);

  std::vector<GaussianRational> column = {GaussianRational(Rational(5))};
  ExactMatrix v = embed_perturbation(3, 2, column);
  CHECK(v(0, 1) == GaussianRational(Rational(5)));

  ExactMatrix power = (u + v).pow(2);
  CHECK(power == lemma_closed_form(3, 2, column));
  CHECK(power(0, 2) == GaussianRational(Rational(5)));
  CHECK_FALSE(power.is_zero());

  std::vector<GaussianRational> zero_col = {GaussianRational(Rational(0))};
  CHECK((superdiagonal_unit(3, 2) + embed_perturbation(3, 2, zero_col)).pow(2).is_zero());

  std::string failure;
  CHECK(check_linalg_lemma_instance(3, 2, column, &failure));
  CHECK(failure.empty());

  // d = 1 degenerates: the superdiagonal run is empty and the first power
  // is the perturbation itself.
  CHECK(superdiagonal_unit(2, 1).is_zero());
  std::vector<GaussianRational> one = {GaussianRational(Rational(3))};
  CHECK((superdiagonal_unit(2, 1) + embed_perturbation(2, 1, one)).pow(1) ==
        lemma_closed_form(2, 1, one));
  CHECK(check_linalg_lemma_instance(2, 1, one));

  SuiteReport sweep = run_linalg_suite(6, 2026, 8);
  CHECK(sweep.passed());
  CHECK(sweep.checks > 0);

  CHECK(alt_reading_fails_at_2_1());
}

TEST_CASE("matrix text round trips exactly") {
  testsupport::Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.range(1, 6));
    const int m = static_cast<int>(rng.range(1, 6));
    ExactMatrix a(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) a(i, j) = rng.gaussian();
    CHECK(parse_matrix_text(matrix_to_text(a)) == a);
  }

  ExactMatrix parsed = parse_matrix_text("0 1/2\n-1+2*i 3\n");
  REQUIRE(parsed.rows() == 2);
  CHECK(parsed(0, 1) == GaussianRational(Rational(1, 2)));
  CHECK(parsed(1, 0) == GaussianRational(Rational(-1), Rational(2)));

  CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), parse_error);
  CHECK_THROWS_AS(parse_matrix_text("1 x\n"), parse_error);
  CHECK(parse_matrix_text("").rows() == 0);
}
