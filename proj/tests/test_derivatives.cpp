#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mirabolic;

namespace {

RepExpr chi(int n, int eps, GaussianRational z, Field f = Field::Real) {
  return RepExpr::single(f, CharacterRep(n, eps, std::move(z)));
}

GaussianRational gr(Rational re, Rational im = Rational(0)) {
  return GaussianRational(std::move(re), std::move(im));
}

}  // namespace

TEST_CASE("adducing shrinks every factor by one column") {
  CHECK(adduce(RepExpr::single(Field::Real, SpehCSRep(2, 3, Rational(1, 4)))) ==
        RepExpr::single(Field::Real, SpehCSRep(1, 3, Rational(1, 4))));
  CHECK(adduce(chi(4, 1, gr(Rational(2)))) == chi(3, 1, gr(Rational(2))));
  CHECK(adduce(chi(1, 0, gr(Rational(0)))) == RepExpr::trivial(Field::Real));
  CHECK(adduce(RepExpr::zero(Field::Complex)).is_zero());

  RepExpr mixed = product(RepExpr::single(Field::Real, SpehRep(3, 2)),
                          chi(1, 1, gr(Rational(0))));
  CHECK(adduce(mixed) == RepExpr::single(Field::Real, SpehRep(2, 2)));

  testsupport::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    RepExpr a = testsupport::random_product(rng, 16);
    RepExpr b = testsupport::random_product(rng, 16);
    CHECK(adduce(product(a, b)) == product(adduce(a), adduce(b)));
  }
}

TEST_CASE("the highest derivative is the adduced representation") {
  RepExpr e = RepExpr::single(Field::Real, SpehRep(2, 1));
  CHECK(highest_derivative(e) == RepExpr::single(Field::Real, SpehRep(1, 1)));
  CHECK(highest_derivative(RepExpr::trivial(Field::Real)) == RepExpr::trivial(Field::Real));
  testsupport::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    RepExpr r = testsupport::random_product(rng, 16);
    CHECK(highest_derivative(r) == adduce(r));
  }
}

TEST_CASE("adducing chops the first row of the associated partition") {
  for (const RepExpr& e : testsupport::basic_catalogue(8, Field::Real)) {
    RepExpr shrunk = adduce(e);
    Partition expected = associated_partition(e).tail();
    if (shrunk.n() == 0)
      CHECK(expected.parts().empty());
    else
      CHECK(associated_partition(shrunk) == expected);
  }
}

TEST_CASE("derivatives of character monomials") {
  RepExpr e = product(chi(3, 0, gr(Rational(1))), chi(2, 1, gr(Rational(0), Rational(1))));
  // Depth 2, so the second derivative is the adduced representation.
  CHECK(derivative_monomial(e, 2) ==
        product(chi(2, 0, gr(Rational(1))), chi(1, 1, gr(Rational(0), Rational(1)))));
  CHECK(derivative_monomial(e, 3).is_zero());
  CHECK(derivative_monomial(e, 7).is_zero());
  CHECK_THROWS_AS(derivative_monomial(e, 1), undetermined_error);
  CHECK_THROWS_AS(derivative_monomial(e, 0), domain_error);
  CHECK_THROWS_AS(derivative_monomial(e, -2), domain_error);
  CHECK_THROWS_AS(derivative_monomial(RepExpr::zero(Field::Real), 1), domain_error);
  CHECK_THROWS_AS(
      derivative_monomial(RepExpr::single(Field::Real, SpehRep(2, 1)), 1),
      domain_error);

  // n characters of size one: depth n, and the n-th derivative is trivial.
  std::vector<Factor> lines;
  for (int i = 0; i < 5; ++i) lines.push_back(CharacterRep(1, 0, gr(Rational(i))));
  RepExpr flat = RepExpr::of(Field::Real, lines);
  CHECK(derivative_monomial(flat, 5) == RepExpr::trivial(Field::Real));
  CHECK(derivative_monomial(flat, 6).is_zero());
  CHECK_THROWS_AS(derivative_monomial(flat, 4), undetermined_error);
}

TEST_CASE("character expansions of the catalogue") {
  CHECK(igeq(RepExpr::single(Field::Real, SpehRep(2, 2))) ==
        product(chi(2, 1, gr(Rational(1))), chi(2, 0, gr(Rational(-1)))));

  CHECK(igeq(RepExpr::single(Field::Real, SteinRep(3, Rational(1, 3)))) ==
        product(chi(3, 0, gr(Rational(1, 3))), chi(3, 0, gr(Rational(-1, 3)))));

  // A character is already its own expansion.
  RepExpr line = chi(3, 1, gr(Rational(2), Rational(-1)));
  CHECK(igeq(line) == line);

  // One factor per layer of the associated partition, sorted by real part.
  for (const RepExpr& e : testsupport::basic_catalogue(8, Field::Real)) {
    if (e.is_zero() || e.n() == 0) continue;
    RepExpr expanded = igeq(e);
    CHECK(static_cast<int>(expanded.factors().size()) == depth(e));
    for (std::size_t i = 0; i + 1 < expanded.factors().size(); ++i) {
      const auto& a = std::get<CharacterRep>(expanded.factors()[i]);
      const auto& b = std::get<CharacterRep>(expanded.factors()[i + 1]);
      CHECK(a.z.re >= b.z.re);
    }
  }
}

TEST_CASE("highest derivatives commute with the character expansion") {
  for (const RepExpr& e : testsupport::basic_catalogue(40, Field::Real)) {
    if (e.is_zero() || e.n() == 0) continue;
    CHECK(igeq(adduce(e)) == derivative_monomial(igeq(e), depth(e)));
  }
  testsupport::Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    RepExpr e = testsupport::random_product(rng, 40);
    CHECK(igeq(adduce(e)) == derivative_monomial(igeq(e), depth(e)));
  }
}

TEST_CASE("degenerate Whittaker dimensions") {
  RepExpr e = RepExpr::single(Field::Real, SpehRep(4, 1));  // orbit 2^4, depth 2
  CHECK(whittaker_dim(e, Composition({2, 2, 2, 2})).verdict == WhittakerDim::Verdict::One);
  CHECK(whittaker_dim(e, Composition({3, 2, 2, 1})).verdict == WhittakerDim::Verdict::Zero);
  CHECK(whittaker_dim(e, Composition({8})).verdict == WhittakerDim::Verdict::Zero);

  RepExpr small = RepExpr::single(Field::Real, SpehRep(2, 1));  // orbit 2^2
  CHECK(whittaker_dim(small, Composition({3, 1})).verdict == WhittakerDim::Verdict::Zero);

  WhittakerDim low = whittaker_dim(e, Composition({1, 2, 2, 2, 1}));
  CHECK(low.verdict == WhittakerDim::Verdict::Unknown);
  CHECK_FALSE(low.reason.empty());

  CHECK(whittaker_dim(RepExpr::single(Field::Real, SpehCSRep(2, 1, Rational(1, 4))),
                      Composition({2, 2, 2, 2}))
            .verdict == WhittakerDim::Verdict::Unknown);

  CHECK_THROWS_AS(whittaker_dim(e, Composition({2, 2, 2})), domain_error);
  CHECK_THROWS_AS(whittaker_dim(RepExpr::zero(Field::Real), Composition({1})), domain_error);

  // Reading the orbit itself as the composition always gives dimension one.
  for (const RepExpr& c : testsupport::basic_catalogue(8, Field::Real)) {
    if (c.is_zero() || c.n() == 0) continue;
    Composition orbit(associated_partition(c).parts());
    CHECK(whittaker_dim(c, orbit).verdict == WhittakerDim::Verdict::One);
  }
}

TEST_CASE("infinitesimal character shifts after deleting entries") {
  auto g = [](Rational r) { return GaussianRational(std::move(r)); };
  InfCharMultiset s({g(Rational(3)), g(Rational(1)), g(Rational(0))});

  std::vector<InfCharMultiset> one = infchar_transform(s, 1);
  REQUIRE(one.size() == 3);
  auto has = [&](std::initializer_list<Rational> entries) {
    std::vector<GaussianRational> v;
    for (const Rational& r : entries) v.push_back(GaussianRational(r));
    return std::find(one.begin(), one.end(), InfCharMultiset(v)) != one.end();
  };
  CHECK(has({Rational(3, 2), Rational(1, 2)}));
  CHECK(has({Rational(7, 2), Rational(1, 2)}));
  CHECK(has({Rational(7, 2), Rational(3, 2)}));

  // Deleting everything leaves exactly the empty multiset.
  std::vector<InfCharMultiset> all = infchar_transform(s, 3);
  REQUIRE(all.size() == 1);
  CHECK(all.front() == InfCharMultiset(std::vector<GaussianRational>{}));

  // Repeats collapse: {a, a, b} has only two distinct single deletions.
  std::vector<InfCharMultiset> dedup =
      infchar_transform(InfCharMultiset({g(Rational(1)), g(Rational(1)), g(Rational(5))}), 1);
  CHECK(dedup.size() == 2);

  CHECK_THROWS_AS(infchar_transform(s, 0), domain_error);
  CHECK_THROWS_AS(infchar_transform(s, 4), domain_error);

  // Oracle: brute force over index subsets.
  testsupport::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GaussianRational> entries;
    const long n = rng.range(1, 7);
    for (long i = 0; i < n; ++i) entries.push_back(rng.gaussian(3, 2));
    const int k = static_cast<int>(rng.range(1, n));
    std::vector<InfCharMultiset> got = infchar_transform(InfCharMultiset(entries), k);

    InfCharMultiset sorted(entries);
    std::set<InfCharMultiset> expected;
    std::vector<bool> keep(sorted.size());
    std::fill(keep.begin(), keep.begin() + (sorted.size() - k), true);
    std::sort(keep.begin(), keep.end());
    do {
      std::vector<GaussianRational> survivor;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (keep[i]) {
          GaussianRational shifted = sorted.elements()[i];
          shifted.re += Rational(1, 2);
          survivor.push_back(shifted);
        }
      expected.insert(InfCharMultiset(std::move(survivor)));
    } while (std::next_permutation(keep.begin(), keep.end()));

    REQUIRE(got.size() == expected.size());
    for (const InfCharMultiset& m : got) CHECK(expected.count(m) == 1);
  }
}
