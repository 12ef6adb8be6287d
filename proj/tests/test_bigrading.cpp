#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mirabolic;

namespace {

// All normal-ordered factor sequences of length 1..max_degree.
std::vector<PBWMonomial> all_monomials(const BigradedBasis& basis, int max_degree) {
  std::vector<PBWMonomial> out;
  const auto& members = basis.all_members();
  std::vector<ElemMatrix> stack;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!stack.empty()) out.push_back(PBWMonomial{stack});
    if (static_cast<int>(stack.size()) == max_degree) return;
    for (std::size_t i = start; i < members.size(); ++i) {
      stack.push_back(members[i]);
      self(self, i);
      stack.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

int count_in_block(const BigradedBasis& basis, const PBWMonomial& t, Weight w) {
  int count = 0;
  for (const ElemMatrix& e : t.factors)
    if (basis.weight_of(e) == w) ++count;
  return count;
}

}  // namespace

TEST_CASE("weights of gl(3) at depth 2") {
  BigradedBasis basis(3, 2);
  CHECK(basis.xdiag() == std::vector<int>{0, 0, 1});
  CHECK(basis.ydiag() == std::vector<int>{0, 1, 1});
  CHECK(basis.weight_of(ElemMatrix{1, 2}) == Weight{0, 1});
  CHECK(basis.weight_of(ElemMatrix{1, 3}) == Weight{1, 1});
  CHECK(basis.weight_of(ElemMatrix{2, 3}) == Weight{1, 0});
  for (int i = 1; i <= 3; ++i) CHECK(basis.weight_of(ElemMatrix{i, i}) == Weight{0, 0});
  CHECK(basis.weight_of(ElemMatrix{3, 1}) == Weight{-1, -1});

  // The global order concatenates blocks by decreasing lexicographic weight.
  const auto& members = basis.all_members();
  REQUIRE(members.size() == 9);
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    Weight wa = basis.weight_of(members[i]);
    Weight wb = basis.weight_of(members[i + 1]);
    CHECK((wa.x > wb.x || (wa.x == wb.x && wa.y >= wb.y)));
  }
  for (const ElemMatrix& e : members)
    CHECK(members[static_cast<std::size_t>(basis.global_index(e))] == e);
  CHECK(basis.global_index(ElemMatrix{1, 3}) == 0);
  CHECK(basis.global_index(ElemMatrix{2, 3}) == 1);
  CHECK(basis.global_index(ElemMatrix{1, 2}) == 2);
  CHECK(basis.global_index(ElemMatrix{3, 1}) == 8);

  CHECK_THROWS_AS(BigradedBasis(3, 4), domain_error);
  CHECK_THROWS_AS(BigradedBasis(0, 0), domain_error);
  CHECK_THROWS_AS(basis.weight_of(ElemMatrix{0, 1}), domain_error);
}

TEST_CASE("distinguished blocks have the documented shapes") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= n; ++d) {
      BigradedBasis basis(n, d);

      // The positive part is the strictly upper corner of the last d-1 columns.
      std::set<std::pair<int, int>> expected_n1;
      for (int b = n - d + 2; b <= n; ++b)
        for (int a = 1; a < b; ++a) expected_n1.insert({a, b});
      std::set<std::pair<int, int>> actual_n1;
      for (const ElemMatrix& e : basis.n_members(1)) actual_n1.insert({e.row, e.col});
      CHECK(actual_n1 == expected_n1);

      // The (0,1) block is column n-d+1 above the diagonal.
      std::vector<std::pair<int, int>> expected_col;
      for (int a = 1; a <= n - d; ++a) expected_col.push_back({a, n - d + 1});
      std::vector<std::pair<int, int>> actual_col;
      for (const ElemMatrix& e : basis.a01()) actual_col.push_back({e.row, e.col});
      CHECK(actual_col == expected_col);

      // The (1,0) block is the superdiagonal run carrying the character.
      std::vector<std::pair<int, int>> expected_run;
      for (int j = n - d + 1; j <= n - 1; ++j) expected_run.push_back({j, j + 1});
      std::vector<std::pair<int, int>> actual_run;
      for (const ElemMatrix& e : basis.a10()) actual_run.push_back({e.row, e.col});
      CHECK(actual_run == expected_run);

      XiCharacter xi = XiCharacter::standard_for(basis);
      CHECK(xi.support().size() == static_cast<std::size_t>(d - 1));
    }

  // Degenerate case d = n: the (0,1) block is empty.
  BigradedBasis square(4, 4);
  CHECK(square.a01().empty());
  CHECK(square.ydiag() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("the grading carries the standard character") {
  for (int n = 2; n <= 8; ++n)
    for (int d = 2; d <= n; ++d) {
      BigradedBasis basis(n, d);
      ConditionReport report = check_condition(basis, XiCharacter::standard_for(basis));
      INFO("n=" << n << " d=" << d);
      for (const std::string& v : report.violations) INFO(v);
      CHECK(report.passed());
    }

  // A single bracket instance: [E12, E23] = E13 lies outside the support.
  BigradedBasis basis(3, 2);
  XiCharacter xi = XiCharacter::standard_for(basis);
  auto terms = bracket(ElemMatrix{1, 2}, ElemMatrix{2, 3});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].first == ElemMatrix{1, 3});
  CHECK(xi.value_of_terms(terms) == 0);
}

TEST_CASE("the flipped convention breaks the support clause") {
  for (int n = 3; n <= 6; ++n)
    for (int d = 2; d <= n - 1; ++d) {
      BigradedBasis flipped(n, d, WeightConvention::Lowering);
      ConditionReport report =
          check_condition(flipped, XiCharacter::standard_for(flipped));
      REQUIRE_FALSE(report.passed());
      bool support_clause = false;
      for (const std::string& v : report.violations)
        if (v.find("outside the (1,0) block") != std::string::npos) support_clause = true;
      CHECK(support_clause);
    }
  CHECK_THROWS_AS(BigradedBasis(3, 3, WeightConvention::Lowering), domain_error);
}

TEST_CASE("monomial ordering, weights and relevance") {
  BigradedBasis basis(4, 2);
  ElemMatrix a{3, 4};  // weight (1,0)
  ElemMatrix b1{1, 3}, b2{2, 3};  // weight (0,1)

  PBWMonomial good{{a, b1, b2}};
  CHECK_NOTHROW(validate_monomial(basis, good));
  CHECK(weight_of_monomial(basis, good) == Weight{1, 2});

  PBWMonomial bad{{b1, a}};
  CHECK_THROWS_AS(validate_monomial(basis, bad), domain_error);
  CHECK_THROWS_AS(classify_monomial(basis, bad, 2), domain_error);

  MonomialClass cls = classify_monomial(basis, good, 3);
  CHECK(cls.relevant);
  CHECK(cls.group_counts == std::array<int, 4>{0, 3, 0, 0});
  CHECK_FALSE(classify_monomial(basis, good, 4).relevant);  // degree mismatch

  PBWMonomial two_raising{{a, a, b1}};
  CHECK(classify_monomial(basis, two_raising, 3).relevant);
  CHECK(weight_of_monomial(basis, two_raising) == Weight{2, 1});

  CHECK(basis.block(1, -1).empty());

  PBWMonomial with_diag{{a, ElemMatrix{1, 1}}};
  MonomialClass diag_cls = classify_monomial(basis, with_diag, 2);
  CHECK_FALSE(diag_cls.relevant);
  CHECK(diag_cls.group_counts == std::array<int, 4>{0, 1, 1, 0});
}

TEST_CASE("exhaustive monomial sweep over small gradings") {
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= n; ++d) {
      BigradedBasis basis(n, d);
      // Anchor each factor weight in genuine diagonal brackets first.
      Matrix<Rational> x(n, n), y(n, n);
      for (int i = 0; i < n; ++i) {
        x(i, i) = Rational(basis.xdiag()[i]);
        y(i, i) = Rational(basis.ydiag()[i]);
      }
      for (const ElemMatrix& e : basis.all_members()) {
        Matrix<Rational> em(n, n);
        em(e.row - 1, e.col - 1) = Rational(1);
        Weight w = basis.weight_of(e);
        CHECK(x * em - em * x == Rational(-w.x) * em);
        CHECK(y * em - em * y == Rational(-w.y) * em);
      }

      for (const PBWMonomial& t : all_monomials(basis, 3)) {
        Weight sum{0, 0};
        for (const ElemMatrix& e : t.factors) {
          sum.x += basis.weight_of(e).x;
          sum.y += basis.weight_of(e).y;
        }
        CHECK(weight_of_monomial(basis, t) == sum);

        MonomialClass cls = classify_monomial(basis, t, t.degree());
        const int b10 = count_in_block(basis, t, Weight{1, 0});
        const int b01 = count_in_block(basis, t, Weight{0, 1});
        if (cls.relevant) {
          CHECK(sum.x == b10);
          CHECK(sum.y == b01);
          CHECK(sum.x >= 0);
          CHECK(sum.y >= 0);
          CHECK(sum.x + sum.y == t.degree());
          CHECK(cls.group_counts[1] == t.degree());
        } else if (cls.group_counts[0] == 0 && cls.group_counts[3] >= 1) {
          CHECK(b10 >= sum.x + 1);
        }
      }
    }
}

TEST_CASE("the character collapses positive factors to scalars") {
  BigradedBasis basis(4, 2);
  std::map<std::pair<int, int>, Rational> values;
  values[{3, 4}] = Rational(5, 2);
  XiCharacter xi(values);
  REQUIRE(check_condition(basis, xi).passed());

  ElemMatrix a{3, 4}, b{1, 3};
  ScaledMonomial image = xi_apply(basis, xi, PBWMonomial{{a, a, b}});
  CHECK(image.coeff == Rational(25, 4));
  REQUIRE(image.residual.factors.size() == 1);
  CHECK(image.residual.factors[0] == b);

  // A factor of the positive part outside the support kills the monomial.
  ScaledMonomial dead = xi_apply(basis, xi, PBWMonomial{{ElemMatrix{1, 4}, b}});
  CHECK(dead.is_zero());
  CHECK(dead.residual.factors.empty());

  // Members of the centralizer pass through unchanged.
  ScaledMonomial constant = xi_apply(basis, xi, PBWMonomial{{b}});
  CHECK(constant.coeff == Rational(1));
  REQUIRE(constant.residual.factors.size() == 1);

  // E43 has negative weight and no centralizing property here.
  CHECK_THROWS_AS(xi_apply(basis, xi, PBWMonomial{{ElemMatrix{4, 3}}}), domain_error);
}

TEST_CASE("symbol evaluation multiplies functional values") {
  BigradedBasis basis(4, 2);
  XiCharacter xi = XiCharacter::standard_for(basis);
  std::vector<Rational> phi = {Rational(2), Rational(-3, 2)};
  LinearFunctional f = make_phi_xi_functional(basis, phi, xi);

  // f restricted to the (0,1) block gives back phi, and xi on its support.
  CHECK(f.evaluate_elementary(1, 3) == GaussianRational(Rational(2)));
  CHECK(f.evaluate_elementary(2, 3) == GaussianRational(Rational(-3, 2)));
  CHECK(f.evaluate_elementary(3, 4) == GaussianRational(Rational(1)));
  CHECK(f.evaluate_elementary(1, 2) == GaussianRational(Rational(0)));

  ElemMatrix a{3, 4}, b1{1, 3}, b2{2, 3};
  PBWMonomial s{{a, b1, b2}};
  CHECK(evaluate_symbol(basis, s, f, 3) == GaussianRational(Rational(-3)));
  CHECK(evaluate_symbol(basis, s, f, 4) == GaussianRational(Rational(0)));

  // One vanishing factor kills the product.
  LinearFunctional half = make_phi_xi_functional(basis, {Rational(0), Rational(-3, 2)}, xi);
  CHECK(evaluate_symbol(basis, s, half, 3) == GaussianRational(Rational(0)));

  // Two routes to the same value: apply the character first, then phi.
  ScaledMonomial image = xi_apply(basis, xi, s);
  GaussianRational via_xi(image.coeff);
  for (const ElemMatrix& e : image.residual.factors)
    via_xi *= f.evaluate_elementary(e.row, e.col);
  CHECK(via_xi == evaluate_symbol(basis, s, f, 3));

  // The same identity across every relevant monomial of gl(3), depth 2.
  BigradedBasis small(3, 2);
  XiCharacter small_xi = XiCharacter::standard_for(small);
  LinearFunctional g = make_phi_xi_functional(small, {Rational(7, 3)}, small_xi);
  for (const PBWMonomial& t : all_monomials(small, 3)) {
    if (!classify_monomial(small, t, t.degree()).relevant) continue;
    ScaledMonomial img = xi_apply(small, small_xi, t);
    GaussianRational lhs(img.coeff);
    for (const ElemMatrix& e : img.residual.factors)
      lhs *= g.evaluate_elementary(e.row, e.col);
    CHECK(lhs == evaluate_symbol(small, t, g, t.degree()));
  }

  CHECK_THROWS_AS(make_phi_xi_functional(basis, {Rational(1)}, xi), domain_error);
  LinearFunctional wrong_size(3, ExactMatrix(3, 3));
  CHECK_THROWS_AS(evaluate_symbol(basis, s, wrong_size, 3), domain_error);
}

TEST_CASE("iterated brackets against the rank one generator") {
  CHECK(ad_x_power(1, 1) == Rational(-1) * IXElement::gen_x());
  CHECK(ad_x_power(2, 2) == Rational(2) * IXElement::monomial(0, 2));
  CHECK(ad_x_power(3, 2).is_zero());

  AdPowerReport report = ad_power_identity(6);
  CHECK(report.passed());
  CHECK(report.checks == 21);

  // The defining relation and a spot check of normal ordering.
  CHECK(commutator(IXElement::gen_i(), IXElement::gen_x()) == IXElement::gen_x());
  IXElement xi_prod = IXElement::gen_x() * IXElement::gen_i();
  IXElement expected = IXElement::monomial(1, 1) - IXElement::monomial(0, 1);
  CHECK(xi_prod == expected);
}
