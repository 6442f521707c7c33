#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afold/groebner.hpp"

using namespace afold;

namespace {

VarSet xyz() { return VarSet::standard({"x", "y", "z"}); }

Polynomial P(const VarSet& v, const std::string& s) { return Polynomial::parse(v, s); }

Ideal ideal(const VarSet& v, std::initializer_list<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(P(v, s));
  return Ideal(v, std::move(ps));
}

}  // namespace

TEST_CASE("normal form with full tail reduction") {
  VarSet v = xyz();
  std::vector<Polynomial> basis = {P(v, "x - y")};
  CHECK(normal_form(P(v, "x*y"), basis, MonomialOrder::degrevlex()) == P(v, "y^2"));
  CHECK(normal_form(P(v, "x^2 + x*y"), basis, MonomialOrder::degrevlex()) == P(v, "2*y^2"));
  CHECK(normal_form(P(v, "z^3"), basis, MonomialOrder::degrevlex()) == P(v, "z^3"));
}

TEST_CASE("reduced basis of the twisted cubic") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"y - x^2", "z - x^3"});
  const GroebnerBasis& gb = I.groebner();
  REQUIRE(gb.elems.size() == 3);
  // frozen: worked through Buchberger by hand; ascending leading terms
  CHECK(gb.elems[0] == P(v, "y^2 - x*z"));
  CHECK(gb.elems[1] == P(v, "x*y - z"));
  CHECK(gb.elems[2] == P(v, "x^2 - y"));
  CHECK(verify_groebner(v, gb));
  // every input generator lies in the span of the basis
  for (const auto& g : I.gens())
    CHECK(normal_form(g, gb.elems, gb.order).is_zero());
}

TEST_CASE("monomial ideal is its own reduced basis") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"x^2", "x*y"});
  const GroebnerBasis& gb = I.groebner();
  REQUIRE(gb.elems.size() == 2);
  CHECK(gb.elems[0] == P(v, "x*y"));
  CHECK(gb.elems[1] == P(v, "x^2"));
}

TEST_CASE("verify_groebner rejects a non-basis") {
  VarSet v = xyz();
  GroebnerBasis fake;
  fake.order = MonomialOrder::degrevlex();
  fake.elems = {P(v, "y - x^2"), P(v, "z - x^3")};
  CHECK(!verify_groebner(v, fake));
}

TEST_CASE("membership and equality") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"y - x^2", "z - x^3"});
  CHECK(membership(P(v, "y^2 - x*z"), I));
  CHECK(membership(P(v, "(y - x^2)*(x + z) - 3*(z - x^3)"), I));
  CHECK(!membership(P(v, "x"), I));
  CHECK(membership(Polynomial::zero(v), I));
  Ideal J = ideal(v, {"x^2 - y", "x*y - z"});
  CHECK(ideal_equal(I, J));
  CHECK(!ideal_equal(I, ideal(v, {"x^2 - y"})));
}

TEST_CASE("zero and unit ideals") {
  VarSet v = xyz();
  Ideal Z = Ideal::zero(v);
  CHECK(Z.is_zero_ideal());
  CHECK(Z.groebner().elems.empty());
  CHECK(membership(Polynomial::zero(v), Z));
  CHECK(!membership(P(v, "x"), Z));
  Ideal U = Ideal::unit(v);
  REQUIRE(U.groebner().elems.size() == 1);
  CHECK(U.groebner().elems[0] == Polynomial::constant(v, 1));
  CHECK(ideal_equal(intersect(ideal(v, {"x"}), U), ideal(v, {"x"})));
  CHECK(ideal_equal(intersect(Z, ideal(v, {"x"})), Z));
}

TEST_CASE("sum, product, power") {
  VarSet v = xyz();
  Ideal m = ideal(v, {"x", "y"});
  CHECK(ideal_equal(ideal_sum(ideal(v, {"x"}), ideal(v, {"y"})), m));
  CHECK(ideal_equal(ideal_product(ideal(v, {"x"}), ideal(v, {"y"})), ideal(v, {"x*y"})));
  Ideal m2 = ideal_power(m, 2);
  CHECK(ideal_equal(m2, ideal(v, {"x^2", "x*y", "y^2"})));
  CHECK(ideal_equal(ideal_power(m, 0), Ideal::unit(v)));
  CHECK(ideal_equal(ideal_power(m, 1), m));
}

TEST_CASE("pairwise intersection") {
  VarSet v = xyz();
  CHECK(ideal_equal(intersect(ideal(v, {"x"}), ideal(v, {"y"})), ideal(v, {"x*y"})));
  // x-axis plane ideal meets the square of the line ideal
  Ideal I = ideal(v, {"x"});
  Ideal J = ideal_power(ideal(v, {"x", "y"}), 2);
  Ideal cap = intersect(I, J);
  CHECK(ideal_equal(cap, ideal(v, {"x^2", "x*y"})));
  CHECK(ideal_equal(intersect(J, I), cap));
  CHECK(ideal_equal(intersect(I, I), I));
  CHECK(verify_groebner(v, cap.groebner()));
  // seeded basis must match a fresh recomputation
  Ideal fresh(v, cap.gens());
  CHECK(fresh.groebner().elems == cap.groebner().elems);
}

TEST_CASE("intersection dimensions agree with subspace arithmetic") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"x"});
  Ideal J = ideal_power(ideal(v, {"x", "y"}), 2);
  Ideal cap = intersect(I, J);
  Ideal sum = ideal_sum(I, J);
  for (unsigned d = 2; d <= 5; ++d) {
    size_t lhs = graded_piece_dim(cap, d);
    size_t rhs = graded_piece_dim(I, d) + graded_piece_dim(J, d) - graded_piece_dim(sum, d);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("three-way intersection") {
  VarSet v = xyz();
  std::vector<Ideal> parts = {ideal(v, {"x"}), ideal(v, {"y"}), ideal(v, {"z"})};
  CHECK(ideal_equal(intersect_many(parts), ideal(v, {"x*y*z"})));
  CHECK_THROWS_AS(intersect_many({}), StructuralError);
}

TEST_CASE("colon by an element") {
  VarSet v = xyz();
  CHECK(ideal_equal(quotient(ideal(v, {"x^2", "x*y"}), P(v, "x")), ideal(v, {"x", "y"})));
  CHECK(ideal_equal(quotient(ideal(v, {"x*y*z"}), P(v, "z")), ideal(v, {"x*y"})));
  // colon by a unit returns the ideal itself
  CHECK(ideal_equal(quotient(ideal(v, {"x*y"}), Polynomial::constant(v, 2)), ideal(v, {"x*y"})));
  CHECK_THROWS_AS(quotient(ideal(v, {"x"}), Polynomial::zero(v)), StructuralError);
}

TEST_CASE("colon by an ideal") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"x^2", "x*y"});
  Ideal m = ideal(v, {"x", "y"});
  CHECK(ideal_equal(quotient_ideal(I, m), ideal(v, {"x"})));
}

TEST_CASE("saturation stabilizes") {
  VarSet v2 = VarSet::standard({"x", "y"});
  Ideal I = ideal(v2, {"x^2", "x*y"});
  Ideal m = ideal(v2, {"x", "y"});
  CHECK(ideal_equal(saturate(I, m), ideal(v2, {"x"})));
  // saturating a saturated ideal is the identity
  CHECK(ideal_equal(saturate(ideal(v2, {"x"}), m), ideal(v2, {"x"})));
  CHECK(ideal_equal(saturate(Ideal::zero(v2), m), Ideal::zero(v2)));
  // the irrelevant maximal ideal is not associated here, so nothing changes
  VarSet v = xyz();
  Ideal J = ideal(v, {"x^2", "x*y"});
  CHECK(ideal_equal(saturate(J, ideal(v, {"x", "y", "z"})), J));
  CHECK(ideal_equal(saturate(J, ideal(v, {"x", "y"})), ideal(v, {"x"})));
}

TEST_CASE("elimination") {
  VarSet tv = VarSet::standard({"t", "x", "y"});
  Ideal I = ideal(tv, {"t - x", "t - y"});
  Ideal E = eliminate(I, {0});
  REQUIRE(E.gens().size() == 1);
  CHECK(E.gens()[0] == P(tv, "x - y"));
  // eliminating nothing is the identity
  CHECK(ideal_equal(eliminate(I, {}), I));
  // nothing survives when the ideal needs the eliminated variable
  CHECK(eliminate(ideal(tv, {"t - x^2"}), {0}).is_zero_ideal());
}

TEST_CASE("graded piece dimensions") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"x*y", "x*z", "y*z"});
  CHECK(graded_piece_dim(I, 1) == 0);
  CHECK(graded_piece_dim(I, 2) == 3);
  CHECK(graded_piece_dim(I, 3) == 7);  // 9 products, x*y*z counted once
  CHECK(quotient_piece_dim(I, 3) == 3);
  CHECK_THROWS_AS(graded_piece_dim(ideal(v, {"x + y^2"}), 2), StructuralError);
}

TEST_CASE("alpha invariant") {
  VarSet v = xyz();
  CHECK(alpha_invariant(ideal(v, {"x*y", "x*z", "y*z"})) == 2u);
  CHECK(alpha_invariant(ideal(v, {"x^2", "x*y"})) == 2u);
  CHECK(alpha_invariant(ideal(v, {"x"})) == 1u);
  CHECK(!alpha_invariant(Ideal::zero(v)).has_value());
}

TEST_CASE("budgets turn into structured failures") {
  VarSet v = xyz();
  GroebnerOptions tiny;
  tiny.max_pairs = 1;
  bool threw = false;
  try {
    buchberger(v, {P(v, "y - x^2"), P(v, "z - x^3"), P(v, "x*z - y^2 + x")}, MonomialOrder::degrevlex(), tiny);
  } catch (const BudgetExceeded& e) {
    threw = true;
    CHECK(e.stats.pairs_generated >= 1);
  }
  CHECK(threw);
}

TEST_CASE("basis cache is per order and shared across copies") {
  VarSet v = xyz();
  Ideal I = ideal(v, {"y - x^2", "z - x^3"});
  const GroebnerBasis& drl = I.groebner();
  Ideal copy = I;
  CHECK(&copy.groebner() == &drl);
  const GroebnerBasis& lex = I.groebner(MonomialOrder::lex());
  CHECK(lex.elems != drl.elems);
  CHECK(verify_groebner(v, lex));
}
