#include "afold/rees.hpp"

#include <algorithm>

#include "afold/catalog.hpp"
#include "afold/linalg.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace afold;

namespace {

const Arrangement& named(const std::string& name) {
  const Arrangement* a = catalog_find(name);
  REQUIRE(a != nullptr);
  return *a;
}

bool contains_poly(const std::vector<Polynomial>& fam, const Polynomial& p) {
  return std::any_of(fam.begin(), fam.end(), [&](const Polynomial& g) { return g == p; });
}

size_t find_form(const Arrangement& a, const std::string& formatted) {
  for (size_t i = 0; i < a.support().size(); ++i)
    if (a.support()[i].form.format() == formatted) return i;
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("setup builds pair products over the bigraded ring") {
  ReesSetup s = rees_setup(named("generic4"));

  CHECK(s.pairs.size() == 6);
  CHECK(s.xt.size() == 9);
  CHECK(s.xt.x_count() == 3);
  CHECK(s.xt.t_count() == 6);
  CHECK(s.xt.name(3) == "t12");
  CHECK(s.xt.name(8) == "t34");

  // lex pair order and the symmetric lookup
  CHECK(t_index(s, 0, 1) == 0);
  CHECK(t_index(s, 0, 3) == 2);
  CHECK(t_index(s, 1, 2) == 3);
  CHECK(t_index(s, 2, 3) == 5);
  CHECK(t_index(s, 3, 2) == t_index(s, 2, 3));
  CHECK_THROWS_AS(t_index(s, 1, 1), StructuralError);
  CHECK_THROWS_AS(t_index(s, 0, 4), StructuralError);

  // product omitting the forms x and y is z(x+y+z)
  const size_t ix = find_form(s.sigma, "x"), iy = find_form(s.sigma, "y");
  const Polynomial expected =
      Polynomial::parse(s.xt, "z") * Polynomial::parse(s.xt, "x + y + z");
  CHECK(s.f[t_index(s, ix, iy)] == expected);
  for (const auto& f : s.f) CHECK(f.degree() == 2);

  ReesSetup s5 = rees_setup(named("generic5"));
  CHECK(s5.f.size() == 10);
  for (const auto& f : s5.f) CHECK(f.degree() == 3);
}

TEST_CASE("setup rejects inputs outside its domain") {
  CHECK_THROWS_AS(rees_setup(named("double2")), StructuralError);    // repeated form
  CHECK_THROWS_AS(rees_setup(named("braid3")), StructuralError);     // rank two
  CHECK_THROWS_AS(rees_setup(named("boolean3")), StructuralError);   // too few forms
  CHECK_THROWS_AS(rees_setup(named("boolean4")), StructuralError);   // four variables
}

TEST_CASE("family sizes follow the combinatorics") {
  ReesSetup g4 = rees_setup(named("generic4"));
  CHECK(family_circuit(g4).empty());
  CHECK(family_bilinear(g4).size() == 12);   // 3 per triple
  CHECK(family_quadruple(g4).size() == 2);   // 2 per quadruple
  CHECK(family_dependent(g4).size() == 4);   // one dependency, no outside index

  ReesSetup np4 = rees_setup(named("near_pencil4"));
  CHECK(family_circuit(np4).size() == 1);
  CHECK(family_dependent(np4).size() == 4);

  ReesSetup g5 = rees_setup(named("generic5"));
  CHECK(family_bilinear(g5).size() == 30);
  CHECK(family_quadruple(g5).size() == 10);
  CHECK(family_dependent(g5).size() == 25);  // 5 dependencies, 4 + 1 elements each
}

TEST_CASE("frozen family elements") {
  ReesSetup np4 = rees_setup(named("near_pencil4"));
  // support sorts to (z, y, x, x+y); the circuit is (y, x, x+y) with
  // dependency (1, 1, -1), so the linear relation is t34 + t24 - t23
  CHECK(family_circuit(np4)[0] == Polynomial::parse(np4.xt, "t34 + t24 - t23"));
  // quadruple dependency (0, 1, 1, -1) feeds the fourth quadratic pattern
  CHECK(contains_poly(family_dependent(np4),
                      Polynomial::parse(np4.xt, "t14*t34 + t14*t24 - t12*t34")));

  ReesSetup g4 = rees_setup(named("generic4"));
  auto quads = family_quadruple(g4);
  CHECK(contains_poly(quads, Polynomial::parse(g4.xt, "t12*t34 - t13*t24")));
  CHECK(contains_poly(quads, Polynomial::parse(g4.xt, "t12*t34 - t14*t23")));
}

TEST_CASE("every family element vanishes under the product substitution") {
  for (const char* name : {"generic4", "near_pencil4", "generic5"}) {
    CAPTURE(name);
    ReesSetup s = rees_setup(named(name));
    CheckResult r = verify_substitution_vanishing(s);
    CHECK(r.verdict == Verdict::True);
  }
}

TEST_CASE("independent generator count matches the singular-point formula") {
  CHECK(expected_generator_count(named("boolean3")) == 3);
  CHECK(expected_generator_count(named("braid3")) == 2);
  CHECK(expected_generator_count(named("near_pencil4")) == 5);
  CHECK(expected_generator_count(named("generic4")) == 6);
  CHECK(expected_generator_count(named("generic5")) == 10);

  // cross-check against the degree-a slice of the product ideal
  const Arrangement& g4 = named("generic4");
  CHECK(graded_piece_dim(fold_ideal(g4, 2), 2) == 6);
  const Arrangement& np4 = named("near_pencil4");
  CHECK(graded_piece_dim(fold_ideal(np4, 2), 2) == 5);

  CHECK(verify_generator_count(rees_setup(g4)).verdict == Verdict::True);
  CHECK(verify_generator_count(rees_setup(np4)).verdict == Verdict::True);
}

TEST_CASE("fiber ideal linear and quadric slices") {
  ReesSetup g4 = rees_setup(named("generic4"));
  Ideal fib4 = fiber_ideal(g4);
  // no three concurrent lines, so no linear relation among the products
  CHECK(graded_piece_dim(fib4, 1) == 0);
  // products span all conics, so the quadric slice of the kernel of
  // Sym^2(conics) -> quartics has dimension 21 - 15
  CHECK(graded_piece_dim(fib4, 2) == 6);

  ReesSetup np4 = rees_setup(named("near_pencil4"));
  Ideal fibn = fiber_ideal(np4);
  CHECK(graded_piece_dim(fibn, 1) == 1);
}

TEST_CASE("families embed in the kernels even element-wise") {
  ReesSetup s = rees_setup(named("near_pencil4"));
  Ideal rees = rees_ideal(s);
  Ideal fib = fiber_ideal(s);

  for (const auto& g : family_circuit(s)) {
    CHECK(membership(g, rees));
    CHECK(membership(g, fib));
  }
  for (const auto& g : family_bilinear(s)) CHECK(membership(g, rees));
  for (const auto& g : family_quadruple(s)) CHECK(membership(g, fib));
  for (const auto& g : family_dependent(s)) CHECK(membership(g, fib));

  // the fiber kernel is the relation-variable part of the blow-up kernel
  std::vector<size_t> front = {0, 1, 2};
  CHECK(ideal_equal(eliminate(rees, front), fib));
}

TEST_CASE("defining ideals match their generator families") {
  for (const char* name : {"generic4", "near_pencil4"}) {
    CAPTURE(name);
    ReesSetup s = rees_setup(named(name));

    CheckResult fiber = verify_fiber_presentation(s);
    CHECK(fiber.verdict == Verdict::True);
    CHECK(fiber.detail.empty());

    CheckResult rees = verify_fiber_type(s);
    CHECK(rees.verdict == Verdict::True);
    CHECK(rees.detail.empty());
  }
}

TEST_CASE("minimal generators stay linear in the coordinates") {
  ReesSetup s = rees_setup(named("near_pencil4"));
  CHECK(verify_low_x_degrees(s).verdict == Verdict::True);

  auto gens = rees_minimal_generators(s);
  auto hist = bidegree_histogram(Ideal(s.xt, gens));
  size_t linear_t = 0;
  for (const auto& [bd, count] : hist) {
    CHECK(bd.first <= 1);
    if (bd == std::pair<int, int>{0, 1}) linear_t = count;
  }
  CHECK(linear_t == 1);  // exactly the circuit

  CHECK(verify_low_x_degrees(rees_setup(named("generic4"))).verdict == Verdict::True);
}

TEST_CASE("histogram requires bihomogeneous input") {
  ReesSetup s = rees_setup(named("generic4"));
  Ideal bad(s.xt, {Polynomial::parse(s.xt, "x + t12")});
  CHECK_THROWS_AS(bidegree_histogram(bad), StructuralError);
}

TEST_CASE("tiny budgets surface as inconclusive") {
  ReesSetup s = rees_setup(named("generic4"));
  GroebnerOptions opt;
  opt.max_pairs = 1;
  CheckResult r = verify_fiber_type(s, opt);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.detail.find("budget") != std::string::npos);
}
