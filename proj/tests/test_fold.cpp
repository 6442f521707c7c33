#include "afold/fold_ideal.hpp"

#include "afold/catalog.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace afold;

namespace {

const Arrangement& named(const std::string& name) {
  const Arrangement* a = catalog_find(name);
  REQUIRE(a != nullptr);
  return *a;
}

Ideal span_ideal(const VarSet& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(Polynomial::parse(vars, g));
  return Ideal(vars, std::move(ps));
}

}  // namespace

TEST_CASE("standard generators enumerate bounded exponent vectors") {
  const Arrangement& b3 = named("boolean3");
  const VarSet& v = b3.vars();

  auto g0 = standard_generators(b3, 0);
  REQUIRE(g0.size() == 1);
  CHECK(g0[0] == Polynomial::constant(v, 1));

  auto g2 = standard_generators(b3, 2);
  CHECK(g2.size() == 3);
  CHECK(ideal_equal(fold_ideal(b3, 2), span_ideal(v, {"x*y", "x*z", "y*z"})));

  CHECK(standard_generators(b3, 4).empty());
  CHECK(fold_ideal(b3, 4).is_zero_ideal());

  // Multiplicity caps the per-form exponent: (x:2, y) at a = 2 skips y^2.
  const Arrangement& d2 = named("double2");
  auto gd = standard_generators(d2, 2);
  CHECK(gd.size() == 2);
  CHECK(ideal_equal(fold_ideal(d2, 2), span_ideal(d2.vars(), {"x^2", "x*y"})));

  const Arrangement& t2 = named("triple2");
  CHECK(standard_generators(t2, 2).size() == 3);
  CHECK(standard_generators(t2, 3).size() == 1);
}

TEST_CASE("predicted components keep flats with positive exponent") {
  const Arrangement& d2 = named("double2");  // n = 3
  auto comps = predicted_decomposition(d2, 2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].exponent == 1);
  REQUIRE(comps[0].basis.size() == 1);
  CHECK(comps[0].basis[0] == Polynomial::parse(d2.vars(), "x"));
  CHECK(comps[1].exponent == 2);
  CHECK(comps[1].basis.size() == 2);

  // a = 1 keeps only the full-rank flat.
  auto top = predicted_decomposition(d2, 1);
  REQUIRE(top.size() == 1);
  CHECK(top[0].exponent == 1);
  CHECK(top[0].basis.size() == 2);
}

TEST_CASE("decomposition holds on curated arrangements") {
  for (const char* name : {"boolean2", "double2", "triple2", "four_lines2"}) {
    const Arrangement& s = named(name);
    for (unsigned a = 1; a <= s.n(); ++a) {
      CheckResult r = verify_decomposition(s, a);
      INFO(name, " a=", a, " detail=", r.detail);
      CHECK(r.verdict == Verdict::True);
    }
  }
}

TEST_CASE("decomposition oracle values stay fixed") {
  const Arrangement& b3 = named("boolean3");
  const VarSet& v = b3.vars();
  CheckResult r = verify_decomposition(b3, 2);
  REQUIRE(r.verdict == Verdict::True);
  REQUIRE(r.components.size() == 4);
  // Sorted by flat rank: three coordinate planes, then the irrelevant ideal.
  for (size_t i = 0; i < 3; ++i) {
    CHECK(r.components[i].exponent == 1);
    CHECK(r.components[i].basis.size() == 2);
  }
  CHECK(r.components[3].exponent == 2);
  CHECK(r.components[3].basis.size() == 3);
  Ideal byhand = intersect_many({span_ideal(v, {"x", "y"}), span_ideal(v, {"x", "z"}),
                                 span_ideal(v, {"y", "z"}),
                                 ideal_power(span_ideal(v, {"x", "y", "z"}), 2)});
  CHECK(ideal_equal(fold_ideal(b3, 2), byhand));

  // Four concurrent lines at a = 3 collapse to the cubes of the maximal ideal.
  const Arrangement& f4 = named("four_lines2");
  CheckResult rf = verify_decomposition(f4, 3);
  REQUIRE(rf.verdict == Verdict::True);
  REQUIRE(rf.components.size() == 1);
  CHECK(rf.components[0].exponent == 3);
  CHECK(rf.components[0].basis.size() == 2);
  CHECK(ideal_equal(fold_ideal(f4, 3),
                    ideal_power(span_ideal(f4.vars(), {"x", "y"}), 3)));
}

TEST_CASE("decomposition holds below full rank") {
  const Arrangement& br = named("braid3");
  const VarSet& v = br.vars();
  for (unsigned a = 1; a <= 3; ++a) {
    CheckResult r = verify_decomposition(br, a);
    INFO("braid3 a=", a, " detail=", r.detail);
    CHECK(r.verdict == Verdict::True);
  }
  // a = 1: only the rank-two span survives, and it equals the ideal itself.
  auto comps = predicted_decomposition(br, 1);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].exponent == 1);
  CHECK(ideal_equal(fold_ideal(br, 1), span_ideal(v, {"x - z", "y - z"})));
}

TEST_CASE("decomposition handles higher-dimensional lattices") {
  const Arrangement& np = named("near_pencil4");
  CheckResult r2 = verify_decomposition(np, 2);
  REQUIRE(r2.verdict == Verdict::True);
  // Exponents at a = 2: the triple point gives 1, the ambient ideal 2.
  REQUIRE(r2.components.size() == 2);
  CHECK(r2.components[0].exponent == 1);
  CHECK(r2.components[0].basis.size() == 2);
  CHECK(r2.components[1].exponent == 2);
  CHECK(r2.components[1].basis.size() == 3);

  CheckResult r4 = verify_decomposition(np, 4);
  INFO(r4.detail);
  CHECK(r4.verdict == Verdict::True);
  CHECK(r4.components.size() == 9);
}

TEST_CASE("containment in a flat prime matches the multiplicity bound") {
  for (const char* name : {"boolean3", "near_pencil4", "braid3", "mixed3"}) {
    const Arrangement& s = named(name);
    for (unsigned a = 1; a <= s.n(); ++a) {
      CheckResult r = verify_membership_bound(s, a);
      INFO(name, " a=", a, " detail=", r.detail);
      CHECK(r.verdict == Verdict::True);
    }
  }
}

TEST_CASE("colon by a support form drops one copy") {
  for (const char* name : {"triple2", "double2", "boolean3", "near_pencil4"}) {
    const Arrangement& s = named(name);
    for (unsigned a = 1; a <= s.n(); ++a)
      for (size_t i = 0; i < s.support().size(); ++i) {
        CheckResult r = verify_colon_claim(s, a, i);
        INFO(name, " a=", a, " i=", i, " detail=", r.detail);
        CHECK(r.verdict == Verdict::True);
      }
  }
}

TEST_CASE("fold ideal equals its saturation cut in degree a") {
  for (const char* name : {"double2", "boolean3", "braid3"}) {
    const Arrangement& s = named(name);
    for (unsigned a = 1; a <= s.n(); ++a) {
      CheckResult r = verify_saturation_identity(s, a);
      INFO(name, " a=", a, " detail=", r.detail);
      CHECK(r.verdict == Verdict::True);
    }
  }
  CheckResult big = verify_saturation_identity(named("near_pencil4"), 3);
  INFO(big.detail);
  CHECK(big.verdict == Verdict::True);
}

TEST_CASE("expansion along one support form") {
  const Arrangement& d2 = named("double2");
  for (size_t i = 0; i < d2.support().size(); ++i) {
    CheckResult r = verify_expansion_identity(d2, 2, i);
    INFO("double2 i=", i, " detail=", r.detail);
    CHECK(r.verdict == Verdict::True);
  }
  for (const char* name : {"triple2", "boolean3", "near_pencil4"}) {
    const Arrangement& s = named(name);
    for (unsigned a = 1; a <= s.n(); ++a)
      for (size_t i = 0; i < s.support().size(); ++i) {
        CheckResult r = verify_expansion_identity(s, a, i);
        INFO(name, " a=", a, " i=", i, " detail=", r.detail);
        CHECK(r.verdict == Verdict::True);
      }
  }
}

TEST_CASE("powers replicate the multiset") {
  CheckResult r1 = verify_power_identity(named("boolean3"), 2, 2);
  INFO(r1.detail);
  CHECK(r1.verdict == Verdict::True);

  CheckResult r2 = verify_power_identity(named("double2"), 2, 2);
  INFO(r2.detail);
  CHECK(r2.verdict == Verdict::True);

  CheckResult r3 = verify_power_identity(named("braid3"), 2, 2);
  INFO(r3.detail);
  CHECK(r3.verdict == Verdict::True);

  CheckResult r4 = verify_power_identity(named("triple2"), 2, 3);
  INFO(r4.detail);
  CHECK(r4.verdict == Verdict::True);
}

TEST_CASE("budget overruns report inconclusive") {
  GroebnerOptions tiny;
  tiny.max_pairs = 1;
  CheckResult r = verify_decomposition(named("boolean3"), 2, tiny);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.detail.find("budget") != std::string::npos);
}

TEST_CASE("witness extraction names a separating element") {
  const VarSet v = VarSet::standard({"x", "y"});
  CheckResult r = equal_with_witness(span_ideal(v, {"x"}), span_ideal(v, {"x", "y"}), {});
  CHECK(r.verdict == Verdict::False);
  CHECK(r.detail.find("y") != std::string::npos);
  CHECK(to_string(Verdict::True) == "true");
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}
