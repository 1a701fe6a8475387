#include <doctest.h>

#include "oracles.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar//enumerate.hpp"
#include "xmodbar/examples.hpp"
#include "xmodbar/xmod.hpp"

using namespace xmodbar;

namespace {

/// CM1 and CM2 over every element pair, straight from the tensors.
std::pair<bool, bool> cm_oracle(const CrossedModule& xm) {
  const auto& ro = xm.R().carrier.orders();
  const auto& so = xm.S().carrier.orders();
  const auto& act = xm.action.tensor.constants();
  auto eta = [&](const Element& r) {
    Element y(std::vector<Residue>(so.size(), 0));
    for (std::size_t i = 0; i < ro.size(); ++i) y = oracle::add(so, y, oracle::scale(so, r[i], xm.eta.map.images()[i]));
    return y;
  };
  bool cm1 = true, cm2 = true;
  for (const auto& s : oracle::all_elements(so)) {
    for (const auto& r : oracle::all_elements(ro)) {
      cm1 = cm1 && eta(oracle::bilinear(ro, act, s, r)) == oracle::bilinear(so, xm.S().mul.constants(), s, eta(r));
    }
  }
  for (const auto& r : oracle::all_elements(ro)) {
    for (const auto& r2 : oracle::all_elements(ro)) {
      cm2 = cm2 && oracle::bilinear(ro, act, eta(r), r2) == oracle::bilinear(ro, xm.R().mul.constants(), r, r2);
    }
  }
  return {cm1, cm2};
}

const Check& leaf(const Check& c, std::string_view name) {
  const Check* p = c.find_named(name);
  REQUIRE(p);
  return *p;
}

}  // namespace

TEST_SUITE("xmod") {

TEST_CASE("F1 passes CM1 and CM2 exhaustively within 32 tuples") {
  Policy p;
  const Check c = validate_crossed_module(examples::f1(), p);
  CHECK(c.passed());
  for (const char* name : {"CM1: eta(s.r) = s eta(r)", "CM2: eta(r).r' = rr'"}) {
    const Check& l = leaf(c, name);
    CHECK(l.status == Status::Pass);
    CHECK(l.coverage.rfind("exhaustive", 0) == 0);
  }
  CHECK(leaf(c, "CM1: eta(s.r) = s eta(r)").coverage == "exhaustive 8/8");
  CHECK(leaf(c, "CM2: eta(r).r' = rr'").coverage == "exhaustive 4/4");
}

TEST_CASE("F3 fails CM2 at (g, g)") {
  Policy p;
  const Check c = validate_crossed_module(examples::f3(), p);
  const Check& cm2 = leaf(c, "CM2: eta(r).r' = rr'");
  REQUIRE(cm2.status == Status::Fail);
  REQUIRE(cm2.witness);
  CHECK(cm2.witness->values == std::vector<Element>{Element{1}, Element{1}});
  CHECK(cm2.klass == CheckClass::Axiom);
}

TEST_CASE("the CM1 control fails CM1 only") {
  Policy p;
  const Check c = validate_crossed_module(examples::cm1_failure(), p);
  CHECK(leaf(c, "CM1: eta(s.r) = s eta(r)").status == Status::Fail);
  CHECK(leaf(c, "CM2: eta(r).r' = rr'").status == Status::Pass);
  const Check c2 = validate_crossed_module(examples::cm2_failure(), p);
  CHECK(leaf(c2, "CM1: eta(s.r) = s eta(r)").status == Status::Pass);
  CHECK(leaf(c2, "CM2: eta(r).r' = rr'").status == Status::Fail);
}

TEST_CASE("classification agrees with the element-level oracle and the sweeps") {
  Policy p;
  for (Residue m : {2, 3}) {
    for (const auto& cand : enumerate_xmods(m, 1)) {
      const auto [cm1, cm2] = cm_oracle(cand.xm);
      CHECK(cand.cls.cm1 == cm1);
      CHECK(cand.cls.cm2 == cm2);
      CHECK(validate_crossed_module(cand.xm, p).passed() == cand.cls.crossed());
      if (cand.cls.algebras_ok && cand.cls.hom_ok) {
        CHECK(crossed_on_generators(cand.xm.eta, cand.xm.action) == cand.cls.crossed());
      }
    }
  }
}

TEST_CASE("semidirect criteria are equivalent to CM1 and CM2 for genuine actions") {
  Policy p;
  for (Residue m : {2, 3}) {
    for (const auto& cand : enumerate_xmods(m, 1)) {
      if (!cand.cls.action_ok || !cand.cls.hom_ok) continue;
      CHECK(semidirect_to_base_check(cand.xm, p).passed() == cand.cls.cm1);
      CHECK(self_semidirect_check(cand.xm, p).passed() == cand.cls.cm2);
    }
  }
}

TEST_CASE("consequences hold on every enumerated crossed module") {
  Policy p;
  std::size_t crossed = 0;
  for (Residue m : {2, 3, 4}) {
    for (const auto& cand : enumerate_xmods(m, 1)) {
      if (!cand.cls.crossed()) continue;
      ++crossed;
      const Check c = consequence_checks(cand.xm, p);
      CHECK_MESSAGE(c.passed(), cand.xm.name);
      CHECK_FALSE(c.has_failure(CheckClass::Theorem));
    }
  }
  CHECK(crossed > 0);
}

TEST_CASE("identity and inclusion crossed modules") {
  Policy p;
  const Algebra s = examples::f2().S();
  CHECK(validate_crossed_module(identity_xmod(s), p).passed());
  const Element gens[] = {Element{0, 1, 0}, Element{0, 0, 1}};
  const CrossedModule inc = inclusion_xmod(s, Submodule::span(s.carrier, gens));
  CHECK(validate_crossed_module(inc, p).passed());
  const Element x{0, 1, 0};
  CHECK_THROWS(inclusion_xmod(s, Submodule::span(s.carrier, std::span(&x, 1))));
}

TEST_CASE("labels report CM verdicts alongside action failures") {
  CHECK(classify(examples::f1()).label() == "crossed");
  CHECK(classify(examples::f3()).label() == "cm1-cm2-fail,not-an-action");
  CHECK(classify(examples::cm1_failure()).label() == "cm1-fail");
  CHECK(classify(examples::cm2_failure()).label() == "cm2-fail");
}

TEST_CASE("mismatched action and eta are rejected on assembly") {
  const CrossedModule f1 = examples::f1();
  CHECK_THROWS_AS(make_crossed_module("bad", f1.eta, {{{1, 0}}}), StructuralError);
}

}  // TEST_SUITE
