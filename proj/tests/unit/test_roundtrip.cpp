#include <doctest.h>

#include "xmodbar/enumerate.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar/examples.hpp"
#include "xmodbar/roundtrip.hpp"

using namespace xmodbar;

TEST_SUITE("roundtrip") {

TEST_CASE("extraction recovers eta and the action exactly") {
  std::vector<CrossedModule> pool{examples::f1(), examples::f2(), examples::f2_sub_xmod()};
  for (Residue m : {2, 3}) {
    for (const auto& cand : enumerate_xmods(m, 1)) {
      if (cand.cls.crossed()) pool.push_back(cand.xm);
    }
  }
  for (const auto& xm : pool) {
    const BarAlgebra t = build_bar_algebra(xm, 4);
    const CrossedModule back = extract_crossed_module(t);
    CHECK(back.eta.map.images() == xm.eta.map.images());
    CHECK(back.action.tensor.constants() == xm.action.tensor.constants());
    const BarAlgebra again = rebuild(t);
    REQUIRE(again.levels.size() == t.levels.size());
    for (std::size_t k = 0; k < t.levels.size(); ++k) CHECK(again.levels[k] == t.levels[k]);
  }
}

TEST_CASE("roundtrip check passes on F1 and F2 with perturbed survivors") {
  Policy p;
  for (const auto& xm : {examples::f1(), examples::f2()}) {
    const Check c = roundtrip_check(xm, 3, p, PerturbOptions{200, 5});
    CHECK_MESSAGE(c.passed(), xm.name);
  }
}

TEST_CASE("perturb and filter keeps the canonical structure first") {
  const PerturbResult r = perturb_and_filter(examples::f1(), 3, PerturbOptions{300, 9});
  CHECK(r.candidates == 300);
  REQUIRE_FALSE(r.survivors.empty());
  const BarAlgebra canon = build_bar_algebra(examples::f1(), 3);
  for (std::size_t k = 0; k < canon.levels.size(); ++k) CHECK(r.survivors.front().levels[k] == canon.levels[k]);
  for (const auto& s : r.survivors) {
    CHECK(structure_verdict(s).all());
    const BarAlgebra again = rebuild(s);
    for (std::size_t k = 0; k < s.levels.size(); ++k) CHECK(again.levels[k] == s.levels[k]);
  }
}

TEST_CASE("the canonical structure satisfies every verdict") {
  const StructureVerdict v = structure_verdict(build_bar_algebra(examples::f2(), 3));
  CHECK(v.all());
}

TEST_CASE("a product with an S component cannot be read as an action") {
  BarAlgebra t = build_bar_algebra(examples::f1(), 2);
  // (1, 0, 0) * (0, 0, g) gets a nonzero S coordinate.
  auto c = t.levels[1].mul.constants();
  c[0][2] = Element{0, 1, 1};
  c[2][0] = Element{0, 1, 1};
  t.levels[1] = Algebra(t.levels[1].carrier, c);
  CHECK_THROWS_AS(extract_action(t), MalformedStructure);
}

TEST_CASE("F3 round trip fails at CM2 with witness (g, g)") {
  Policy p;
  const Check c = roundtrip_check(examples::f3(), 2, p, PerturbOptions{10, 1});
  const Check* cm2 = c.find_named("CM2: eta(r).r' = rr'");
  REQUIRE(cm2);
  CHECK(cm2->status == Status::Fail);
  REQUIRE(cm2->witness);
  CHECK(cm2->witness->values == std::vector<Element>{Element{1}, Element{1}});
}

}  // TEST_SUITE
