#include <doctest.h>

#include "xmodbar/bibar.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar/examples.hpp"

using namespace xmodbar;

namespace {

const Check& node(const Check& c, std::string_view name) {
  const Check* p = c.find_named(name);
  REQUIRE_MESSAGE(p, name);
  return *p;
}

}  // namespace

TEST_SUITE("bibar") {

TEST_CASE("F2 inclusion at (2,2) passes every bisimplicial check") {
  Policy p;
  const BiBar b = build_bibar(examples::f2_inclusion(), 2, 2);
  CHECK(b.klass() == CheckClass::Theorem);
  const Check c = verify_bibar(b, p);
  CHECK(c.passed());
  for (const char* g : {"horizontal identities", "vertical identities", "horizontal-vertical commutation",
                        "low-dimension squares", "operators are module maps", "vertical operators are multiplicative"}) {
    CHECK(node(c, g).effective() == Status::Pass);
  }
}

TEST_CASE("carriers are B2_n followed by m copies of B1_n") {
  const BiBar b = build_bibar(examples::f2_inclusion(), 2, 2);
  // S2 rank 3, R2 rank 2, S1 and R1 rank 1.
  CHECK(b.carrier(0, 0).rank() == 3);
  CHECK(b.carrier(0, 1).rank() == 4);
  CHECK(b.carrier(1, 0).rank() == 5);
  CHECK(b.carrier(1, 1).rank() == 7);
  CHECK(b.carrier(2, 2).rank() == 7 + 2 * 3);
}

TEST_CASE("low-dimension operators by hand") {
  const BiBar b = build_bibar(examples::f2_inclusion(), 1, 1);
  // (0,1): d^h_0(s2, s1) = s2 + alpha2(s1), alpha2(1) = x^2.
  CHECK(b.h_face(0, 1, 0, Element{0, 0, 0, 1}) == Element{0, 0, 1});
  CHECK(b.h_face(0, 1, 1, Element{0, 0, 0, 1}) == Element{0, 0, 0});
  // (1,0): d^v_0(s2, r2) = s2 + eta2(r2), eta2(x) = x.
  CHECK(b.v_face(1, 0, 0, Element{0, 0, 0, 1, 0}) == Element{0, 1, 0});
  CHECK(b.v_face(1, 0, 1, Element{1, 0, 0, 1, 0}) == Element{1, 0, 0});
  // (1,1): d^h_0 adds alpha1(r1) = x^2 to r2.
  CHECK(b.h_face(1, 1, 0, Element{0, 0, 0, 0, 0, 0, 1}) == Element{0, 0, 0, 0, 1});
  // (1,1): d^v_0 applies d_0 blockwise; eta1 is the identity of k.
  CHECK(b.v_face(1, 1, 0, Element{0, 0, 0, 1, 0, 0, 1}) == Element{0, 1, 0, 1});
  // Degeneracies insert zeros.
  CHECK(b.v_degeneracy(0, 1, 0, Element{1, 0, 0, 1}) == Element{1, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("corrupted Phi fails commutation at (1,1)") {
  Policy p;
  const XModMorphism inc = examples::f2_inclusion();
  const BarAlgebra src = build_bar_algebra(inc.source, 2);
  const BarAlgebra tgt = build_bar_algebra(inc.target, 2);
  const BiBar b = build_bibar(inc, 2, 2, corrupted_phi_maps(inc, src, tgt, 2));
  CHECK(b.klass() == CheckClass::Axiom);
  const Check c = verify_bibar(b, p);
  const Check& at11 = node(c, "d^h_i d^v_j = d^v_j d^h_i at (1,1)");
  CHECK(at11.status == Status::Fail);
  CHECK(at11.witness.has_value());
  CHECK(node(c, "horizontal identities").effective() == Status::Pass);
  CHECK(node(c, "vertical identities").effective() == Status::Pass);
}

TEST_CASE("identity morphisms of enumerated fixtures give bisimplicial modules") {
  Policy p;
  for (const auto& xm : {examples::f1(), examples::f2_sub_xmod()}) {
    CHECK_MESSAGE(verify_bibar(build_bibar(identity_morphism(xm), 2, 2), p).passed(), xm.name);
  }
}

TEST_CASE("truncation is capped") {
  CHECK_THROWS_AS(build_bibar(examples::f2_inclusion(), kMaxBiBarDepth + 1, 1), UnsupportedScale);
}

}  // TEST_SUITE
