#include <doctest.h>

#include "oracles.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar//bar.hpp"
#include "xmodbar/enumerate.hpp"
#include "xmodbar/examples.hpp"

using namespace xmodbar;

namespace {

/// The level-k product written out from scratch on the flat layout
/// (s, a_1, ..., a_k): coordinate j of the R part is
///   s.b_j + s'.a_j + (a_1 + ... + a_{j-1}) b_j + a_j (b_1 + ... + b_j).
Element bar_product_oracle(const CrossedModule& xm, std::size_t k, const Element& x, const Element& y) {
  const auto& so = xm.S().carrier.orders();
  const auto& ro = xm.R().carrier.orders();
  const std::size_t ns = so.size(), nr = ro.size();
  auto part = [&](const Element& e, std::size_t block) {
    if (block == 0) return Element(std::vector<Residue>(e.coeffs.begin(), e.coeffs.begin() + ns));
    const auto begin = e.coeffs.begin() + ns + (block - 1) * nr;
    return Element(std::vector<Residue>(begin, begin + nr));
  };
  const auto& smul = xm.S().mul.constants();
  const auto& rmul = xm.R().mul.constants();
  const auto& act = xm.action.tensor.constants();
  const Element s = part(x, 0), s2 = part(y, 0);
  std::vector<Residue> out = oracle::bilinear(so, smul, s, s2).coeffs;
  Element prefix_a(std::vector<Residue>(nr, 0)), prefix_b(std::vector<Residue>(nr, 0));
  for (std::size_t j = 1; j <= k; ++j) {
    const Element a = part(x, j), b = part(y, j);
    const Element sum_b = oracle::add(ro, prefix_b, b);
    Element c = oracle::bilinear(ro, act, s, b);
    c = oracle::add(ro, c, oracle::bilinear(ro, act, s2, a));
    c = oracle::add(ro, c, oracle::bilinear(ro, rmul, prefix_a, b));
    c = oracle::add(ro, c, oracle::bilinear(ro, rmul, a, sum_b));
    out.insert(out.end(), c.coeffs.begin(), c.coeffs.end());
    prefix_a = oracle::add(ro, prefix_a, a);
    prefix_b = sum_b;
  }
  return Element(out);
}

}  // namespace

TEST_SUITE("bar") {

TEST_CASE("F1 bar construction passes every check to level 4") {
  Policy p;
  const BarAlgebra t = build_bar_algebra(examples::f1(), 4);
  CHECK(t.klass == CheckClass::Theorem);
  const Check c = verify_bar(t, p);
  CHECK(c.passed());
  for (const char* group : {"simplicial identities", "faces and degeneracies are multiplicative", "ideal axiom",
                            "decomposition", "closed formulas", "eta_k"}) {
    const Check* g = c.find_named(group);
    REQUIRE_MESSAGE(g, group);
    CHECK(g->effective() == Status::Pass);
  }
  CHECK(t.module.level(4).size() == 64);
}

TEST_CASE("level products agree with an independent closed form") {
  oracle::Gen g(31);
  std::vector<CrossedModule> pool{examples::f1(), examples::f2()};
  for (const auto& cand : enumerate_xmods(3, 1)) {
    if (cand.cls.crossed()) pool.push_back(cand.xm);
  }
  for (const auto& xm : pool) {
    const BarAlgebra t = build_bar_algebra(xm, 3);
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto& o = t.module.level(k).orders();
      for (int trial = 0; trial < 30; ++trial) {
        const Element x = g.element(o), y = g.element(o);
        REQUIRE(t.levels[k].mul(x, y) == bar_product_oracle(xm, k, x, y));
      }
    }
  }
}

TEST_CASE("face and degeneracy formulas on F1") {
  const BarAlgebra t = build_bar_algebra(examples::f1(), 2);
  const BarModule& b = t.module;
  // B_1 = S x R; d_0(s, r) = s + eta(r), d_1(s, r) = s.
  CHECK(b.face(1, 0, Element{0, 0, 1}) == Element{0, 1});
  CHECK(b.face(1, 1, Element{0, 0, 1}) == Element{0, 0});
  CHECK(b.face(1, 0, Element{1, 1, 1}) == Element{1, 0});
  // d_1 on B_2 adds the two R entries; s_0 inserts zero in front.
  CHECK(b.face(2, 1, Element{0, 0, 1, 1}) == Element{0, 0, 0});
  CHECK(b.face(2, 0, Element{0, 0, 1, 0}) == Element{0, 1, 0});
  CHECK(b.face(2, 2, Element{1, 0, 1, 1}) == Element{1, 0, 1});
  CHECK(b.degeneracy(1, 0, Element{1, 1, 1}) == Element{1, 1, 0, 1});
  CHECK(b.degeneracy(1, 1, Element{1, 1, 1}) == Element{1, 1, 1, 0});
}

TEST_CASE("simplicial identities on sampled enumerated crossed modules") {
  Policy p;
  oracle::Gen g(32);
  std::vector<CrossedModule> crossed;
  for (const auto& cand : enumerate_xmods(2, 2)) {
    if (cand.cls.crossed() && cand.xm.R().carrier.rank() + cand.xm.S().carrier.rank() <= 3) crossed.push_back(cand.xm);
  }
  REQUIRE(crossed.size() > 20);
  for (int trial = 0; trial < 20; ++trial) {
    const CrossedModule& xm = crossed[g.below(crossed.size())];
    const Check c = verify_bar(build_bar_algebra(xm, 3), p);
    CHECK_MESSAGE(c.passed(), xm.name);
  }
}

TEST_CASE("S_k and R_k embeddings") {
  const BarAlgebra t = build_bar_algebra(examples::f2(), 2);
  const Element rs[] = {Element{1, 0}, Element{0, 1}};
  CHECK(bar_r_element(t.module, rs) == Element{0, 0, 0, 1, 0, 0, 1});
  CHECK(bar_s_element(t.module, 2, Element{1, 1, 0}) == Element{1, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("an invalid crossed module refuses the checked build") {
  CHECK_THROWS_AS(build_bar_algebra(examples::f3(), 2), PreconditionError);
  const BarAlgebra t = build_bar_algebra_unchecked(examples::f3(), 2);
  CHECK(t.klass == CheckClass::Axiom);
}

}  // TEST_SUITE
