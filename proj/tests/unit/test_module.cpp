#include <doctest.h>

#include "oracles.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar/module.hpp"
#include "xmodbar/presentation.hpp"

using namespace xmodbar;

TEST_SUITE("module") {

TEST_CASE("summands of order 1 are dropped") {
  const FiniteModule m(6, {1, 2, 1, 3});
  CHECK(m.rank() == 2);
  CHECK(m.orders() == std::vector<Residue>{2, 3});
  CHECK(m.size() == 6);
  CHECK(FiniteModule::kept_summands(std::vector<Residue>{1, 2, 1, 3}) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("index order is lexicographic order") {
  oracle::Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(5));
    const auto orders = g.orders(m, 3);
    const FiniteModule mod(m, orders);
    const auto expected = oracle::all_elements(mod.orders());
    REQUIRE(expected.size() == mod.size());
    Element x = mod.zero();
    std::size_t i = 0;
    do {
      REQUIRE(x == expected[i]);
      CHECK(mod.index_of(x) == i);
      CHECK(mod.element_at(i) == x);
      ++i;
    } while (mod.advance(x));
    CHECK(i == expected.size());
  }
}

TEST_CASE("arithmetic agrees with coordinatewise residues") {
  oracle::Gen g(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(7));
    const FiniteModule mod(m, g.orders(m, 3));
    const auto& o = mod.orders();
    const Element a = g.element(o), b = g.element(o);
    const Residue k = static_cast<Residue>(g.below(50)) - 25;
    CHECK(mod.add(a, b) == oracle::add(o, a, b));
    CHECK(mod.scale(k, a) == oracle::scale(o, k, a));
    CHECK(mod.add(a, mod.neg(a)) == mod.zero());
    CHECK(mod.sub(mod.add(a, b), b) == a);
  }
}

TEST_CASE("size beyond 62 bits is refused") {
  const FiniteModule big(4, std::vector<Residue>(40, 4));
  CHECK_THROWS_AS((void)big.size(), UnsupportedScale);
}

TEST_CASE("elements from the wrong module are structural errors") {
  const FiniteModule m(4, {2, 4});
  CHECK_THROWS_AS(m.require(Element{1, 5}, "x"), StructuralError);
  CHECK_THROWS_AS(m.require(Element{1}, "x"), StructuralError);
  CHECK_NOTHROW(m.require(Element{1, 3}, "x"));
}

TEST_CASE("spans match additive closure") {
  oracle::Gen g(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(5));
    const FiniteModule mod(m, g.orders(m, 3));
    std::vector<Element> gens;
    for (std::uint64_t n = g.below(3); n-- > 0;) gens.push_back(g.element(mod.orders()));
    const auto expected = oracle::span(mod.orders(), gens);
    const Submodule s = Submodule::span(mod, gens);
    REQUIRE(s.size() == expected.size());
    for (const auto& e : expected) CHECK(s.contains(e));
  }
}

TEST_CASE("a non-closed member list is rejected") {
  const FiniteModule m(2, {2, 2});
  CHECK_THROWS_AS(Submodule(m, {0, 1, 2}), StructuralError);
  CHECK_NOTHROW(Submodule(m, {0, 3}));
}

TEST_CASE("module maps: image and kernel by brute force") {
  oracle::Gen g(14);
  for (int trial = 0; trial < 60; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(5));
    const FiniteModule a(m, g.orders(m, 2));
    const FiniteModule b(m, g.orders(m, 2));
    // Images killed by each generator order so the map is well defined.
    std::vector<Element> images;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      Element e = g.element(b.orders());
      for (std::size_t l = 0; l < b.rank(); ++l) {
        const Residue gg = std::gcd(a.order(i), b.order(l));
        e[l] = (e[l] % gg) * (b.order(l) / gg);
      }
      images.push_back(e);
    }
    const ModuleHom f(a, b, images);
    REQUIRE_FALSE(f.order_violation());
    std::set<Element> img, ker;
    for (const auto& x : oracle::all_elements(a.orders())) {
      Element y(std::vector<Residue>(b.rank(), 0));
      for (std::size_t i = 0; i < a.rank(); ++i) y = oracle::add(b.orders(), y, oracle::scale(b.orders(), x[i], images[i]));
      CHECK(f(x) == y);
      img.insert(y);
      if (y.is_zero()) ker.insert(x);
    }
    CHECK(image(f).size() == img.size());
    CHECK(kernel(f).size() == ker.size());
    CHECK(img.size() * ker.size() == a.size());
  }
}

TEST_CASE("order violation is reported at the first bad generator") {
  const ModuleHom f(FiniteModule(4, {2, 4}), FiniteModule(4, {4}), {Element{1}, Element{1}});
  REQUIRE(f.order_violation());
  CHECK(*f.order_violation() == 0);
}

TEST_CASE("span presentations re-present the span with a basis") {
  oracle::Gen g(15);
  for (int trial = 0; trial < 80; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(7));
    const FiniteModule mod(m, g.orders(m, 3));
    std::vector<Element> gens;
    for (std::uint64_t n = 1 + g.below(3); n-- > 0;) gens.push_back(g.element(mod.orders()));
    const SpanPresentation p(mod, gens);
    const auto expected = oracle::span(mod.orders(), gens);
    REQUIRE(p.module().size() == expected.size());
    for (const auto& x : expected) {
      CHECK(p.contains(x));
      CHECK(p.embed(p.coords(x)) == x);
    }
    // embed is additive on coordinates.
    const Element u = g.element(p.module().orders()), v = g.element(p.module().orders());
    CHECK(p.embed(p.module().add(u, v)) == mod.add(p.embed(u), p.embed(v)));
  }
}

TEST_CASE("lattice quotients: projection kills exactly the relations") {
  oracle::Gen g(16);
  for (int trial = 0; trial < 60; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(7));
    const std::size_t n = 1 + g.below(3);
    const std::vector<Residue> full(n, m);
    std::vector<std::vector<Residue>> rels;
    std::vector<Element> rel_elems;
    for (std::uint64_t r = g.below(3); r-- > 0;) {
      Element e = g.element(full);
      rels.push_back(e.coeffs);
      rel_elems.push_back(e);
    }
    const auto q = LatticeQuotient::diagonalize(m, n, rels);
    const auto killed = oracle::span(full, rel_elems);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(m);
    CHECK(q.module().size() * killed.size() == total);
    for (const auto& x : oracle::all_elements(full)) {
      CHECK(q.project(x.coeffs).is_zero() == (killed.count(x) == 1));
    }
    const Element y = g.element(q.module().orders());
    CHECK(q.project(q.lift(y)) == y);
  }
}

}  // TEST_SUITE
