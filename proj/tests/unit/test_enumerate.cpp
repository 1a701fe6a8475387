#include <doctest.h>

#include "oracles.hpp"
#include "xmodbar/enumerate.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar/examples.hpp"

using namespace xmodbar;

namespace {

/// Invariant-factor shapes d_1 | d_2 | ... with 1 < d_i | m, by brute force.
std::vector<std::vector<Residue>> shapes_oracle(Residue m, std::size_t rank) {
  std::vector<std::vector<Residue>> out{{}};
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<std::vector<Residue>> next;
    for (const auto& s : out) {
      for (Residue d = 2; d <= m; ++d) {
        if (m % d == 0 && (s.empty() || d % s.back() == 0)) {
          auto t = s;
          t.push_back(d);
          next.push_back(t);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Count of commutative associative torsion-compatible tensors, walking
/// every full tensor (no symmetry shortcut) and checking all elements.
std::size_t algebra_count_oracle(Residue m, std::size_t rank) {
  std::size_t count = 0;
  for (const auto& o : shapes_oracle(m, rank)) {
    const auto values = oracle::all_elements(o);
    const std::size_t slots = rank * rank;
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
      std::vector<std::vector<Element>> t(rank, std::vector<Element>(rank));
      for (std::size_t s = 0; s < slots; ++s) t[s / rank][s % rank] = values[pick[s]];
      if (oracle::torsion_ok(o, o, o, t) && oracle::algebra_axioms(o, t)) ++count;
      std::size_t p = slots;
      bool carried = true;
      while (carried && p-- > 0) {
        if (++pick[p] == values.size()) {
          pick[p] = 0;
        } else {
          carried = false;
        }
      }
      if (carried) break;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("rank 1 over Z/2 has exactly two algebras, rank 0 exactly one") {
  CHECK(enumerate_algebras(2, 1).size() == 2);
  CHECK(enumerate_algebras(2, 0).size() == 1);
}

TEST_CASE("algebra counts match a brute-force oracle") {
  for (Residue m : {2, 3, 4}) {
    for (std::size_t rank : {0, 1, 2}) {
      if (m == 4 && rank == 2) continue;  // 4^(4*2) full tensors per shape: too slow for an oracle walk
      CHECK_MESSAGE(enumerate_algebras(m, rank).size() == algebra_count_oracle(m, rank), "m=", m, " rank=", rank);
    }
  }
}

TEST_CASE("canonical shapes") {
  CHECK(canonical_shapes(4, 2) == shapes_oracle(4, 2));
  CHECK(canonical_shapes(4, 2) == std::vector<std::vector<Residue>>{{2, 2}, {2, 4}, {4, 4}});
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(enumerate_algebras(5, 1), InputError);
  CHECK_THROWS_AS(enumerate_algebras(2, 3), InputError);
  CHECK_THROWS_AS(enumerate_xmods(1, 1), InputError);
}

TEST_CASE("crossed module candidates on the F1 algebras") {
  const CrossedModule f1 = examples::f1();
  const CrossedModule f3 = examples::f3();
  const auto cands = enumerate_xmods(f1.R(), f1.S());
  // Two homs R -> S (g -> 0, g -> x) times four action tensors.
  CHECK(cands.size() == 8);
  bool saw_f1 = false, saw_f3 = false;
  for (const auto& c : cands) {
    const bool same_eta = c.xm.eta.map.images() == f1.eta.map.images();
    if (same_eta && c.xm.action.tensor.constants() == f1.action.tensor.constants()) {
      saw_f1 = true;
      CHECK(c.cls.crossed());
      CHECK(c.cls.cm1);
      CHECK(c.cls.cm2);
    }
    if (same_eta && c.xm.action.tensor.constants() == f3.action.tensor.constants()) {
      saw_f3 = true;
      CHECK_FALSE(c.cls.cm2);
      CHECK_FALSE(c.cls.crossed());
    }
  }
  CHECK(saw_f1);
  CHECK(saw_f3);
}

TEST_CASE("the filtered enumerator keeps exactly the crossed candidates") {
  const auto algebras = enumerate_algebras_up_to(2, 2);
  for (std::size_t r = 0; r < algebras.size(); r += 3) {
    for (std::size_t s = 0; s < algebras.size(); s += 4) {
      std::vector<std::string> expected;
      for (const auto& c : enumerate_xmods(algebras[r], algebras[s])) {
        if (c.cls.crossed()) expected.push_back(c.xm.name);
      }
      std::vector<std::string> got;
      for (const auto& xm : enumerate_crossed_modules(algebras[r], algebras[s])) got.push_back(xm.name);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("morphism enumeration matches an element-level oracle") {
  const CrossedModule f2 = examples::f2();
  const CrossedModule sub = examples::f2_sub_xmod();
  const auto ms = enumerate_morphisms(sub, f2);
  // Oracle: every pair of module maps, checked on every element.
  std::size_t expected = 0;
  const auto r1 = oracle::all_elements(sub.R().carrier.orders());
  const auto s1 = oracle::all_elements(sub.S().carrier.orders());
  for (const auto& a1 : oracle::all_elements(f2.R().carrier.orders())) {
    for (const auto& a2 : oracle::all_elements(f2.S().carrier.orders())) {
      const AlgebraHom h1(sub.R(), f2.R(), {a1});
      const AlgebraHom h2(sub.S(), f2.S(), {a2});
      bool ok = true;
      for (const auto& x : r1) {
        for (const auto& y : r1) ok = ok && h1(sub.R().mul(x, y)) == f2.R().mul(h1(x), h1(y));
        ok = ok && h2(sub.eta(x)) == f2.eta(h1(x));
        for (const auto& s : s1) ok = ok && h1(sub.act(s, x)) == f2.act(h2(s), h1(x));
      }
      for (const auto& x : s1) {
        for (const auto& y : s1) ok = ok && h2(sub.S().mul(x, y)) == f2.S().mul(h2(x), h2(y));
      }
      expected += ok ? 1 : 0;
    }
  }
  CHECK(ms.size() == expected);
  bool has_inclusion = false;
  for (const auto& m : ms) {
    has_inclusion = has_inclusion || (m.alpha1.map.images() == examples::f2_inclusion().alpha1.map.images() &&
                                      m.alpha2.map.images() == examples::f2_inclusion().alpha2.map.images());
  }
  CHECK(has_inclusion);
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = enumerate_xmods(3, 1);
  const auto b = enumerate_xmods(3, 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].xm.name == b[i].xm.name);
}

}  // TEST_SUITE
