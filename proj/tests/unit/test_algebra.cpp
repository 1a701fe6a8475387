#include <doctest.h>

#include "oracles.hpp"
#include "xmodbar/algebra.hpp"
#include "xmodbar/enumerate.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar/examples.hpp"

using namespace xmodbar;

namespace {

Algebra dual_numbers() { return examples::f1().S(); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("bilinear evaluation matches the structure-constant sum") {
  oracle::Gen g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(5));
    const auto l = g.orders(m, 2), r = g.orders(m, 2), t = g.orders(m, 2);
    const auto tensor = g.tensor(l, r, t);
    const BilinearMap b(FiniteModule(m, l), FiniteModule(m, r), FiniteModule(m, t), tensor);
    CHECK_FALSE(b.torsion_violation());
    const Element x = g.element(l), y = g.element(r);
    CHECK(b(x, y) == oracle::bilinear(t, tensor, x, y));
  }
}

TEST_CASE("dual numbers are a unital commutative algebra") {
  const Algebra a = dual_numbers();
  const Check c = validate_algebra(a);
  CHECK(c.passed());
  REQUIRE(find_unit(a));
  CHECK(*find_unit(a) == Element{1, 0});
}

TEST_CASE("a non-associative product fails associativity with a witness") {
  // e_i e_j = e_1 for every i, j on (Z/2)^2 except e_1 e_1 = e_0.
  const Algebra a(FiniteModule(2, {2, 2}), {{{0, 1}, {0, 1}}, {{0, 1}, {1, 0}}});
  REQUIRE_FALSE(oracle::algebra_axioms({2, 2}, a.mul.constants()));
  const Check c = validate_algebra(a);
  const Check* assoc = c.find_named("associativity");
  REQUIRE(assoc);
  CHECK(assoc->status == Status::Fail);
  CHECK(assoc->witness.has_value());
  CHECK_FALSE(algebra_axioms_hold(a));
}

TEST_CASE("torsion-incompatible constants are structural failures") {
  // Z/2 x Z/2 -> Z/4 with value 1: 2 * 1 != 0 in Z/4.
  const Algebra a(FiniteModule(4, {2, 4}), {{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}});
  const Check c = validate_algebra(a);
  CHECK(c.has_failure(CheckClass::Structural));
}

TEST_CASE("algebra axioms: exact generator check agrees with the element sweep") {
  oracle::Gen g(22);
  int agreed_valid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Residue m = 2 + static_cast<Residue>(g.below(3));
    const auto o = g.orders(m, 2);
    const auto t = g.tensor(o, o, o);
    const Algebra a(FiniteModule(m, o), t);
    const bool expected = oracle::algebra_axioms(o, t);
    CHECK(algebra_axioms_hold(a) == expected);
    CHECK(validate_algebra(a).passed() == expected);
    agreed_valid += expected ? 1 : 0;
  }
  CHECK(agreed_valid > 10);
}

TEST_CASE("hom multiplicativity: sweep and generator check agree") {
  const Algebra s = dual_numbers();
  Policy p;
  const AlgebraHom id(s, s, s.carrier.generators());
  CHECK(validate_hom(id, p).passed());
  CHECK_FALSE(hom_generator_violation(id));
  // x -> 1 is additive but not multiplicative: x^2 = 0 but 1 * 1 = 1.
  const AlgebraHom bad(s, s, {Element{1, 0}, Element{1, 0}});
  CHECK_FALSE(validate_hom(bad, p).passed());
  CHECK(hom_generator_violation(bad));
}

TEST_CASE("ideals and quotients") {
  const Algebra s = examples::f2().S();
  const Element x{0, 1, 0};
  const Submodule ideal = Submodule::span(s.carrier, std::span(&x, 1));
  // span(x) alone is not an ideal: x * x = x^2.
  Policy p;
  CHECK_FALSE(is_ideal(s, ideal, p).passed());
  CHECK_THROWS_AS(quotient_algebra(s, ideal), PreconditionError);

  const Element gens[] = {Element{0, 1, 0}, Element{0, 0, 1}};
  const Submodule max = Submodule::span(s.carrier, gens);
  REQUIRE(is_ideal(s, max, p).passed());
  const QuotientAlgebra q = quotient_algebra(s, max);
  CHECK(q.algebra.carrier.size() == 2);
  CHECK(validate_algebra(q.algebra).passed());
  CHECK(validate_hom(q.projection, p).passed());
  CHECK(kernel(q.projection.map).size() == max.size());
  for (const auto& y : oracle::all_elements(q.algebra.carrier.orders())) CHECK(q.projection(q.lift(y)) == y);
}

TEST_CASE("subalgebras carry a multiplicative inclusion") {
  const Algebra s = examples::f2().S();
  const Element x2{0, 0, 1};
  const Submodule sub = Submodule::span(s.carrier, std::span(&x2, 1));
  REQUIRE(closed_under_product(s, sub));
  const Subalgebra a = subalgebra(s, sub);
  Policy p;
  CHECK(validate_hom(a.inclusion, p).passed());
  CHECK(image(a.inclusion.map).size() == sub.size());
  const Element x{0, 1, 0};
  CHECK_THROWS_AS(subalgebra(s, Submodule::span(s.carrier, std::span(&x, 1))), PreconditionError);
}

TEST_CASE("semidirect product matches (ss', s.r' + s'.r + rr') on every pair") {
  for (const auto& xm : {examples::f1(), examples::f2()}) {
    const Algebra sd = semidirect_product(xm.action);
    const auto& so = xm.S().carrier.orders();
    const auto& ro = xm.R().carrier.orders();
    const std::size_t ns = so.size();
    auto split = [&](const Element& e) {
      return std::pair{Element(std::vector<Residue>(e.coeffs.begin(), e.coeffs.begin() + ns)),
                       Element(std::vector<Residue>(e.coeffs.begin() + ns, e.coeffs.end()))};
    };
    const auto elems = oracle::all_elements(sd.carrier.orders());
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        const auto [s, r] = split(a);
        const auto [s2, r2] = split(b);
        const Element ss = oracle::bilinear(so, xm.S().mul.constants(), s, s2);
        Element rr = oracle::bilinear(ro, xm.action.tensor.constants(), s, r2);
        rr = oracle::add(ro, rr, oracle::bilinear(ro, xm.action.tensor.constants(), s2, r));
        rr = oracle::add(ro, rr, oracle::bilinear(ro, xm.R().mul.constants(), r, r2));
        auto expected = ss.coeffs;
        expected.insert(expected.end(), rr.coeffs.begin(), rr.coeffs.end());
        REQUIRE(sd.mul(a, b) == Element(expected));
      }
    }
    CHECK(validate_algebra(sd).passed());
  }
}

TEST_CASE("semidirect product refuses an invalid action") {
  CHECK_THROWS_AS(semidirect_product(examples::f3().action), PreconditionError);
  CHECK_NOTHROW(semidirect_product_unchecked(examples::f3().action));
  CHECK(action_generator_violation(examples::f3().action));
}

}  // TEST_SUITE
