#include "xmodbar/xmod.hpp"

#include "xmodbar/errors.hpp"
#include "xmodbar/sweep.hpp"

namespace xmodbar {

// ---------------------------------------------------------------------------
// Module actions

Check validate_module_action(const ModuleAction& a, const Policy& policy, std::string name) {
  Check group = Check::group(std::move(name));
  const FiniteModule& x = a.space;
  const FiniteModule& r = a.acting.carrier;
  const FiniteModule scalars(x.modulus(), {x.modulus()});
  {
    const FiniteModule d[] = {x, r, r};
    group.add(sweep_check("axiom 1: x^(r1+r2) = (x^r1)^r2", CheckClass::Axiom, d, {"x", "r1", "r2"}, policy,
                          [&](const std::vector<Element>& t) { return a(t[0], r.add(t[1], t[2])) == a(a(t[0], t[1]), t[2]); }));
  }
  {
    const FiniteModule d[] = {x};
    group.add(sweep_check("axiom 2: x^0 = x", CheckClass::Axiom, d, {"x"}, policy,
                          [&](const std::vector<Element>& t) { return a(t[0], r.zero()) == t[0]; }));
  }
  {
    const FiniteModule d[] = {x, x, r, r};
    group.add(sweep_check("axiom 3: (x1+x2)^(r1+r2) = x1^r1 + x2^r2", CheckClass::Axiom, d, {"x1", "x2", "r1", "r2"},
                          policy, [&](const std::vector<Element>& t) {
                            return a(x.add(t[0], t[1]), r.add(t[2], t[3])) == x.add(a(t[0], t[2]), a(t[1], t[3]));
                          }));
  }
  {
    const FiniteModule d[] = {scalars, x, r};
    group.add(sweep_check("axiom 4: k(x^r) = (kx)^(kr)", CheckClass::Axiom, d, {"k", "x", "r"}, policy,
                          [&](const std::vector<Element>& t) {
                            const Residue k = t[0][0];
                            return x.scale(k, a(t[1], t[2])) == a(x.scale(k, t[1]), r.scale(k, t[2]));
                          }));
  }
  return group;
}

ModuleAction translation_action(const Algebra& acting, const FiniteModule& space, const ModuleHom& eta) {
  if (!(eta.domain() == acting.carrier) || !(eta.codomain() == space)) {
    throw StructuralError("translation action: eta does not map the acting algebra into the space");
  }
  ModuleAction a;
  a.acting = acting;
  a.space = space;
  a.rule = [eta, space](const Element& x, const Element& r) { return space.add(x, eta(r)); };
  return a;
}

ModuleAction translation_action(const AlgebraHom& eta) {
  return translation_action(eta.domain, eta.codomain.carrier, eta.map);
}

// ---------------------------------------------------------------------------
// Algebra actions

Check validate_algebra_action(const AlgebraAction& a, const Policy& policy, std::string name) {
  Check group = Check::group(std::move(name));
  const FiniteModule& s = a.actor.carrier;
  const FiniteModule& r = a.acted.carrier;
  if (!(a.tensor.left() == s && a.tensor.right() == r && a.tensor.target() == r)) {
    group.add(Check::fail("shape", CheckClass::Structural, "action tensor does not have shape S x R -> R"));
    return group;
  }
  if (auto v = a.tensor.torsion_violation()) {
    group.add(Check::fail("torsion compatibility", CheckClass::Structural,
                          "entry (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," +
                              std::to_string((*v)[2]) + ") is not killed by the summand orders",
                          Witness{{"s", "r"}, {s.generator((*v)[0]), r.generator((*v)[1])}}));
    return group;
  }
  group.add(Check::pass("axioms 1-3: k-bilinearity", CheckClass::Structural, "bilinear tensor"));
  {
    const FiniteModule d[] = {s, r, r};
    group.add(sweep_check(
        "axiom 4: s.(rr') = (s.r)r' = r(s.r')", CheckClass::Axiom, d, {"s", "r", "r'"}, policy,
        [&](const std::vector<Element>& t) {
          const Element lhs = a(t[0], a.acted.mul(t[1], t[2]));
          return lhs == a.acted.mul(a(t[0], t[1]), t[2]) && lhs == a.acted.mul(t[1], a(t[0], t[2]));
        },
        [&](const std::vector<Element>& t) {
          return "s.(rr') = " + to_string(a(t[0], a.acted.mul(t[1], t[2]))) + ", (s.r)r' = " +
                 to_string(a.acted.mul(a(t[0], t[1]), t[2])) + ", r(s.r') = " +
                 to_string(a.acted.mul(t[1], a(t[0], t[2])));
        }));
  }
  {
    const FiniteModule d[] = {s, s, r};
    group.add(sweep_check(
        "axiom 5: (ss').r = s.(s'.r)", CheckClass::Axiom, d, {"s", "s'", "r"}, policy,
        [&](const std::vector<Element>& t) { return a(a.actor.mul(t[0], t[1]), t[2]) == a(t[0], a(t[1], t[2])); },
        [&](const std::vector<Element>& t) {
          return "(ss').r = " + to_string(a(a.actor.mul(t[0], t[1]), t[2])) + " but s.(s'.r) = " +
                 to_string(a(t[0], a(t[1], t[2])));
        }));
  }
  return group;
}

// ---------------------------------------------------------------------------
// Crossed modules

CrossedModule make_crossed_module(std::string name, AlgebraHom eta, BilinearMap::Tensor action) {
  CrossedModule xm;
  xm.name = std::move(name);
  xm.action = AlgebraAction(eta.codomain, eta.domain, std::move(action));
  xm.eta = std::move(eta);
  return xm;
}

Check validate_crossed_module(const CrossedModule& xm, const Policy& policy, std::string name) {
  Check group = Check::group(std::move(name));
  if (!(xm.action.actor == xm.S()) || !(xm.action.acted == xm.R())) {
    group.add(Check::fail("shape", CheckClass::Structural, "action and eta do not connect the same algebras"));
    return group;
  }
  Check& pre = group.add(Check::group("preconditions"));
  pre.add(validate_algebra(xm.R(), "R"));
  pre.add(validate_algebra(xm.S(), "S"));
  pre.add(validate_hom(xm.eta, policy, "eta"));
  pre.add(validate_algebra_action(xm.action, policy, "action"));
  if (pre.has_failure(CheckClass::Structural)) return group;

  const FiniteModule& s = xm.S().carrier;
  const FiniteModule& r = xm.R().carrier;
  {
    const FiniteModule d[] = {s, r};
    group.add(sweep_check(
        "CM1: eta(s.r) = s eta(r)", CheckClass::Axiom, d, {"s", "r"}, policy,
        [&](const std::vector<Element>& t) { return xm.eta(xm.act(t[0], t[1])) == xm.S().mul(t[0], xm.eta(t[1])); },
        [&](const std::vector<Element>& t) {
          return "eta(s.r) = " + to_string(xm.eta(xm.act(t[0], t[1]))) + " but s eta(r) = " +
                 to_string(xm.S().mul(t[0], xm.eta(t[1])));
        }));
  }
  {
    const FiniteModule d[] = {r, r};
    group.add(sweep_check(
        "CM2: eta(r).r' = rr'", CheckClass::Axiom, d, {"r", "r'"}, policy,
        [&](const std::vector<Element>& t) { return xm.act(xm.eta(t[0]), t[1]) == xm.R().mul(t[0], t[1]); },
        [&](const std::vector<Element>& t) {
          return "eta(r).r' = " + to_string(xm.act(xm.eta(t[0]), t[1])) + " but rr' = " +
                 to_string(xm.R().mul(t[0], t[1]));
        }));
  }
  const bool action_ok = pre.passed();
  const bool crossed = group.passed();
  group.add(Check::note("verdict", crossed ? "crossed module"
                                   : action_ok ? "action but not crossed"
                                               : "not an action (CM1/CM2 evaluated anyway)"));
  return group;
}

std::string XModClassification::label() const {
  if (!algebras_ok) return "invalid-algebra";
  if (!hom_ok) return "not-a-hom";
  if (crossed()) return "crossed";
  // CM1 and CM2 are reported even when the action axioms fail.
  std::string cm = cm1 && cm2 ? "cm-pass" : !cm1 && !cm2 ? "cm1-cm2-fail" : !cm1 ? "cm1-fail" : "cm2-fail";
  return action_ok ? cm : cm + ",not-an-action";
}

XModClassification classify(const CrossedModule& xm) {
  XModClassification c;
  c.algebras_ok = algebra_axioms_hold(xm.R()) && algebra_axioms_hold(xm.S());
  c.hom_ok = !xm.eta.map.order_violation() && !hom_generator_violation(xm.eta);
  c.action_ok = !action_generator_violation(xm.action);
  const auto sg = xm.S().carrier.generators();
  const auto rg = xm.R().carrier.generators();
  c.cm1 = c.cm2 = true;
  for (std::size_t i = 0; i < sg.size() && c.cm1; ++i) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (!(xm.eta(xm.action.tensor.entry(i, j)) == xm.S().mul(sg[i], xm.eta.map.images()[j]))) {
        c.cm1 = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rg.size() && c.cm2; ++i) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (!(xm.act(xm.eta.map.images()[i], rg[j]) == xm.R().mul.entry(i, j))) {
        c.cm2 = false;
        break;
      }
    }
  }
  return c;
}

bool crossed_on_generators(const AlgebraHom& eta, const AlgebraAction& action) {
  const Algebra& R = eta.domain;
  const Algebra& S = eta.codomain;
  const auto rg = R.carrier.generators();
  const auto sg = S.carrier.generators();
  for (std::size_t i = 0; i < rg.size(); ++i) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (!(action(eta.map.images()[i], rg[j]) == R.mul.entry(i, j))) return false;
    }
  }
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (!(eta(action.tensor.entry(i, j)) == S.mul(sg[i], eta.map.images()[j]))) return false;
    }
  }
  return !action_generator_violation(action);
}

AlgebraAction multiplication_action(const Algebra& a) { return AlgebraAction(a, a, a.mul.constants()); }

CrossedModule identity_xmod(const Algebra& a) {
  return make_crossed_module("identity", AlgebraHom(a, a, a.carrier.generators()), a.mul.constants());
}

CrossedModule inclusion_xmod(const Algebra& s, const Submodule& ideal) {
  for (const auto& g : s.carrier.generators()) {
    for (const auto& x : generating_set(ideal)) {
      if (!ideal.contains(s.mul(g, x))) throw PreconditionError("inclusion crossed module of a non-ideal");
    }
  }
  Subalgebra sub = subalgebra(s, ideal);
  const auto sg = s.carrier.generators();
  const auto& basis = sub.presentation.basis();
  BilinearMap::Tensor t(sg.size(), std::vector<Element>(basis.size()));
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) t[i][j] = sub.presentation.coords(s.mul(sg[i], basis[j]));
  }
  return make_crossed_module("inclusion", sub.inclusion, std::move(t));
}

// ---------------------------------------------------------------------------
// Consequences

Check consequence_checks(const CrossedModule& xm, const Policy& policy) {
  Check group = Check::group("consequences", CheckClass::Theorem);
  const Algebra& S = xm.S();
  const Algebra& R = xm.R();
  const Submodule im = image(xm.eta.map);
  const Submodule ker = kernel(xm.eta.map);
  group.add(is_ideal(S, im, policy, "image of eta is an ideal of S", CheckClass::Theorem));
  group.add(is_ideal(R, ker, policy, "kernel of eta is an ideal of R", CheckClass::Theorem));

  const auto ker_elems = ker.elements();
  const auto rg = R.carrier.generators();
  {
    std::optional<Witness> w;
    std::string detail;
    for (const auto& x : ker_elems) {
      for (const auto& r : rg) {
        const Element p = R.mul(x, r);
        if (!p.is_zero()) {
          w = Witness{{"x", "r"}, {x, r}};
          detail = "x in ker(eta) but xr = " + to_string(p);
          break;
        }
      }
      if (w) break;
    }
    group.add(exact_check("kernel annihilates R", CheckClass::Theorem, ker_elems.size() * rg.size(), w, detail));
  }

  Check& quot = group.add(Check::group("quotient action of S mod im(eta) on ker(eta)", CheckClass::Theorem));
  if (!group.passed()) {
    quot.add(Check::skip("induced action", "needs the ideal checks above"));
    return group;
  }
  {
    std::optional<Witness> w;
    for (const auto& t : im.elements()) {
      for (const auto& x : ker_elems) {
        if (!xm.act(t, x).is_zero()) {
          w = Witness{{"t", "x"}, {t, x}};
          break;
        }
      }
      if (w) break;
    }
    quot.add(exact_check("im(eta) acts trivially on ker(eta)", CheckClass::Theorem, im.size() * ker.size(), w,
                         w ? "t.x is nonzero" : ""));
  }
  {
    std::optional<Witness> w;
    for (const auto& s : S.carrier.generators()) {
      for (const auto& x : ker_elems) {
        if (!ker.contains(xm.act(s, x))) {
          w = Witness{{"s", "x"}, {s, x}};
          break;
        }
      }
      if (w) break;
    }
    quot.add(exact_check("ker(eta) is S-stable", CheckClass::Theorem, S.carrier.rank() * ker.size(), w,
                         w ? "s.x leaves the kernel" : ""));
  }
  if (!quot.passed()) return group;

  const QuotientAlgebra q = quotient_algebra(S, im);
  const Subalgebra k = subalgebra(R, ker);
  const auto qg = q.algebra.carrier.generators();
  const auto& kb = k.presentation.basis();
  BilinearMap::Tensor t(qg.size(), std::vector<Element>(kb.size()));
  for (std::size_t i = 0; i < qg.size(); ++i) {
    for (std::size_t j = 0; j < kb.size(); ++j) t[i][j] = k.presentation.coords(xm.act(q.lift(qg[i]), kb[j]));
  }
  Check induced = validate_algebra_action(AlgebraAction(q.algebra, k.algebra, std::move(t)), policy, "induced action");
  set_class(induced, CheckClass::Theorem);
  quot.add(std::move(induced));
  return group;
}

Check semidirect_to_base_check(const CrossedModule& xm, const Policy& policy) {
  const Algebra p = semidirect_product_unchecked(xm.action);
  std::vector<Element> images = xm.S().carrier.generators();
  for (const auto& img : xm.eta.map.images()) images.push_back(img);
  const ModuleHom phi(p.carrier, xm.S().carrier, std::move(images));
  const FiniteModule d[] = {p.carrier, p.carrier};
  return sweep_check(
      "(s,r) -> s + eta(r) is multiplicative", CheckClass::Axiom, d, {"(s,r)", "(s',r')"}, policy,
      [&](const std::vector<Element>& t) { return phi(p.mul(t[0], t[1])) == xm.S().mul(phi(t[0]), phi(t[1])); });
}

Check self_semidirect_check(const CrossedModule& xm, const Policy& policy) {
  const Algebra rr = semidirect_product_unchecked(multiplication_action(xm.R()));
  const Algebra sr = semidirect_product_unchecked(xm.action);
  const std::size_t nr = xm.R().carrier.rank(), ns = xm.S().carrier.rank();
  std::vector<Element> images;
  for (const auto& img : xm.eta.map.images()) {
    Element e = sr.carrier.zero();
    for (std::size_t i = 0; i < ns; ++i) e[i] = img[i];
    images.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < nr; ++j) images.push_back(sr.carrier.generator(ns + j));
  const ModuleHom psi(rr.carrier, sr.carrier, std::move(images));
  const FiniteModule d[] = {rr.carrier, rr.carrier};
  return sweep_check(
      "(a,b) -> (eta(a), b) is multiplicative", CheckClass::Axiom, d, {"(a,b)", "(a',b')"}, policy,
      [&](const std::vector<Element>& t) { return psi(rr.mul(t[0], t[1])) == sr.mul(psi(t[0]), psi(t[1])); });
}

}  // namespace xmodbar
