#pragma once

#include <functional>
#include <string>

#include "xmodbar/algebra.hpp"
#include "xmodbar/report.hpp"

namespace xmodbar {

/// An action x^r of an algebra R on a module X, given as a rule. Only the
/// four module-action axioms are expected of it.
struct ModuleAction {
  Algebra acting;
  FiniteModule space;
  std::function<Element(const Element& x, const Element& r)> rule;

  Element operator()(const Element& x, const Element& r) const { return rule(x, r); }
};

Check validate_module_action(const ModuleAction& a, const Policy& policy, std::string name = "module action");

/// x^r = x + eta(r).
ModuleAction translation_action(const AlgebraHom& eta);
ModuleAction translation_action(const Algebra& acting, const FiniteModule& space, const ModuleHom& eta);

Check validate_algebra_action(const AlgebraAction& a, const Policy& policy, std::string name = "action");

struct CrossedModule {
  std::string name;
  AlgebraHom eta;
  AlgebraAction action;

  const Algebra& R() const { return eta.domain; }
  const Algebra& S() const { return eta.codomain; }
  Element act(const Element& s, const Element& r) const { return action(s, r); }
};

/// Assembles a crossed module from its parts; throws StructuralError if the
/// action does not connect the same two algebras as eta.
CrossedModule make_crossed_module(std::string name, AlgebraHom eta, BilinearMap::Tensor action);

Check validate_crossed_module(const CrossedModule& xm, const Policy& policy, std::string name = "crossed module");

/// Exact generator-level verdicts, used by the enumerators.
struct XModClassification {
  bool algebras_ok = false;
  bool hom_ok = false;
  bool action_ok = false;
  bool cm1 = false;
  bool cm2 = false;
  bool crossed() const { return algebras_ok && hom_ok && action_ok && cm1 && cm2; }
  std::string label() const;
};
XModClassification classify(const CrossedModule& xm);
/// CM2, CM1 and the action axioms on generators, cheapest first. The two
/// algebras are taken as valid; for tight enumeration loops.
bool crossed_on_generators(const AlgebraHom& eta, const AlgebraAction& action);

AlgebraAction multiplication_action(const Algebra& a);
CrossedModule identity_xmod(const Algebra& a);
/// The inclusion of an ideal with the multiplication action. Throws
/// PreconditionError when `ideal` is not an ideal.
CrossedModule inclusion_xmod(const Algebra& s, const Submodule& ideal);

/// Consequences every crossed module must satisfy: image and kernel of eta
/// are ideals, the kernel annihilates R, and S/im(eta) acts on ker(eta).
Check consequence_checks(const CrossedModule& xm, const Policy& policy);

/// (s,r) -> s + eta(r) is multiplicative on S x| R; equivalent to CM1.
Check semidirect_to_base_check(const CrossedModule& xm, const Policy& policy);
/// (a,b) -> (eta(a), b) from R x| R into S x| R is multiplicative;
/// equivalent to CM2.
Check self_semidirect_check(const CrossedModule& xm, const Policy& policy);

}  // namespace xmodbar
