#pragma once

#include <string>

#include "xmodbar/algebra.hpp"
#include "xmodbar/report.hpp"
#include "xmodbar/xmod.hpp"

namespace xmodbar {

/// (alpha1, alpha2) from R1 -> S1 to R2 -> S2.
struct XModMorphism {
  std::string name;
  CrossedModule source;
  CrossedModule target;
  AlgebraHom alpha1;  // R1 -> R2
  AlgebraHom alpha2;  // S1 -> S2
};

/// Commuting square alpha2 eta1 = eta2 alpha1 and equivariance
/// alpha1(s1.r1) = alpha2(s1).alpha1(r1).
Check validate_morphism(const XModMorphism& m, const Policy& policy, std::string name = "morphism");
/// The same conditions on generators (exact), for enumeration.
bool morphism_holds(const XModMorphism& m);

XModMorphism identity_morphism(const CrossedModule& xm);

/// Candidate crossed ideal R' -> S' given as submodules of an ambient
/// crossed module R -> S.
struct SubXMod {
  CrossedModule ambient;
  Submodule r_sub;
  Submodule s_sub;
};

/// R' -> S' as a crossed module in its own right, with the inclusions
/// r.inclusion = mu and s.inclusion = nu.
struct MaterializedSub {
  CrossedModule sub;
  Subalgebra r;
  Subalgebra s;
};

/// Throws PreconditionError unless R', S' are subalgebras, S' acts on R'
/// and eta(R') lies in S'.
MaterializedSub materialize(const SubXMod& s);

/// Per-clause verdicts CI1 (i)-(iv), CI2, CI3, CI4.
Check validate_crossed_ideal(const SubXMod& s, const Policy& policy, CheckClass klass = CheckClass::Axiom,
                             std::string name = "crossed ideal");

/// A crossed-module morphism with ideal structures over both legs and an
/// h-map h: R2 x S1 -> R1.
struct CrossedIdealMap {
  std::string name;
  XModMorphism morphism;
  AlgebraAction beta1;  // R2 acting on R1, the ideal structure over alpha1
  AlgebraAction beta2;  // S2 acting on S1, the ideal structure over alpha2
  BilinearMap h;        // R2 x S1 -> R1
  /// Toggles the S2-compatibility conditions on h (an interpreted reading).
  bool check_s2_bilinearity = true;
};

Check validate_crossed_ideal_map(const CrossedIdealMap& c, const Policy& policy, std::string name = "crossed ideal map");
/// Every condition of validate_crossed_ideal_map on generator tuples; all of
/// them are multilinear, so this is exact.
bool cim_holds(const CrossedIdealMap& c);

/// image(alpha1) -> image(alpha2) inside the target crossed module.
SubXMod image_sub_xmod(const CrossedIdealMap& c);
/// alpha2(s1).alpha1(r1) := alpha1(s1.r1) does not depend on the preimages.
Check image_action_well_defined(const CrossedIdealMap& c, const Policy& policy);
/// alpha2(s1).r2 lies in image(alpha1), witnessed by alpha1(h(r2, s1)).
Check ci3_via_h(const CrossedIdealMap& c, const Policy& policy);
/// The image of a crossed ideal map is a crossed ideal (every clause is a
/// THEOREM-class check here).
Check image_crossed_ideal_check(const CrossedIdealMap& c, const Policy& policy);

/// The crossed ideal map of an inclusion: multiplication actions of R on R'
/// and S on S', h(r, s') = s'.r. Throws PreconditionError unless `s` is a
/// crossed ideal.
CrossedIdealMap inclusion_cim(const SubXMod& s);

}  // namespace xmodbar
