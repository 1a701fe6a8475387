#pragma once

#include "xmodbar/crossed_ideal.hpp"
#include "xmodbar/xmod.hpp"

namespace xmodbar::examples {

/// k = Z/2, S = k[x]/(x^2) on the basis {1, x}, R = (x) on the basis {g},
/// eta(g) = x, multiplication action.
CrossedModule f1();
/// As f1 but x.g = g: an action on R that breaks CM1 and CM2.
CrossedModule f3();
/// k = Z/2, (x) -> k[x]/(x^3) on the bases {x, x^2} and {1, x, x^2}.
CrossedModule f2();
/// (x^2) -> (x^2) inside f2.
SubXMod f2_sub();
/// f2_sub as a crossed module in its own right: r -> s, zero action.
CrossedModule f2_sub_xmod();
/// The inclusion of f2_sub_xmod into f2.
XModMorphism f2_inclusion();
/// R = S = Z/2 with unit, eta = 0, zero action: satisfies CM1, fails CM2.
CrossedModule cm2_failure();
/// f1 with the zero action: fails CM1 (1.eta(g) = x but eta(1.g) = 0).
CrossedModule cm1_failure();

/// A crossed ideal map whose image is not closed under the S2-action:
/// R2 = k^2 with zero product, S2 = k acting by the projection onto the
/// first coordinate, eta2 = 0; R1 = k, S1 = 0 and alpha1(1) = e1 + e2.
/// The image span(e1 + e2) fails CI4 (1.(e1 + e2) = e1).
CrossedIdealMap image_ci4_counterexample();

}  // namespace xmodbar::examples
