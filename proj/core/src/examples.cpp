#include "xmodbar/examples.hpp"

namespace xmodbar::examples {

namespace {

Algebra dual_numbers() {
  return Algebra(FiniteModule(2, {2, 2}), {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
}

Algebra square_zero_line() { return Algebra(FiniteModule(2, {2}), {{{0}}}); }

CrossedModule f1_with(std::string name, Residue x_on_g) {
  AlgebraHom eta(square_zero_line(), dual_numbers(), {{0, 1}});
  return make_crossed_module(std::move(name), std::move(eta), {{{1}}, {{x_on_g}}});
}

Algebra truncated_cubic() {
  // e_i e_j = e_{i+j} for i + j <= 2 on {1, x, x^2}.
  BilinearMap::Tensor t(3, std::vector<Element>(3, Element{0, 0, 0}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; i + j < 3; ++j) t[i][j][i + j] = 1;
  }
  return Algebra(FiniteModule(2, {2, 2, 2}), std::move(t));
}

}  // namespace

CrossedModule f1() { return f1_with("F1", 0); }

CrossedModule f3() { return f1_with("F3", 1); }

CrossedModule f2() {
  // R = (x) on {x, x^2}: x.x = x^2.
  Algebra R(FiniteModule(2, {2, 2}), {{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}});
  AlgebraHom eta(R, truncated_cubic(), {{0, 1, 0}, {0, 0, 1}});
  // 1 acts as the identity, x sends x to x^2, x^2 acts by zero.
  return make_crossed_module("F2", std::move(eta),
                             {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}});
}

SubXMod f2_sub() {
  const CrossedModule amb = f2();
  const Element r_sq{0, 1};
  const Element s_sq{0, 0, 1};
  return SubXMod{amb, Submodule::span(amb.R().carrier, std::span(&r_sq, 1)),
                 Submodule::span(amb.S().carrier, std::span(&s_sq, 1))};
}

CrossedModule f2_sub_xmod() {
  AlgebraHom eta(square_zero_line(), square_zero_line(), {{1}});
  return make_crossed_module("F2-sub", std::move(eta), {{{0}}});
}

XModMorphism f2_inclusion() {
  const CrossedModule sub = f2_sub_xmod();
  const CrossedModule amb = f2();
  return XModMorphism{"F2-inclusion", sub, amb, AlgebraHom(sub.R(), amb.R(), {{0, 1}}),
                      AlgebraHom(sub.S(), amb.S(), {{0, 0, 1}})};
}

CrossedModule cm2_failure() {
  const Algebra unit(FiniteModule(2, {2}), {{{1}}});
  return make_crossed_module("CM2-failure", AlgebraHom(unit, unit, {{0}}), {{{0}}});
}

CrossedModule cm1_failure() {
  AlgebraHom eta(square_zero_line(), dual_numbers(), {{0, 1}});
  return make_crossed_module("CM1-failure", std::move(eta), {{{0}}, {{0}}});
}

CrossedIdealMap image_ci4_counterexample() {
  const Element none{std::vector<Residue>{}};
  const Algebra R2(FiniteModule(2, {2, 2}), {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
  const Algebra S2(FiniteModule(2, {2}), {{{1}}});
  const Algebra R1 = square_zero_line();
  const Algebra S1 = Algebra::zero_algebra(2);
  const CrossedModule x2 = make_crossed_module("projection", AlgebraHom(R2, S2, {{0}, {0}}), {{{1, 0}, {0, 0}}});
  const CrossedModule x1 = make_crossed_module("line", AlgebraHom(R1, S1, {none}), {});

  CrossedIdealMap c;
  c.name = "image-CI4-counterexample";
  c.morphism = XModMorphism{"diagonal", x1, x2, AlgebraHom(R1, R2, {{1, 1}}), AlgebraHom(S1, S2, {})};
  c.beta1 = AlgebraAction(R2, R1, {{{0}}, {{0}}});
  c.beta2 = AlgebraAction(S2, S1, {std::vector<Element>{}});
  c.h = BilinearMap(R2.carrier, S1.carrier, R1.carrier, {std::vector<Element>{}, std::vector<Element>{}});
  return c;
}

}  // namespace xmodbar::examples
