#include "xmodbar/crossed_ideal.hpp"

#include "xmodbar/errors.hpp"
#include "xmodbar/sweep.hpp"

namespace xmodbar {

namespace {

/// First (a, b) from the two lists whose value fails `ok`.
template <class F, class Ok>
std::optional<Witness> first_pair(const std::vector<Element>& as, const std::vector<Element>& bs, const char* la,
                                  const char* lb, F value, Ok ok) {
  for (const auto& a : as) {
    for (const auto& b : bs) {
      if (!ok(value(a, b))) return Witness{{la, lb}, {a, b}};
    }
  }
  return std::nullopt;
}

Check membership(std::string name, CheckClass klass, const std::vector<Element>& as, const std::vector<Element>& bs,
                 const char* la, const char* lb, const std::function<Element(const Element&, const Element&)>& value,
                 const Submodule& target) {
  auto w = first_pair(as, bs, la, lb, value, [&](const Element& x) { return target.contains(x); });
  std::string detail;
  if (w) detail = "value " + to_string(value(w->values[0], w->values[1])) + " leaves the submodule";
  Check c = exact_check(std::move(name), klass, as.size() * bs.size(), w, detail);
  c.coverage = "exhaustive " + std::to_string(as.size() * bs.size()) + " pairs, exact by linearity";
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Morphisms

Check validate_morphism(const XModMorphism& m, const Policy& policy, std::string name) {
  Check group = Check::group(std::move(name));
  if (!(m.alpha1.domain == m.source.R()) || !(m.alpha1.codomain == m.target.R()) ||
      !(m.alpha2.domain == m.source.S()) || !(m.alpha2.codomain == m.target.S())) {
    group.add(Check::fail("shape", CheckClass::Structural, "alpha1/alpha2 do not connect the two crossed modules"));
    return group;
  }
  group.add(validate_hom(m.alpha1, policy, "alpha1"));
  group.add(validate_hom(m.alpha2, policy, "alpha2"));
  if (group.has_failure(CheckClass::Structural)) return group;
  {
    const FiniteModule d[] = {m.source.R().carrier};
    group.add(sweep_check("square: alpha2 eta1 = eta2 alpha1", CheckClass::Axiom, d, {"r1"}, policy,
                          [&](const std::vector<Element>& t) {
                            return m.alpha2(m.source.eta(t[0])) == m.target.eta(m.alpha1(t[0]));
                          }));
  }
  {
    const FiniteModule d[] = {m.source.S().carrier, m.source.R().carrier};
    group.add(sweep_check("equivariance: alpha1(s1.r1) = alpha2(s1).alpha1(r1)", CheckClass::Axiom, d, {"s1", "r1"},
                          policy, [&](const std::vector<Element>& t) {
                            return m.alpha1(m.source.act(t[0], t[1])) == m.target.act(m.alpha2(t[0]), m.alpha1(t[1]));
                          }));
  }
  return group;
}

bool morphism_holds(const XModMorphism& m) {
  if (m.alpha1.map.order_violation() || m.alpha2.map.order_violation()) return false;
  if (hom_generator_violation(m.alpha1) || hom_generator_violation(m.alpha2)) return false;
  for (const auto& r : m.source.R().carrier.generators()) {
    if (!(m.alpha2(m.source.eta(r)) == m.target.eta(m.alpha1(r)))) return false;
    for (const auto& s : m.source.S().carrier.generators()) {
      if (!(m.alpha1(m.source.act(s, r)) == m.target.act(m.alpha2(s), m.alpha1(r)))) return false;
    }
  }
  return true;
}

XModMorphism identity_morphism(const CrossedModule& xm) {
  return XModMorphism{"identity", xm, xm, AlgebraHom(xm.R(), xm.R(), xm.R().carrier.generators()),
                      AlgebraHom(xm.S(), xm.S(), xm.S().carrier.generators())};
}

// ---------------------------------------------------------------------------
// Crossed ideals

MaterializedSub materialize(const SubXMod& s) {
  const CrossedModule& amb = s.ambient;
  Subalgebra r = subalgebra(amb.R(), s.r_sub);
  Subalgebra sa = subalgebra(amb.S(), s.s_sub);
  const auto& rb = r.presentation.basis();
  const auto& sb = sa.presentation.basis();
  std::vector<Element> eta_images;
  for (const auto& b : rb) {
    const Element img = amb.eta(b);
    if (!sa.presentation.contains(img)) throw PreconditionError("eta does not map R' into S'");
    eta_images.push_back(sa.presentation.coords(img));
  }
  BilinearMap::Tensor t(sb.size(), std::vector<Element>(rb.size()));
  for (std::size_t i = 0; i < sb.size(); ++i) {
    for (std::size_t j = 0; j < rb.size(); ++j) {
      const Element v = amb.act(sb[i], rb[j]);
      if (!r.presentation.contains(v)) throw PreconditionError("S' does not act on R'");
      t[i][j] = r.presentation.coords(v);
    }
  }
  CrossedModule sub = make_crossed_module("sub", AlgebraHom(r.algebra, sa.algebra, std::move(eta_images)), std::move(t));
  return MaterializedSub{std::move(sub), std::move(r), std::move(sa)};
}

Check validate_crossed_ideal(const SubXMod& s, const Policy& policy, CheckClass klass, std::string name) {
  Check group = Check::group(std::move(name), klass);
  const CrossedModule& amb = s.ambient;
  const Algebra& R = amb.R();
  const Algebra& S = amb.S();
  if (!(s.r_sub.ambient() == R.carrier) || !(s.s_sub.ambient() == S.carrier)) {
    group.add(Check::fail("containment", CheckClass::Structural, "submodules live in the wrong modules"));
    return group;
  }
  const auto r_elems = s.r_sub.elements();
  const auto s_elems = s.s_sub.elements();
  const auto r_gens = generating_set(s.r_sub);
  const auto s_gens = generating_set(s.s_sub);
  const auto R_gens = R.carrier.generators();
  const auto S_gens = S.carrier.generators();

  Check& ci1 = group.add(Check::group("CI1", klass));
  Check& i = ci1.add(Check::group("(i) subalgebras", klass));
  i.add(membership("R' R' in R'", klass, r_gens, r_gens, "r'", "r''",
                   [&](const Element& a, const Element& b) { return R.mul(a, b); }, s.r_sub));
  i.add(membership("S' S' in S'", klass, s_gens, s_gens, "s'", "s''",
                   [&](const Element& a, const Element& b) { return S.mul(a, b); }, s.s_sub));
  ci1.add(membership("(ii) S' acts on R'", klass, s_gens, r_gens, "s'", "r'",
                     [&](const Element& a, const Element& b) { return amb.act(a, b); }, s.r_sub));
  Check& iii = ci1.add(Check::group("(iii) R' -> S' is a crossed module", klass));
  {
    std::optional<Witness> w;
    for (const auto& r : r_elems) {
      if (!s.s_sub.contains(amb.eta(r))) {
        w = Witness{{"r'"}, {r}};
        break;
      }
    }
    Check c = exact_check("eta(R') in S'", klass, r_elems.size(), w, w ? "eta(r') = " + to_string(amb.eta(w->values[0])) + " is not in S'" : "");
    c.coverage = "exhaustive " + std::to_string(r_elems.size()) + "/" + std::to_string(r_elems.size());
    iii.add(std::move(c));
  }
  if (!ci1.passed()) {
    iii.add(Check::skip("crossed module axioms", "R' -> S' is not a sub-structure"));
    ci1.add(Check::skip("(iv) inclusion square", "R' -> S' is not a sub-structure"));
  } else {
    const MaterializedSub m = materialize(s);
    Check xm = validate_crossed_module(m.sub, policy, "crossed module axioms");
    if (klass != CheckClass::Axiom) set_class(xm, klass);
    iii.add(std::move(xm));
    std::optional<Witness> w;
    for (const auto& g : m.sub.R().carrier.generators()) {
      if (!(m.s.inclusion(m.sub.eta(g)) == amb.eta(m.r.inclusion(g)))) {
        w = Witness{{"r'"}, {g}};
        break;
      }
    }
    for (const auto& a : m.sub.S().carrier.generators()) {
      for (const auto& b : m.sub.R().carrier.generators()) {
        if (!w && !(m.r.inclusion(m.sub.act(a, b)) == amb.act(m.s.inclusion(a), m.r.inclusion(b)))) {
          w = Witness{{"s'", "r'"}, {a, b}};
        }
      }
    }
    ci1.add(exact_check("(iv) inclusion square commutes", klass, m.sub.R().carrier.rank() * (1 + m.sub.S().carrier.rank()), w));
  }

  Check& ci2 = group.add(Check::group("CI2", klass));
  ci2.add(membership("R' R in R'", klass, r_elems, R_gens, "r'", "r",
                     [&](const Element& a, const Element& b) { return R.mul(a, b); }, s.r_sub));
  ci2.add(membership("S' S in S'", klass, s_elems, S_gens, "s'", "s",
                     [&](const Element& a, const Element& b) { return S.mul(a, b); }, s.s_sub));
  group.add(membership("CI3: S'.R in R'", klass, s_elems, R_gens, "s'", "r",
                       [&](const Element& a, const Element& b) { return amb.act(a, b); }, s.r_sub));
  group.add(membership("CI4: S.R' in R'", klass, S_gens, r_elems, "s", "r'",
                       [&](const Element& a, const Element& b) { return amb.act(a, b); }, s.r_sub));
  return group;
}

// ---------------------------------------------------------------------------
// Crossed ideal maps

Check validate_crossed_ideal_map(const CrossedIdealMap& c, const Policy& policy, std::string name) {
  Check group = Check::group(std::move(name));
  const XModMorphism& m = c.morphism;
  const CrossedModule& x1 = m.source;
  const CrossedModule& x2 = m.target;
  group.add(validate_morphism(m, policy));
  if (!(c.h.left() == x2.R().carrier) || !(c.h.right() == x1.S().carrier) || !(c.h.target() == x1.R().carrier)) {
    group.add(Check::fail("h shape", CheckClass::Structural, "h must map R2 x S1 -> R1"));
    return group;
  }
  if (c.h.torsion_violation()) {
    group.add(Check::fail("h torsion compatibility", CheckClass::Structural, "h tensor is not torsion compatible"));
    return group;
  }
  if (group.has_failure(CheckClass::Structural)) return group;

  Check& first = group.add(Check::group("(i) ideal structures"));
  {
    CrossedModule over1{"over alpha1", m.alpha1, c.beta1};
    CrossedModule over2{"over alpha2", m.alpha2, c.beta2};
    first.add(validate_crossed_module(over1, policy, "R2 acting on R1 over alpha1"));
    first.add(validate_crossed_module(over2, policy, "S2 acting on S1 over alpha2"));
    const FiniteModule d[] = {x1.R().carrier};
    first.add(sweep_check("eta2 alpha1 = alpha2 eta1", CheckClass::Axiom, d, {"r1"}, policy,
                          [&](const std::vector<Element>& t) { return x2.eta(m.alpha1(t[0])) == m.alpha2(x1.eta(t[0])); }));
  }
  if (first.has_failure(CheckClass::Structural)) return group;

  const FiniteModule& R1 = x1.R().carrier;
  const FiniteModule& S1 = x1.S().carrier;
  const FiniteModule& R2 = x2.R().carrier;
  const FiniteModule& S2 = x2.S().carrier;
  Check& second = group.add(Check::group("(ii) h-map"));
  {
    const FiniteModule d[] = {R2, S1};
    second.add(sweep_check("(a) alpha1(h(r2,s1)) = alpha2(s1).r2", CheckClass::Axiom, d, {"r2", "s1"}, policy,
                           [&](const std::vector<Element>& t) { return m.alpha1(c.h(t[0], t[1])) == x2.act(m.alpha2(t[1]), t[0]); }));
    second.add(sweep_check("(b) eta1(h(r2,s1)) = eta2(r2).s1", CheckClass::Axiom, d, {"r2", "s1"}, policy,
                           [&](const std::vector<Element>& t) { return x1.eta(c.h(t[0], t[1])) == c.beta2(x2.eta(t[0]), t[1]); }));
  }
  {
    const FiniteModule d[] = {R1, S1};
    second.add(sweep_check("(c) h(alpha1(r1),s1) = s1.r1", CheckClass::Axiom, d, {"r1", "s1"}, policy,
                           [&](const std::vector<Element>& t) { return c.h(m.alpha1(t[0]), t[1]) == x1.act(t[1], t[0]); }));
  }
  {
    const FiniteModule d[] = {R2, R1};
    second.add(sweep_check("(d) h(r2,eta1(r1)) = r2.r1", CheckClass::Axiom, d, {"r2", "r1"}, policy,
                           [&](const std::vector<Element>& t) { return c.h(t[0], x1.eta(t[1])) == c.beta1(t[0], t[1]); }));
  }
  Check& bil = second.add(Check::group("S2-bilinearity (interpreted)"));
  if (!c.check_s2_bilinearity) {
    bil.add(Check::skip("compatibility", "disabled"));
  } else {
    bil.add(Check::note("reading", "k-bilinear by the tensor encoding; S2 acts on R2 by the target action, on S1 "
                                   "through the ideal structure over alpha2, and on values in R1 after applying alpha1"));
    const FiniteModule d[] = {S2, R2, S1};
    bil.add(sweep_check("h(s2.r2, s1) = h(r2, s2.s1)", CheckClass::Axiom, d, {"s2", "r2", "s1"}, policy,
                        [&](const std::vector<Element>& t) {
                          return c.h(x2.act(t[0], t[1]), t[2]) == c.h(t[1], c.beta2(t[0], t[2]));
                        }));
    bil.add(sweep_check("alpha1(h(s2.r2, s1)) = s2.alpha1(h(r2, s1))", CheckClass::Axiom, d, {"s2", "r2", "s1"}, policy,
                        [&](const std::vector<Element>& t) {
                          return m.alpha1(c.h(x2.act(t[0], t[1]), t[2])) == x2.act(t[0], m.alpha1(c.h(t[1], t[2])));
                        }));
  }
  return group;
}

bool cim_holds(const CrossedIdealMap& c) {
  const XModMorphism& m = c.morphism;
  const CrossedModule& x1 = m.source;
  const CrossedModule& x2 = m.target;
  if (!classify(x1).crossed() || !classify(x2).crossed() || !morphism_holds(m)) return false;
  if (!(c.h.left() == x2.R().carrier) || !(c.h.right() == x1.S().carrier) || !(c.h.target() == x1.R().carrier)) {
    return false;
  }
  if (c.h.torsion_violation()) return false;
  if (!classify(CrossedModule{"", m.alpha1, c.beta1}).crossed()) return false;
  if (!classify(CrossedModule{"", m.alpha2, c.beta2}).crossed()) return false;
  const auto R1 = x1.R().carrier.generators();
  const auto S1 = x1.S().carrier.generators();
  const auto R2 = x2.R().carrier.generators();
  const auto S2 = x2.S().carrier.generators();
  for (const auto& r1 : R1) {
    if (!(x2.eta(m.alpha1(r1)) == m.alpha2(x1.eta(r1)))) return false;
    for (const auto& s1 : S1) {
      if (!(c.h(m.alpha1(r1), s1) == x1.act(s1, r1))) return false;
    }
    for (const auto& r2 : R2) {
      if (!(c.h(r2, x1.eta(r1)) == c.beta1(r2, r1))) return false;
    }
  }
  for (const auto& r2 : R2) {
    for (const auto& s1 : S1) {
      if (!(m.alpha1(c.h(r2, s1)) == x2.act(m.alpha2(s1), r2))) return false;
      if (!(x1.eta(c.h(r2, s1)) == c.beta2(x2.eta(r2), s1))) return false;
      if (!c.check_s2_bilinearity) continue;
      for (const auto& s2 : S2) {
        if (!(c.h(x2.act(s2, r2), s1) == c.h(r2, c.beta2(s2, s1)))) return false;
        if (!(m.alpha1(c.h(x2.act(s2, r2), s1)) == x2.act(s2, m.alpha1(c.h(r2, s1))))) return false;
      }
    }
  }
  return true;
}

SubXMod image_sub_xmod(const CrossedIdealMap& c) {
  return SubXMod{c.morphism.target, image(c.morphism.alpha1.map), image(c.morphism.alpha2.map)};
}

Check image_action_well_defined(const CrossedIdealMap& c, const Policy&) {
  const XModMorphism& m = c.morphism;
  const Submodule k1 = kernel(m.alpha1.map);
  const Submodule k2 = kernel(m.alpha2.map);
  std::optional<Witness> w;
  for (const auto& s : k2.elements()) {
    for (const auto& r : m.source.R().carrier.generators()) {
      if (!w && !m.alpha1(m.source.act(s, r)).is_zero()) w = Witness{{"s1", "r1"}, {s, r}};
    }
  }
  for (const auto& s : m.source.S().carrier.generators()) {
    for (const auto& r : k1.elements()) {
      if (!w && !m.alpha1(m.source.act(s, r)).is_zero()) w = Witness{{"s1", "r1"}, {s, r}};
    }
  }
  Check out = exact_check("induced action on the image is well defined", CheckClass::Theorem,
                          k2.size() * m.source.R().carrier.rank() + k1.size() * m.source.S().carrier.rank(), w,
                          w ? "alpha1(s1.r1) is nonzero although s1 or r1 maps to zero" : "");
  return out;
}

Check ci3_via_h(const CrossedIdealMap& c, const Policy& policy) {
  const XModMorphism& m = c.morphism;
  const Submodule img = image(m.alpha1.map);
  const FiniteModule d[] = {m.target.R().carrier, m.source.S().carrier};
  return sweep_check("CI3 through h: alpha2(s1).r2 = alpha1(h(r2,s1)) in image(alpha1)", CheckClass::Theorem, d,
                     {"r2", "s1"}, policy, [&](const std::vector<Element>& t) {
                       const Element v = m.target.act(m.alpha2(t[1]), t[0]);
                       return img.contains(v) && v == m.alpha1(c.h(t[0], t[1]));
                     });
}

Check image_crossed_ideal_check(const CrossedIdealMap& c, const Policy& policy) {
  Check group = Check::group("image is a crossed ideal", CheckClass::Theorem);
  group.add(image_action_well_defined(c, policy));
  group.add(validate_crossed_ideal(image_sub_xmod(c), policy, CheckClass::Theorem, "image(alpha1) -> image(alpha2)"));
  group.add(ci3_via_h(c, policy));
  return group;
}

CrossedIdealMap inclusion_cim(const SubXMod& s) {
  if (!validate_crossed_ideal(s, Policy{}).passed()) throw PreconditionError("inclusion map of something that is not a crossed ideal");
  MaterializedSub m = materialize(s);
  const CrossedModule& amb = s.ambient;
  const auto& rb = m.r.presentation.basis();
  const auto& sb = m.s.presentation.basis();
  const auto R_gens = amb.R().carrier.generators();
  const auto S_gens = amb.S().carrier.generators();

  BilinearMap::Tensor b1(R_gens.size(), std::vector<Element>(rb.size()));
  BilinearMap::Tensor h(R_gens.size(), std::vector<Element>(sb.size()));
  for (std::size_t i = 0; i < R_gens.size(); ++i) {
    for (std::size_t j = 0; j < rb.size(); ++j) b1[i][j] = m.r.presentation.coords(amb.R().mul(R_gens[i], rb[j]));
    for (std::size_t j = 0; j < sb.size(); ++j) h[i][j] = m.r.presentation.coords(amb.act(sb[j], R_gens[i]));
  }
  BilinearMap::Tensor b2(S_gens.size(), std::vector<Element>(sb.size()));
  for (std::size_t i = 0; i < S_gens.size(); ++i) {
    for (std::size_t j = 0; j < sb.size(); ++j) b2[i][j] = m.s.presentation.coords(amb.S().mul(S_gens[i], sb[j]));
  }

  CrossedIdealMap c;
  c.name = "inclusion";
  c.morphism = XModMorphism{"inclusion", m.sub, amb, m.r.inclusion, m.s.inclusion};
  c.beta1 = AlgebraAction(amb.R(), m.sub.R(), std::move(b1));
  c.beta2 = AlgebraAction(amb.S(), m.sub.S(), std::move(b2));
  c.h = BilinearMap(amb.R().carrier, m.sub.S().carrier, m.sub.R().carrier, std::move(h));
  return c;
}

}  // namespace xmodbar
