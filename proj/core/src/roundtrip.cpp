#include "xmodbar/roundtrip.hpp"

#include <numeric>
#include <random>

#include "xmodbar/errors.hpp"
#include "xmodbar/sweep.hpp"

namespace xmodbar {

AlgebraAction extract_action(const BarAlgebra& t) {
  if (t.depth() < 1) throw MalformedStructure("extraction needs level 1");
  const BarModule& m = t.module;
  const auto sg = t.S().carrier.generators();
  const auto rg = m.acting().generators();
  BilinearMap::Tensor c(sg.size(), std::vector<Element>(rg.size()));
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      const Element p = t.levels[1].mul(bar_s_element(m, 1, sg[i]), bar_r_element(m, std::span(&rg[j], 1)));
      BarElement b = m.split(1, p);
      if (!b.x.is_zero()) {
        throw MalformedStructure("(s,0)(0,r) has S-coordinate " + to_string(b.x) + " for s = " + to_string(sg[i]) +
                                 ", r = " + to_string(rg[j]));
      }
      c[i][j] = std::move(b.rs[0]);
    }
  }
  return AlgebraAction(t.S(), t.R(), std::move(c));
}

AlgebraHom extract_eta(const BarAlgebra& t) {
  if (t.depth() < 1) throw MalformedStructure("extraction needs level 1");
  const BarModule& m = t.module;
  for (const auto& s : m.space().generators()) {
    if (!(m.face(1, 0, bar_s_element(m, 1, s)) == s)) throw MalformedStructure("d_0(s,0) differs from s");
  }
  if (!m.face(1, 0, m.level(1).zero()).is_zero()) throw MalformedStructure("d_0 does not fix zero");
  std::vector<Element> images;
  for (const auto& r : m.acting().generators()) images.push_back(m.face(1, 0, bar_r_element(m, std::span(&r, 1))));
  return AlgebraHom(t.R(), t.S(), std::move(images));
}

CrossedModule extract_crossed_module(const BarAlgebra& t, std::string name) {
  AlgebraHom eta = extract_eta(t);
  AlgebraAction act = extract_action(t);
  return make_crossed_module(std::move(name), std::move(eta), act.tensor.constants());
}

Check verify_extracted(const BarAlgebra& t, const Policy& policy) {
  Check group = Check::group("extracted crossed module");
  CrossedModule xm;
  try {
    xm = extract_crossed_module(t);
  } catch (const MalformedStructure& e) {
    group.add(Check::fail("extraction", CheckClass::Structural, e.what()));
    return group;
  }
  group.add(Check::pass("extraction", CheckClass::Structural, "(s,0)(0,r) = (0, s.r) on level 1"));
  const BarModule& m = t.module;

  Check& cm1 = group.add(Check::group("CM1 route"));
  {
    const Algebra sr = semidirect_product_unchecked(xm.action);
    std::optional<Witness> w;
    const auto gens = m.level(1).generators();
    for (std::size_t i = 0; i < gens.size() && !w; ++i) {
      for (std::size_t j = 0; j < gens.size() && !w; ++j) {
        if (!(sr.mul.entry(i, j) == t.levels[1].mul.entry(i, j))) w = Witness{{"x", "y"}, {gens[i], gens[j]}};
      }
    }
    cm1.add(exact_check("B_1 = S x| R", CheckClass::Axiom, gens.size() * gens.size(), w, w ? "products differ" : ""));
    const FiniteModule d[] = {m.level(1), m.level(1)};
    cm1.add(sweep_check("d_0: B_1 -> B_0 is multiplicative", CheckClass::Axiom, d, {"(s,r)", "(s',r')"}, policy,
                        [&](const std::vector<Element>& p) {
                          return m.face(1, 0, t.levels[1].mul(p[0], p[1])) ==
                                 t.S().mul(m.face(1, 0, p[0]), m.face(1, 0, p[1]));
                        }));
  }

  Check& cm2 = group.add(Check::group("CM2 route"));
  if (t.depth() < 2) {
    cm2.add(Check::skip("R_2", "needs level 2"));
  } else {
    const Algebra rr = semidirect_product_unchecked(multiplication_action(t.R()));
    const FiniteModule& r = m.acting();
    auto lift = [&](const Element& ab) {  // (a,b) in R x| R -> (0,a,b) in B_2
      const std::size_t n = r.rank();
      const Element a(std::vector<Residue>(ab.coeffs.begin(), ab.coeffs.begin() + static_cast<std::ptrdiff_t>(n)));
      const Element b(std::vector<Residue>(ab.coeffs.begin() + static_cast<std::ptrdiff_t>(n), ab.coeffs.end()));
      const Element rs[] = {a, b};
      return bar_r_element(m, rs);
    };
    std::optional<Witness> w;
    const auto gens = rr.carrier.generators();
    for (std::size_t i = 0; i < gens.size() && !w; ++i) {
      for (std::size_t j = 0; j < gens.size() && !w; ++j) {
        if (!(lift(rr.mul.entry(i, j)) == t.levels[2].mul(lift(gens[i]), lift(gens[j])))) {
          w = Witness{{"(a,b)", "(a',b')"}, {gens[i], gens[j]}};
        }
      }
    }
    cm2.add(exact_check("R_2 = R x| R under (a,b) -> (0,a,b)", CheckClass::Axiom, gens.size() * gens.size(), w,
                        w ? "products differ" : ""));
    const FiniteModule d[] = {rr.carrier, rr.carrier};
    cm2.add(sweep_check("d_0 on R_2 is multiplicative", CheckClass::Axiom, d, {"(a,b)", "(a',b')"}, policy,
                        [&](const std::vector<Element>& p) {
                          const Element x = lift(p[0]), y = lift(p[1]);
                          return m.face(2, 0, t.levels[2].mul(x, y)) ==
                                 t.levels[1].mul(m.face(2, 0, x), m.face(2, 0, y));
                        }));
  }
  group.add(validate_crossed_module(xm, policy, "axioms of the extracted structure"));
  return group;
}

BarAlgebra rebuild(const BarAlgebra& t) {
  return build_bar_algebra_unchecked(extract_crossed_module(t), t.depth());
}

Check compare_structures(const BarAlgebra& expected, const BarAlgebra& actual, std::string name) {
  Check group = Check::group(std::move(name));
  if (expected.depth() != actual.depth()) {
    group.add(Check::fail("depth", CheckClass::Structural, "different truncations"));
    return group;
  }
  for (std::size_t k = 0; k <= expected.depth(); ++k) {
    const Algebra& a = expected.levels[k];
    const Algebra& b = actual.levels[k];
    if (!(a.carrier == b.carrier)) {
      group.add(Check::fail("B_" + std::to_string(k), CheckClass::Structural, "different carriers"));
      continue;
    }
    std::optional<Witness> w;
    std::string detail;
    const auto gens = a.carrier.generators();
    for (std::size_t i = 0; i < gens.size() && !w; ++i) {
      for (std::size_t j = 0; j < gens.size() && !w; ++j) {
        if (!(a.mul.entry(i, j) == b.mul.entry(i, j))) {
          w = Witness{{"g_i", "g_j"}, {gens[i], gens[j]}};
          detail = "expected " + to_string(a.mul.entry(i, j)) + ", got " + to_string(b.mul.entry(i, j));
        }
      }
    }
    Check c = exact_check("B_" + std::to_string(k), CheckClass::Axiom, gens.size() * gens.size(), w, detail);
    c.coverage = "tensor entries " + std::to_string(gens.size() * gens.size());
    group.add(std::move(c));
  }
  return group;
}

StructureVerdict structure_verdict(const BarAlgebra& t) {
  StructureVerdict v;
  const BarModule& m = t.module;
  const Algebra& S = t.S();
  const std::size_t n = t.depth();
  v.base_is_s = !t.source || t.levels[0] == t.source->S();
  for (const auto& a : t.levels) v.levels_are_algebras = v.levels_are_algebras && algebra_axioms_hold(a);

  auto mult_on_gens = [&](std::size_t k, auto op, std::size_t target) {
    const auto gens = m.level(k).generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a; b < gens.size(); ++b) {
        if (!(op(t.levels[k].mul.entry(a, b)) == t.levels[target].mul(op(gens[a]), op(gens[b])))) return false;
      }
    }
    return true;
  };
  for (std::size_t k = 1; k <= n && v.operators_multiplicative; ++k) {
    for (std::size_t i = 0; i <= k && v.operators_multiplicative; ++i) {
      v.operators_multiplicative = mult_on_gens(k, [&](const Element& x) { return m.face(k, i, x); }, k - 1);
    }
  }
  for (std::size_t k = 0; k + 1 <= n && v.operators_multiplicative; ++k) {
    for (std::size_t i = 0; i <= k && v.operators_multiplicative; ++i) {
      v.operators_multiplicative = mult_on_gens(k, [&](const Element& x) { return m.degeneracy(k, i, x); }, k + 1);
    }
  }

  const auto sg = S.carrier.generators();
  const auto rg = m.acting().generators();
  if (n >= 1) {
    // s.r as read from level 1, including its S-coordinate.
    std::vector<std::vector<BarElement>> act(sg.size());
    for (std::size_t i = 0; i < sg.size(); ++i) {
      for (const auto& r : rg) act[i].push_back(m.split(1, t.levels[1].mul(bar_s_element(m, 1, sg[i]), bar_r_element(m, std::span(&r, 1)))));
    }
    for (std::size_t k = 1; k <= n && v.natural_action; ++k) {
      const auto gens = m.level(k).generators();
      for (std::size_t i = 0; i < sg.size() && v.natural_action; ++i) {
        const Element left = bar_s_element(m, k, sg[i]);
        for (const auto& y : gens) {
          const BarElement yb = m.split(k, y);
          BarElement want{S.mul(sg[i], yb.x), {}};
          for (const auto& r : yb.rs) {
            Element acc = m.acting().zero();
            for (std::size_t j = 0; j < rg.size(); ++j) {
              if (r[j] == 0) continue;
              if (!act[i][j].x.is_zero()) v.natural_action = false;
              m.acting().add_scaled_into(acc, r[j], act[i][j].rs[0]);
            }
            want.rs.push_back(std::move(acc));
          }
          if (!(t.levels[k].mul(left, y) == m.join(want))) v.natural_action = false;
          if (!v.natural_action) break;
        }
      }
    }
    for (std::size_t i = 0; i < rg.size() && v.r_products; ++i) {
      for (std::size_t j = 0; j < rg.size(); ++j) {
        const Element rr = t.R().mul.entry(i, j);
        if (!(t.levels[1].mul(bar_r_element(m, std::span(&rg[i], 1)), bar_r_element(m, std::span(&rg[j], 1))) ==
              bar_r_element(m, std::span(&rr, 1)))) {
          v.r_products = false;
          break;
        }
      }
    }
  }
  return v;
}

PerturbResult perturb_and_filter(const CrossedModule& xm, std::size_t depth, const PerturbOptions& options) {
  PerturbResult res;
  const BarAlgebra canonical = build_bar_algebra_unchecked(xm, depth);
  std::mt19937_64 rng(options.seed);
  auto consider = [&](BarAlgebra t) {
    ++res.candidates;
    const StructureVerdict v = structure_verdict(t);
    if (v.all_but_r_products()) ++res.failed_only_r_products;
    if (!v.all()) return;
    ++res.passed;
    for (const auto& s : res.survivors) {
      if (s.levels == t.levels) return;
    }
    res.survivors.push_back(std::move(t));
  };
  consider(canonical);
  for (std::size_t c = 1; c < options.budget; ++c) {
    BarAlgebra t = canonical;
    if (depth == 0) {
      consider(std::move(t));
      continue;
    }
    const std::size_t edits = 1 + rng() % 3;
    for (std::size_t e = 0; e < edits; ++e) {
      const std::size_t k = 1 + rng() % depth;
      const FiniteModule& b = t.levels[k].carrier;
      if (b.rank() == 0) continue;
      const std::size_t i = rng() % b.rank(), j = rng() % b.rank(), l = rng() % b.rank();
      const Residue f = b.order(l);
      const Residue g = std::gcd(f, std::gcd(b.order(i), b.order(j)));
      const Residue value = (f / g) * static_cast<Residue>(rng() % static_cast<std::uint64_t>(g));
      BilinearMap::Tensor tensor = t.levels[k].mul.constants();
      tensor[i][j][l] = value;
      tensor[j][i][l] = value;
      t.levels[k] = Algebra(b, std::move(tensor));
    }
    consider(std::move(t));
  }
  return res;
}

Check roundtrip_check(const CrossedModule& xm, std::size_t depth, const Policy& policy, const PerturbOptions& options) {
  Check group = Check::group("round trip");
  Check input = validate_crossed_module(xm, policy, "input crossed module");
  const bool valid = input.passed();
  group.add(std::move(input));
  if (!valid) {
    group.add(Check::skip("build then extract", "input is not a crossed module"));
    group.add(Check::skip("extract then rebuild", "input is not a crossed module"));
    return group;
  }
  const BarAlgebra built = build_bar_algebra(xm, depth);

  Check& forward = group.add(Check::group("build then extract"));
  const CrossedModule back = extract_crossed_module(built);
  forward.add(back.action.tensor == xm.action.tensor
                  ? Check::pass("action tensor", CheckClass::Theorem, "identical")
                  : Check::fail("action tensor", CheckClass::Theorem, "extracted action differs"));
  forward.add(back.eta.map == xm.eta.map ? Check::pass("eta", CheckClass::Theorem, "identical")
                                         : Check::fail("eta", CheckClass::Theorem, "extracted eta differs"));

  Check& backward = group.add(Check::group("extract then rebuild"));
  {
    Check c = compare_structures(built, rebuild(built), "canonical structure");
    set_class(c, CheckClass::Theorem);
    backward.add(std::move(c));
  }
  if (depth >= 1) {
    Check ext = verify_extracted(built, policy);
    set_class(ext, CheckClass::Theorem);
    backward.add(std::move(ext));
  }

  const PerturbResult pr = perturb_and_filter(xm, depth, options);
  Check& perturbed = backward.add(Check::group("perturbed structures", CheckClass::Theorem));
  perturbed.add(Check::note("filter", std::to_string(pr.candidates) + " candidates (seed " + std::to_string(options.seed) +
                                          "), " + std::to_string(pr.passed) + " passed the structure conditions, " +
                                          std::to_string(pr.survivors.size()) + " distinct; " +
                                          std::to_string(pr.failed_only_r_products) +
                                          " failed only (0,r)(0,r') = (0,rr')"));
  for (std::size_t i = 0; i < pr.survivors.size(); ++i) {
    const BarAlgebra& s = pr.survivors[i];
    Check c = compare_structures(s, rebuild(s), "survivor " + std::to_string(i));
    set_class(c, CheckClass::Theorem);
    perturbed.add(std::move(c));
  }
  return group;
}

}  // namespace xmodbar
