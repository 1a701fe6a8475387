#include "xmodbar/bar.hpp"

#include "xmodbar/errors.hpp"
#include "xmodbar/sweep.hpp"

namespace xmodbar {

namespace {

FiniteModule power(const FiniteModule& m, std::size_t k) {
  std::vector<FiniteModule> parts(k, m);
  if (parts.empty()) return FiniteModule(m.modulus(), {});
  return FiniteModule::direct_sum(parts);
}

std::vector<Element> split_power(const FiniteModule& m, std::size_t k, const Element& e) {
  std::vector<Element> out;
  out.reserve(k);
  const std::size_t n = m.rank();
  for (std::size_t p = 0; p < k; ++p) {
    out.emplace_back(std::vector<Residue>(e.coeffs.begin() + static_cast<std::ptrdiff_t>(p * n),
                                          e.coeffs.begin() + static_cast<std::ptrdiff_t>((p + 1) * n)));
  }
  return out;
}

std::string ij(std::size_t i, std::size_t j) { return "i=" + std::to_string(i) + ", j=" + std::to_string(j); }

}  // namespace

// ---------------------------------------------------------------------------
// BarModule

BarModule::BarModule(ModuleAction action, std::size_t depth) : action_(std::move(action)), depth_(depth) {
  for (std::size_t k = 0; k <= depth_; ++k) {
    std::vector<FiniteModule> parts{action_.space};
    for (std::size_t p = 0; p < k; ++p) parts.push_back(action_.acting.carrier);
    levels_.push_back(FiniteModule::direct_sum(parts));
    (void)levels_.back().size();  // throws UnsupportedScale on overflow
  }
}

const FiniteModule& BarModule::level(std::size_t k) const {
  if (k > depth_) throw PreconditionError("level " + std::to_string(k) + " beyond truncation " + std::to_string(depth_));
  return levels_[k];
}

BarElement BarModule::split(std::size_t k, const Element& e) const {
  level(k).require(e, "bar element");
  const std::size_t nx = space().rank(), nr = acting().rank();
  BarElement b;
  b.x = Element(std::vector<Residue>(e.coeffs.begin(), e.coeffs.begin() + static_cast<std::ptrdiff_t>(nx)));
  for (std::size_t p = 0; p < k; ++p) {
    const auto start = e.coeffs.begin() + static_cast<std::ptrdiff_t>(nx + p * nr);
    b.rs.emplace_back(std::vector<Residue>(start, start + static_cast<std::ptrdiff_t>(nr)));
  }
  return b;
}

Element BarModule::join(const Element& x, std::span<const Element> rs) const {
  Element e = x;
  for (const auto& r : rs) e.coeffs.insert(e.coeffs.end(), r.coeffs.begin(), r.coeffs.end());
  return e;
}

Element BarModule::face(std::size_t k, std::size_t i, const Element& e) const {
  if (k == 0 || i > k) throw PreconditionError("face d_" + std::to_string(i) + " on level " + std::to_string(k));
  BarElement b = split(k, e);
  if (i == 0) {
    b.x = action_(b.x, b.rs.front());
    b.rs.erase(b.rs.begin());
  } else if (i < k) {
    b.rs[i - 1] = acting().add(b.rs[i - 1], b.rs[i]);
    b.rs.erase(b.rs.begin() + static_cast<std::ptrdiff_t>(i));
  } else {
    b.rs.pop_back();
  }
  return join(b);
}

Element BarModule::degeneracy(std::size_t k, std::size_t i, const Element& e) const {
  if (i > k || k + 1 > depth_) {
    throw PreconditionError("degeneracy s_" + std::to_string(i) + " on level " + std::to_string(k));
  }
  BarElement b = split(k, e);
  b.rs.insert(b.rs.begin() + static_cast<std::ptrdiff_t>(i), acting().zero());
  return join(b);
}

ModuleHom BarModule::face_hom(std::size_t k, std::size_t i) const {
  std::vector<Element> images;
  for (const auto& g : level(k).generators()) images.push_back(face(k, i, g));
  // Generator images of an affine map miss its constant; subtract it.
  const Element c = face(k, i, level(k).zero());
  for (auto& img : images) img = level(k - 1).sub(img, c);
  return ModuleHom(level(k), level(k - 1), std::move(images));
}

ModuleHom BarModule::degeneracy_hom(std::size_t k, std::size_t i) const {
  std::vector<Element> images;
  for (const auto& g : level(k).generators()) images.push_back(degeneracy(k, i, g));
  return ModuleHom(level(k), level(k + 1), std::move(images));
}

BarModule build_bar_module(const ModuleAction& action, std::size_t depth) { return BarModule(action, depth); }

Element bar_r_element(const BarModule& bar, std::span<const Element> rs) { return bar.join(bar.space().zero(), rs); }

Element bar_s_element(const BarModule& bar, std::size_t k, const Element& s) {
  std::vector<Element> rs(k, bar.acting().zero());
  return bar.join(s, rs);
}

// ---------------------------------------------------------------------------
// Level products

Element bar_product(const CrossedModule& xm, const BarModule& bar, std::size_t k, const Element& a, const Element& b) {
  const BarElement u = bar.split(k, a);
  const BarElement v = bar.split(k, b);
  const Algebra& S = xm.S();
  const Algebra& R = xm.R();
  const FiniteModule& r = R.carrier;
  BarElement out;
  out.x = S.mul(u.x, v.x);
  Element a_before = r.zero();  // a_1 + ... + a_{j-1}
  Element b_upto = r.zero();    // b_1 + ... + b_j
  for (std::size_t j = 0; j < k; ++j) {
    r.add_into(b_upto, v.rs[j]);
    Element c = xm.act(u.x, v.rs[j]);
    r.add_into(c, xm.act(v.x, u.rs[j]));
    r.add_into(c, R.mul(a_before, v.rs[j]));
    r.add_into(c, R.mul(u.rs[j], b_upto));
    out.rs.push_back(std::move(c));
    r.add_into(a_before, u.rs[j]);
  }
  return bar.join(out);
}

Algebra bar_level_algebra(const CrossedModule& xm, const BarModule& bar, std::size_t k) {
  const FiniteModule& level = bar.level(k);
  const auto gens = level.generators();
  BilinearMap::Tensor t(gens.size(), std::vector<Element>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) t[i][j] = bar_product(xm, bar, k, gens[i], gens[j]);
  }
  return Algebra(level, std::move(t));
}

Algebra bar_level_semidirect(const CrossedModule& xm, std::size_t k) {
  if (k == 0) return xm.S();
  const Algebra prev = bar_level_semidirect(xm, k - 1);
  const std::size_t ns = xm.S().carrier.rank(), nr = xm.R().carrier.rank();
  const auto rg = xm.R().carrier.generators();
  BilinearMap::Tensor t(prev.carrier.rank(), std::vector<Element>(nr));
  for (std::size_t u = 0; u < prev.carrier.rank(); ++u) {
    const Element actor = u < ns ? xm.S().carrier.generator(u) : xm.eta.map.images()[(u - ns) % nr];
    for (std::size_t j = 0; j < nr; ++j) t[u][j] = xm.act(actor, rg[j]);
  }
  return semidirect_product_unchecked(AlgebraAction(prev, xm.R(), std::move(t)));
}

BarAlgebra build_bar_algebra_unchecked(const CrossedModule& xm, std::size_t depth) {
  BarAlgebra t;
  t.module = BarModule(translation_action(xm.eta), depth);
  t.levels.push_back(xm.S());
  for (std::size_t k = 1; k <= depth; ++k) t.levels.push_back(bar_level_algebra(xm, t.module, k));
  t.source = xm;
  t.klass = CheckClass::Axiom;
  return t;
}

BarAlgebra build_bar_algebra(const CrossedModule& xm, std::size_t depth) {
  const XModClassification c = classify(xm);
  if (!c.crossed()) throw PreconditionError("bar algebra of " + xm.name + ": input is " + c.label());
  BarAlgebra t = build_bar_algebra_unchecked(xm, depth);
  t.klass = CheckClass::Theorem;
  return t;
}

// ---------------------------------------------------------------------------
// Simplicial identities

Check verify_simplicial_identities(const SimplicialModule& t, const Policy& policy, CheckClass klass) {
  Check group = Check::group("simplicial identities", klass);
  const std::size_t n = t.depth();

  for (std::size_t k = 2; k <= n; ++k) {
    std::string where;
    const FiniteModule d[] = {t.level(k)};
    Check c = sweep_check("d_i d_j = d_{j-1} d_i on level " + std::to_string(k), klass, d, {"x"}, policy,
                          [&](const std::vector<Element>& x) {
                            for (std::size_t j = 1; j <= k; ++j) {
                              for (std::size_t i = 0; i < j; ++i) {
                                if (!(t.face(k - 1, i, t.face(k, j, x[0])) == t.face(k - 1, j - 1, t.face(k, i, x[0])))) {
                                  where = ij(i, j);
                                  return false;
                                }
                              }
                            }
                            return true;
                          });
    if (c.status == Status::Fail) c.detail = where;
    group.add(std::move(c));
  }

  for (std::size_t k = 0; k + 1 <= n; ++k) {
    std::string where;
    const FiniteModule d[] = {t.level(k)};
    Check c = sweep_check("d_i s_j on level " + std::to_string(k), klass, d, {"x"}, policy,
                          [&](const std::vector<Element>& x) {
                            for (std::size_t j = 0; j <= k; ++j) {
                              const Element sj = t.degeneracy(k, j, x[0]);
                              for (std::size_t i = 0; i <= k + 1; ++i) {
                                const Element lhs = t.face(k + 1, i, sj);
                                Element rhs;
                                if (i < j) {
                                  rhs = t.degeneracy(k - 1, j - 1, t.face(k, i, x[0]));
                                } else if (i == j || i == j + 1) {
                                  rhs = x[0];
                                } else {
                                  rhs = t.degeneracy(k - 1, j, t.face(k, i - 1, x[0]));
                                }
                                if (!(lhs == rhs)) {
                                  where = ij(i, j);
                                  return false;
                                }
                              }
                            }
                            return true;
                          });
    if (c.status == Status::Fail) c.detail = where;
    group.add(std::move(c));
  }

  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::string where;
    const FiniteModule d[] = {t.level(k)};
    Check c = sweep_check("s_i s_j = s_{j+1} s_i on level " + std::to_string(k), klass, d, {"x"}, policy,
                          [&](const std::vector<Element>& x) {
                            for (std::size_t j = 0; j <= k; ++j) {
                              for (std::size_t i = 0; i <= j; ++i) {
                                if (!(t.degeneracy(k + 1, i, t.degeneracy(k, j, x[0])) ==
                                      t.degeneracy(k + 1, j + 1, t.degeneracy(k, i, x[0])))) {
                                  where = ij(i, j);
                                  return false;
                                }
                              }
                            }
                            return true;
                          });
    if (c.status == Status::Fail) c.detail = where;
    group.add(std::move(c));
  }
  return group;
}

Check verify_operators_linear(const BarModule& t, const Policy& policy) {
  Check group = Check::group("faces and degeneracies are module maps", CheckClass::Theorem);
  for (std::size_t k = 0; k <= t.depth(); ++k) {
    std::vector<std::pair<std::size_t, ModuleHom>> faces, degens;
    if (k >= 1) {
      for (std::size_t i = 0; i <= k; ++i) faces.emplace_back(i, t.face_hom(k, i));
    }
    if (k + 1 <= t.depth()) {
      for (std::size_t i = 0; i <= k; ++i) degens.emplace_back(i, t.degeneracy_hom(k, i));
    }
    std::string where;
    const FiniteModule d[] = {t.level(k)};
    Check c = sweep_check("level " + std::to_string(k), CheckClass::Theorem, d, {"x"}, policy,
                          [&](const std::vector<Element>& x) {
                            for (const auto& [i, f] : faces) {
                              if (!(t.face(k, i, x[0]) == f(x[0]))) {
                                where = "d_" + std::to_string(i) + " is not linear";
                                return false;
                              }
                            }
                            for (const auto& [i, f] : degens) {
                              if (!(t.degeneracy(k, i, x[0]) == f(x[0]))) {
                                where = "s_" + std::to_string(i) + " is not linear";
                                return false;
                              }
                            }
                            return true;
                          });
    if (c.status == Status::Fail) c.detail = where;
    group.add(std::move(c));
  }
  return group;
}

// ---------------------------------------------------------------------------
// Algebra structure

Check verify_level_algebras(const BarAlgebra& t) {
  Check group = Check::group("level algebras", t.klass);
  for (std::size_t k = 0; k <= t.depth(); ++k) {
    Check c = validate_algebra(t.levels[k], "B_" + std::to_string(k));
    if (t.klass == CheckClass::Theorem) {
      for (auto& child : c.children) {
        if (child.klass == CheckClass::Axiom) child.klass = CheckClass::Theorem;
      }
    }
    group.add(std::move(c));
  }
  return group;
}

Check verify_level_homomorphisms(const BarAlgebra& t, const Policy& policy) {
  Check group = Check::group("faces and degeneracies are multiplicative", t.klass);
  const BarModule& m = t.module;
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    const FiniteModule d[] = {m.level(k), m.level(k)};
    for (std::size_t i = 0; i <= k; ++i) {
      group.add(sweep_check(
          "d_" + std::to_string(i) + ": B_" + std::to_string(k) + " -> B_" + std::to_string(k - 1), t.klass, d,
          {"x", "y"}, policy, [&](const std::vector<Element>& p) {
            return m.face(k, i, t.levels[k].mul(p[0], p[1])) ==
                   t.levels[k - 1].mul(m.face(k, i, p[0]), m.face(k, i, p[1]));
          }));
    }
  }
  for (std::size_t k = 0; k + 1 <= t.depth(); ++k) {
    const FiniteModule d[] = {m.level(k), m.level(k)};
    for (std::size_t i = 0; i <= k; ++i) {
      group.add(sweep_check(
          "s_" + std::to_string(i) + ": B_" + std::to_string(k) + " -> B_" + std::to_string(k + 1), t.klass, d,
          {"x", "y"}, policy, [&](const std::vector<Element>& p) {
            return m.degeneracy(k, i, t.levels[k].mul(p[0], p[1])) ==
                   t.levels[k + 1].mul(m.degeneracy(k, i, p[0]), m.degeneracy(k, i, p[1]));
          }));
    }
  }
  if (t.depth() >= 2) {
    // The R_2 part of d_0 is where a failure of CM2 shows up.
    const FiniteModule r2 = power(m.acting(), 2);
    const FiniteModule d[] = {r2, r2};
    group.add(sweep_check(
        "d_0 on R_2", t.klass, d, {"(a,b)", "(a',b')"}, policy, [&](const std::vector<Element>& p) {
          const Element x = bar_r_element(m, split_power(m.acting(), 2, p[0]));
          const Element y = bar_r_element(m, split_power(m.acting(), 2, p[1]));
          return m.face(2, 0, t.levels[2].mul(x, y)) == t.levels[1].mul(m.face(2, 0, x), m.face(2, 0, y));
        }));
  }
  return group;
}

Check verify_ideal_axiom(const BarAlgebra& t, const Policy& policy) {
  Check group = Check::group("ideal axiom", t.klass);
  const BarModule& m = t.module;
  const Algebra& S = t.S();
  auto act = [&](const Element& s, const Element& r) {
    return m.split(1, t.levels[1].mul(bar_s_element(m, 1, s), bar_r_element(m, std::span(&r, 1)))).rs[0];
  };
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    Check& lvl = group.add(Check::group("level " + std::to_string(k), t.klass));
    {
      const FiniteModule d[] = {S.carrier, S.carrier};
      lvl.add(sweep_check("(s,0)(s',0) = (ss',0)", t.klass, d, {"s", "s'"}, policy,
                          [&](const std::vector<Element>& p) {
                            return t.levels[k].mul(bar_s_element(m, k, p[0]), bar_s_element(m, k, p[1])) ==
                                   bar_s_element(m, k, S.mul(p[0], p[1]));
                          }));
    }
    const FiniteModule d[] = {S.carrier, m.level(k)};
    lvl.add(sweep_check("(s,0)(s',r') = (ss', s.r'_1, ..., s.r'_k)", t.klass, d, {"s", "(s',r')"}, policy,
                        [&](const std::vector<Element>& p) {
                          const BarElement y = m.split(k, p[1]);
                          BarElement want{S.mul(p[0], y.x), {}};
                          for (const auto& r : y.rs) want.rs.push_back(act(p[0], r));
                          return t.levels[k].mul(bar_s_element(m, k, p[0]), p[1]) == m.join(want);
                        }));
    // The literal reading with the whole right factor absorbed is recorded
    // but not required: it already fails for (1,0)(0,r) in any unital S.
    SweepResult lit = sweep(std::span<const FiniteModule>(d), policy, [&](const std::vector<Element>& p) {
      const BarElement y = m.split(k, p[1]);
      return t.levels[k].mul(bar_s_element(m, k, p[0]), p[1]) == bar_s_element(m, k, S.mul(p[0], y.x));
    });
    Check note = Check::note("(s,0)(s',r') = (ss',0) for all r'",
                             lit.holds() ? "holds" : "does not hold; the product keeps the action terms s.r'");
    if (!lit.holds()) note.witness = Witness{{"s", "(s',r')"}, *lit.witness};
    note.coverage = lit.coverage();
    lvl.add(std::move(note));
  }
  return group;
}

Check verify_decomposition(const BarAlgebra& t, std::size_t k, const Policy& policy) {
  if (k < 1 || k > t.depth()) throw PreconditionError("decomposition level out of range");
  Check group = Check::group("decomposition of B_" + std::to_string(k), t.klass);
  const BarModule& m = t.module;
  const Algebra& S = t.S();
  const Algebra& B = t.levels[k];
  const FiniteModule& bk = m.level(k);

  std::vector<Element> s_gens, r_gens;
  for (const auto& g : S.carrier.generators()) s_gens.push_back(bar_s_element(m, k, g));
  for (std::size_t p = 0; p < k; ++p) {
    for (const auto& g : m.acting().generators()) {
      std::vector<Element> rs(k, m.acting().zero());
      rs[p] = g;
      r_gens.push_back(bar_r_element(m, rs));
    }
  }
  const Submodule sk = Submodule::span(bk, s_gens);
  const Submodule rk = Submodule::span(bk, r_gens);

  {
    const FiniteModule d[] = {S.carrier, S.carrier};
    Check c = sweep_check("s -> (s,0) is an algebra embedding of S", t.klass, d, {"s", "s'"}, policy,
                          [&](const std::vector<Element>& p) {
                            return B.mul(bar_s_element(m, k, p[0]), bar_s_element(m, k, p[1])) ==
                                   bar_s_element(m, k, S.mul(p[0], p[1]));
                          });
    c.detail = "|S_k| = " + std::to_string(sk.size()) + " = |S| = " + std::to_string(S.carrier.size());
    if (sk.size() != S.carrier.size()) c.status = Status::Fail;
    group.add(std::move(c));
  }

  {
    // d_1 d_2 ... d_k, applying the last face at each level.
    std::vector<std::uint64_t> members;
    Element x = bk.zero();
    do {
      Element y = x;
      for (std::size_t l = k; l >= 1; --l) y = m.face(l, l, y);
      if (y.is_zero()) members.push_back(bk.index_of(x));
    } while (bk.advance(x));
    const Submodule ker(bk, std::move(members));
    Check c = ker == rk ? Check::pass("R_k is the kernel of d_1 d_2 ... d_k", t.klass)
                        : Check::fail("R_k is the kernel of d_1 d_2 ... d_k", t.klass,
                                      "kernel has " + std::to_string(ker.size()) + " elements, R_k has " +
                                          std::to_string(rk.size()));
    c.coverage = "exhaustive " + std::to_string(bk.size()) + "/" + std::to_string(bk.size());
    group.add(std::move(c));
  }
  Check ideal = is_ideal(B, rk, policy, "R_k is an ideal", t.klass);
  group.add(std::move(ideal));

  {
    std::uint64_t meet = 0;
    for (auto idx : sk.indices()) meet += rk.contains_index(idx) ? 1 : 0;
    const bool sum_ok = sk.size() * rk.size() == bk.size();
    const std::string detail = "|S_k| = " + std::to_string(sk.size()) + ", |R_k| = " + std::to_string(rk.size()) +
                               ", |B_k| = " + std::to_string(bk.size()) + ", |S_k meet R_k| = " + std::to_string(meet);
    group.add(meet == 1 ? Check::pass("S_k meet R_k = 0", t.klass, detail)
                        : Check::fail("S_k meet R_k = 0", t.klass, detail));
    group.add(sum_ok && meet == 1 ? Check::pass("B_k = S_k + R_k", t.klass, detail)
                                  : Check::fail("B_k = S_k + R_k", t.klass, detail));
  }

  {
    Check lit = is_ideal(B, sk, policy, "S_k ideal");
    const Check* hit = lit.first_failure();
    Check note = Check::note("S_k is an ideal of B_k", hit ? "no; S_k is a subalgebra but not an ideal" : "yes");
    if (hit) note.witness = hit->witness;
    group.add(std::move(note));
  }
  return group;
}

Check rk_closed_formulas(const BarAlgebra& t, std::size_t k, const Policy& policy) {
  if (k < 1 || k > t.depth()) throw PreconditionError("closed formula level out of range");
  Check group = Check::group("closed formulas on R_" + std::to_string(k), t.klass);
  const BarModule& m = t.module;
  const FiniteModule& r = m.acting();
  const FiniteModule rk = power(r, k);
  // Both operations are read from level 1 only.
  auto rmul = [&](const Element& a, const Element& b) {
    return m.split(1, t.levels[1].mul(bar_r_element(m, std::span(&a, 1)), bar_r_element(m, std::span(&b, 1)))).rs[0];
  };
  auto act = [&](const Element& s, const Element& a) {
    return m.split(1, t.levels[1].mul(bar_s_element(m, 1, s), bar_r_element(m, std::span(&a, 1)))).rs[0];
  };
  {
    const FiniteModule d[] = {rk, rk};
    group.add(sweep_check("(0,a)(0,b)_j = (a_1+...+a_{j-1}) b_j + a_j (b_1+...+b_j)", t.klass, d, {"a", "b"}, policy,
                          [&](const std::vector<Element>& p) {
                            const auto a = split_power(r, k, p[0]);
                            const auto b = split_power(r, k, p[1]);
                            std::vector<Element> want;
                            Element a_before = r.zero(), b_upto = r.zero();
                            for (std::size_t j = 0; j < k; ++j) {
                              r.add_into(b_upto, b[j]);
                              want.push_back(r.add(rmul(a_before, b[j]), rmul(a[j], b_upto)));
                              r.add_into(a_before, a[j]);
                            }
                            return t.levels[k].mul(bar_r_element(m, a), bar_r_element(m, b)) == bar_r_element(m, want);
                          }));
  }
  {
    const FiniteModule d[] = {rk, t.S().carrier};
    group.add(sweep_check("(0,a)(s,0) = (0, s.a_1, ..., s.a_k)", t.klass, d, {"a", "s"}, policy,
                          [&](const std::vector<Element>& p) {
                            const auto a = split_power(r, k, p[0]);
                            std::vector<Element> want;
                            for (const auto& ai : a) want.push_back(act(p[1], ai));
                            return t.levels[k].mul(bar_r_element(m, a), bar_s_element(m, k, p[1])) ==
                                   bar_r_element(m, want);
                          }));
  }
  return group;
}

AlgebraHom eta_k(const BarAlgebra& t, std::size_t k) {
  if (k > t.depth()) throw PreconditionError("eta_k level out of range");
  const BarModule& m = t.module;
  std::vector<Element> eta_images;
  const Element shift = m.face(1, 0, m.level(1).zero());
  for (const auto& g : m.acting().generators()) {
    eta_images.push_back(m.space().sub(m.face(1, 0, bar_r_element(m, std::span(&g, 1))), shift));
  }
  std::vector<Element> images = m.space().generators();
  for (std::size_t p = 0; p < k; ++p) images.insert(images.end(), eta_images.begin(), eta_images.end());
  return AlgebraHom(t.levels[k], t.S(), std::move(images));
}

Check eta_k_check(const BarAlgebra& t, std::size_t k, const Policy& policy) {
  const AlgebraHom h = eta_k(t, k);
  Check c = validate_hom(h, policy, "eta_" + std::to_string(k) + ": B_" + std::to_string(k) + " -> S");
  if (t.klass == CheckClass::Theorem) set_class(c, CheckClass::Theorem);
  return c;
}

Check bar_regressions(const BarAlgebra& t, const Policy& policy) {
  Check group = Check::group("level regressions", t.klass);
  const BarModule& m = t.module;
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    Check& lvl = group.add(Check::group("level " + std::to_string(k), t.klass));
    const FiniteModule& bk = m.level(k);
    const BarElement z = m.split(k, bk.zero());
    bool zero_ok = z.x.is_zero();
    for (const auto& r : z.rs) zero_ok = zero_ok && r.is_zero();
    for (const auto& g : bk.generators()) zero_ok = zero_ok && t.levels[k].mul(bk.zero(), g).is_zero();
    lvl.add(zero_ok ? Check::pass("zero element is (0, 0, ..., 0)", t.klass)
                    : Check::fail("zero element is (0, 0, ..., 0)", t.klass, "zero is not coordinatewise zero"));
    const FiniteModule d[] = {bk, bk};
    lvl.add(sweep_check("addition is coordinatewise", t.klass, d, {"x", "y"}, policy,
                        [&](const std::vector<Element>& p) {
                          const BarElement a = m.split(k, p[0]), b = m.split(k, p[1]);
                          BarElement want{m.space().add(a.x, b.x), {}};
                          for (std::size_t j = 0; j < k; ++j) want.rs.push_back(m.acting().add(a.rs[j], b.rs[j]));
                          return bk.add(p[0], p[1]) == m.join(want);
                        }));
  }
  const FiniteModule d[] = {m.acting(), m.acting()};
  group.add(sweep_check("R_1 products: (0,r)(0,r') = (0,rr')", t.klass, d, {"r", "r'"}, policy,
                        [&](const std::vector<Element>& p) {
                          const Element rr = t.R().mul(p[0], p[1]);
                          return t.levels[1].mul(bar_r_element(m, std::span(&p[0], 1)), bar_r_element(m, std::span(&p[1], 1))) ==
                                 bar_r_element(m, std::span(&rr, 1));
                        }));
  return group;
}

Check product_cross_check(const BarAlgebra& t) {
  Check group = Check::group("closed form against recursive semidirect products", t.klass);
  if (!t.source) {
    group.add(Check::skip("levels", "no source crossed module"));
    return group;
  }
  for (std::size_t k = 1; k <= t.depth(); ++k) {
    const Algebra rec = bar_level_semidirect(*t.source, k);
    std::optional<Witness> w;
    const auto gens = t.levels[k].carrier.generators();
    for (std::size_t i = 0; i < gens.size() && !w; ++i) {
      for (std::size_t j = 0; j < gens.size() && !w; ++j) {
        if (!(rec.mul.entry(i, j) == t.levels[k].mul.entry(i, j))) w = Witness{{"g_i", "g_j"}, {gens[i], gens[j]}};
      }
    }
    group.add(exact_check("B_" + std::to_string(k), t.klass, gens.size() * gens.size(), w, w ? "tensors differ" : ""));
  }
  return group;
}

Check verify_bar(const BarAlgebra& t, const Policy& policy) {
  Check group = Check::group("bar construction", t.klass);
  group.add(verify_simplicial_identities(t.module, policy));
  group.add(verify_operators_linear(t.module, policy));
  group.add(verify_level_algebras(t));
  group.add(verify_level_homomorphisms(t, policy));
  group.add(verify_ideal_axiom(t, policy));
  Check& dec = group.add(Check::group("decomposition", t.klass));
  for (std::size_t k = 1; k <= t.depth(); ++k) dec.add(verify_decomposition(t, k, policy));
  Check& rk = group.add(Check::group("closed formulas", t.klass));
  for (std::size_t k = 1; k <= t.depth(); ++k) rk.add(rk_closed_formulas(t, k, policy));
  Check& eta = group.add(Check::group("eta_k", t.klass));
  for (std::size_t k = 1; k <= t.depth(); ++k) eta.add(eta_k_check(t, k, policy));
  group.add(bar_regressions(t, policy));
  if (t.source && t.klass == CheckClass::Theorem) group.add(product_cross_check(t));
  return group;
}

}  // namespace xmodbar
