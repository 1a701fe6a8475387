#include "xmodbar/bibar.hpp"

#include "xmodbar/errors.hpp"
#include "xmodbar/sweep.hpp"

namespace xmodbar {

namespace {

std::string at(std::size_t n, std::size_t m) { return " at (" + std::to_string(n) + "," + std::to_string(m) + ")"; }

Element flat(std::initializer_list<const Element*> parts) {
  std::vector<Residue> out;
  for (const Element* p : parts) out.insert(out.end(), p->coeffs.begin(), p->coeffs.end());
  return Element(std::move(out));
}

AlgebraHom phi_impl(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target, std::size_t n,
                    bool corrupt) {
  std::vector<Element> images;
  for (const auto& g : source.module.level(n).generators()) {
    BarElement b = source.module.split(n, g);
    std::vector<Element> rs;
    for (std::size_t p = 0; p < b.rs.size(); ++p) {
      rs.push_back(corrupt && p == 0 ? m.target.R().carrier.zero() : m.alpha1(b.rs[p]));
    }
    images.push_back(target.module.join(m.alpha2(b.x), rs));
  }
  return AlgebraHom(source.levels[n], target.levels[n], std::move(images));
}

/// Direct blockwise formulas for the eight operator families, written
/// without the bar modules so they cross-check the row/column construction.
enum class Family { HFace, HDegen, VFace, VDegen };

BarElement bar_face(const CrossedModule& xm, const BarElement& b, std::size_t j) {
  const std::size_t n = b.rs.size();
  BarElement out = b;
  if (j == 0) {
    out.x = xm.S().carrier.add(b.x, xm.eta(b.rs.front()));
    out.rs.erase(out.rs.begin());
  } else if (j < n) {
    out.rs[j - 1] = xm.R().carrier.add(b.rs[j - 1], b.rs[j]);
    out.rs.erase(out.rs.begin() + static_cast<std::ptrdiff_t>(j));
  } else {
    out.rs.pop_back();
  }
  return out;
}

BarElement bar_degen(const CrossedModule& xm, const BarElement& b, std::size_t j) {
  BarElement out = b;
  out.rs.insert(out.rs.begin() + static_cast<std::ptrdiff_t>(j), xm.R().carrier.zero());
  return out;
}

BiBarElement formula(const BiBar& bb, Family f, const BiBarElement& e, std::size_t i) {
  const XModMorphism& mor = bb.morphism();
  BiBarElement out = e;
  switch (f) {
    case Family::HFace:
      out.m = e.m - 1;
      if (i == 0) {
        const Element moved = bb.phi(e.n)(bb.source().module.join(e.inner.front()));
        out.outer = bb.target().module.split(
            e.n, bb.target().module.level(e.n).add(bb.target().module.join(e.outer), moved));
        out.inner.erase(out.inner.begin());
      } else if (i < e.m) {
        BarElement& a = out.inner[i - 1];
        const BarElement& b = e.inner[i];
        a.x = mor.source.S().carrier.add(a.x, b.x);
        for (std::size_t p = 0; p < e.n; ++p) a.rs[p] = mor.source.R().carrier.add(a.rs[p], b.rs[p]);
        out.inner.erase(out.inner.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        out.inner.pop_back();
      }
      break;
    case Family::HDegen: {
      out.m = e.m + 1;
      BarElement zero{mor.source.S().carrier.zero(), std::vector<Element>(e.n, mor.source.R().carrier.zero())};
      out.inner.insert(out.inner.begin() + static_cast<std::ptrdiff_t>(i), zero);
      break;
    }
    case Family::VFace:
      out.n = e.n - 1;
      out.outer = bar_face(mor.target, e.outer, i);
      for (auto& b : out.inner) b = bar_face(mor.source, b, i);
      break;
    case Family::VDegen:
      out.n = e.n + 1;
      out.outer = bar_degen(mor.target, e.outer, i);
      for (auto& b : out.inner) b = bar_degen(mor.source, b, i);
      break;
  }
  return out;
}

Check formula_leaf(const BiBar& bb, Family f, std::size_t n, std::size_t m, const Policy& policy) {
  static const char* names[] = {"d^h_i", "s^h_i", "d^v_j", "s^v_j"};
  const std::size_t count = (f == Family::HFace || f == Family::HDegen) ? m : n;
  std::string where;
  const FiniteModule d[] = {bb.carrier(n, m)};
  Check c = sweep_check(std::string(names[static_cast<int>(f)]) + " matches the blockwise formula" + at(n, m), bb.klass(),
                        d, {"x"}, policy, [&](const std::vector<Element>& x) {
                          const BiBarElement e = bb.split(n, m, x[0]);
                          for (std::size_t i = 0; i <= count; ++i) {
                            Element got;
                            switch (f) {
                              case Family::HFace: got = bb.h_face(n, m, i, x[0]); break;
                              case Family::HDegen: got = bb.h_degeneracy(n, m, i, x[0]); break;
                              case Family::VFace: got = bb.v_face(n, m, i, x[0]); break;
                              case Family::VDegen: got = bb.v_degeneracy(n, m, i, x[0]); break;
                            }
                            if (!(got == bb.join(formula(bb, f, e, i)))) {
                              where = "index " + std::to_string(i);
                              return false;
                            }
                          }
                          return true;
                        });
  if (c.status == Status::Fail) c.detail = where;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Phi

AlgebraHom phi(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target, std::size_t n) {
  return phi_impl(m, source, target, n, false);
}

std::vector<AlgebraHom> phi_maps(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target,
                                 std::size_t depth) {
  std::vector<AlgebraHom> out;
  for (std::size_t n = 0; n <= depth; ++n) out.push_back(phi(m, source, target, n));
  return out;
}

std::vector<AlgebraHom> corrupted_phi_maps(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target,
                                           std::size_t depth) {
  std::vector<AlgebraHom> out;
  for (std::size_t n = 0; n <= depth; ++n) out.push_back(phi_impl(m, source, target, n, true));
  return out;
}

// ---------------------------------------------------------------------------
// BiBar

BiBar::BiBar(XModMorphism morphism, BarAlgebra source, BarAlgebra target, std::vector<AlgebraHom> phis,
             std::size_t n_depth, std::size_t m_depth, CheckClass klass)
    : morphism_(std::move(morphism)),
      source_(std::move(source)),
      target_(std::move(target)),
      phis_(std::move(phis)),
      n_depth_(n_depth),
      m_depth_(m_depth),
      klass_(klass) {
  if (phis_.size() != n_depth_ + 1) throw PreconditionError("one Phi_n per row is required");
  for (std::size_t n = 0; n <= n_depth_; ++n) {
    if (!(phis_[n].map.domain() == source_.module.level(n)) || !(phis_[n].map.codomain() == target_.module.level(n))) {
      throw StructuralError("Phi_" + std::to_string(n) + " does not map B1_n to B2_n");
    }
    rows_.emplace_back(translation_action(source_.levels[n], target_.levels[n].carrier, phis_[n].map), m_depth_);
  }
}

BiBarElement BiBar::split(std::size_t n, std::size_t m, const Element& e) const {
  const BarElement row_elem = row(n).split(m, e);
  BiBarElement b;
  b.n = n;
  b.m = m;
  b.outer = target_.module.split(n, row_elem.x);
  for (const auto& r : row_elem.rs) b.inner.push_back(source_.module.split(n, r));
  return b;
}

Element BiBar::join(const BiBarElement& b) const {
  std::vector<Element> inner;
  for (const auto& e : b.inner) inner.push_back(source_.module.join(e));
  return row(b.n).join(target_.module.join(b.outer), inner);
}

Element BiBar::h_face(std::size_t n, std::size_t m, std::size_t i, const Element& e) const {
  return row(n).face(m, i, e);
}

Element BiBar::h_degeneracy(std::size_t n, std::size_t m, std::size_t i, const Element& e) const {
  return row(n).degeneracy(m, i, e);
}

Element BiBar::v_face(std::size_t n, std::size_t m, std::size_t j, const Element& e) const {
  if (n == 0 || j > n) throw PreconditionError("vertical face d_" + std::to_string(j) + at(n, m));
  const BarElement r = row(n).split(m, e);
  std::vector<Element> inner;
  for (const auto& x : r.rs) inner.push_back(source_.module.face(n, j, x));
  return row(n - 1).join(target_.module.face(n, j, r.x), inner);
}

Element BiBar::v_degeneracy(std::size_t n, std::size_t m, std::size_t j, const Element& e) const {
  if (j > n || n + 1 > n_depth_) throw PreconditionError("vertical degeneracy s_" + std::to_string(j) + at(n, m));
  const BarElement r = row(n).split(m, e);
  std::vector<Element> inner;
  for (const auto& x : r.rs) inner.push_back(source_.module.degeneracy(n, j, x));
  return row(n + 1).join(target_.module.degeneracy(n, j, r.x), inner);
}

Element BiBar::product(std::size_t n, std::size_t m, const Element& a, const Element& b) const {
  const BarElement u = row(n).split(m, a);
  const BarElement v = row(n).split(m, b);
  std::vector<Element> inner;
  for (std::size_t p = 0; p < m; ++p) inner.push_back(source_.levels[n](u.rs[p], v.rs[p]));
  return row(n).join(target_.levels[n](u.x, v.x), inner);
}

namespace {

void check_depths(std::size_t n_depth, std::size_t m_depth) {
  if (n_depth > kMaxBiBarDepth || m_depth > kMaxBiBarDepth) {
    throw UnsupportedScale("bisimplicial truncation beyond (" + std::to_string(kMaxBiBarDepth) + "," +
                           std::to_string(kMaxBiBarDepth) + ")");
  }
}

bool morphism_is_valid(const XModMorphism& m) {
  return classify(m.source).crossed() && classify(m.target).crossed() && morphism_holds(m);
}

}  // namespace

BiBar build_bibar(const XModMorphism& m, std::size_t n_depth, std::size_t m_depth) {
  check_depths(n_depth, m_depth);
  const bool valid = morphism_is_valid(m);
  BarAlgebra source = valid ? build_bar_algebra(m.source, n_depth) : build_bar_algebra_unchecked(m.source, n_depth);
  BarAlgebra target = valid ? build_bar_algebra(m.target, n_depth) : build_bar_algebra_unchecked(m.target, n_depth);
  std::vector<AlgebraHom> phis = phi_maps(m, source, target, n_depth);
  return BiBar(m, std::move(source), std::move(target), std::move(phis), n_depth, m_depth,
               valid ? CheckClass::Theorem : CheckClass::Axiom);
}

BiBar build_bibar(const XModMorphism& m, std::size_t n_depth, std::size_t m_depth, std::vector<AlgebraHom> phis) {
  check_depths(n_depth, m_depth);
  BarAlgebra source = build_bar_algebra_unchecked(m.source, n_depth);
  BarAlgebra target = build_bar_algebra_unchecked(m.target, n_depth);
  return BiBar(m, std::move(source), std::move(target), std::move(phis), n_depth, m_depth, CheckClass::Axiom);
}

// ---------------------------------------------------------------------------
// Verification

Check low_dimension_square_check(const BiBar& b, const Policy& policy) {
  Check group = Check::group("low-dimension squares", b.klass());
  if (b.n_depth() < 1 || b.m_depth() < 1) {
    group.add(Check::skip("tables", "needs truncation at least (1,1)"));
    return group;
  }
  const XModMorphism& mor = b.morphism();
  const FiniteModule& S2 = mor.target.S().carrier;
  const FiniteModule& R2 = mor.target.R().carrier;
  const FiniteModule& S1 = mor.source.S().carrier;
  const FiniteModule& R1 = mor.source.R().carrier;
  const CheckClass k = b.klass();
  auto leaf = [&](std::string name, std::span<const FiniteModule> d, std::vector<std::string> labels, auto pred) {
    group.add(sweep_check(std::move(name), k, d, std::move(labels), policy, pred));
  };
  const Element z2 = R2.zero();
  const Element z1 = R1.zero();
  const Element zs1 = S1.zero();
  {
    const FiniteModule d[] = {S2, R2};
    leaf("d^v_0(s2,r2) = s2 + eta2(r2)", d, {"s2", "r2"}, [&](const std::vector<Element>& t) {
      return b.v_face(1, 0, 0, flat({&t[0], &t[1]})) == S2.add(t[0], mor.target.eta(t[1]));
    });
    leaf("d^v_1(s2,r2) = s2", d, {"s2", "r2"},
         [&](const std::vector<Element>& t) { return b.v_face(1, 0, 1, flat({&t[0], &t[1]})) == t[0]; });
  }
  {
    const FiniteModule d[] = {S2, S1};
    leaf("d^h_0(s2,s1) = s2 + alpha2(s1)", d, {"s2", "s1"}, [&](const std::vector<Element>& t) {
      return b.h_face(0, 1, 0, flat({&t[0], &t[1]})) == S2.add(t[0], mor.alpha2(t[1]));
    });
    leaf("d^h_1(s2,s1) = s2", d, {"s2", "s1"},
         [&](const std::vector<Element>& t) { return b.h_face(0, 1, 1, flat({&t[0], &t[1]})) == t[0]; });
  }
  {
    const FiniteModule d[] = {S2};
    leaf("s^v_0(s2) = (s2,0)", d, {"s2"},
         [&](const std::vector<Element>& t) { return b.v_degeneracy(0, 0, 0, t[0]) == flat({&t[0], &z2}); });
    leaf("s^h_0(s2) = (s2,0)", d, {"s2"},
         [&](const std::vector<Element>& t) { return b.h_degeneracy(0, 0, 0, t[0]) == flat({&t[0], &zs1}); });
  }
  {
    const FiniteModule d[] = {S2, R2, S1, R1};
    const std::vector<std::string> labels{"s2", "r2", "s1", "r1"};
    leaf("d^v_0(s2,r2,s1,r1) = (s2 + eta2(r2), s1 + eta1(r1))", d, labels, [&](const std::vector<Element>& t) {
      const Element a = S2.add(t[0], mor.target.eta(t[1]));
      const Element c = S1.add(t[2], mor.source.eta(t[3]));
      return b.v_face(1, 1, 0, flat({&t[0], &t[1], &t[2], &t[3]})) == flat({&a, &c});
    });
    leaf("d^v_1(s2,r2,s1,r1) = (s2, s1)", d, labels, [&](const std::vector<Element>& t) {
      return b.v_face(1, 1, 1, flat({&t[0], &t[1], &t[2], &t[3]})) == flat({&t[0], &t[2]});
    });
    leaf("d^h_0(s2,r2,s1,r1) = (s2 + alpha2(s1), r2 + alpha1(r1))", d, labels, [&](const std::vector<Element>& t) {
      const Element a = S2.add(t[0], mor.alpha2(t[2]));
      const Element c = R2.add(t[1], mor.alpha1(t[3]));
      return b.h_face(1, 1, 0, flat({&t[0], &t[1], &t[2], &t[3]})) == flat({&a, &c});
    });
    leaf("d^h_1(s2,r2,s1,r1) = (s2, r2)", d, labels, [&](const std::vector<Element>& t) {
      return b.h_face(1, 1, 1, flat({&t[0], &t[1], &t[2], &t[3]})) == flat({&t[0], &t[1]});
    });
  }
  {
    const FiniteModule d[] = {S2, S1};
    leaf("s^v_0(s2,s1) = (s2,0,s1,0)", d, {"s2", "s1"}, [&](const std::vector<Element>& t) {
      return b.v_degeneracy(0, 1, 0, flat({&t[0], &t[1]})) == flat({&t[0], &z2, &t[1], &z1});
    });
  }
  {
    const FiniteModule d[] = {S2, R2};
    leaf("s^h_0(s2,r2) = (s2,r2,0,0)", d, {"s2", "r2"}, [&](const std::vector<Element>& t) {
      return b.h_degeneracy(1, 0, 0, flat({&t[0], &t[1]})) == flat({&t[0], &t[1], &zs1, &z1});
    });
  }
  return group;
}

namespace {

template <class Pred>
Check commutation_leaf(const BiBar& b, std::string name, std::size_t n, std::size_t m, const Policy& policy,
                       Pred pred) {
  std::string where;
  const FiniteModule d[] = {b.carrier(n, m)};
  Check c = sweep_check(std::move(name) + at(n, m), b.klass(), d, {"x"}, policy,
                        [&](const std::vector<Element>& x) { return pred(x[0], where); });
  if (c.status == Status::Fail) c.detail = where;
  return c;
}

std::string ij(std::size_t i, std::size_t j) { return "i=" + std::to_string(i) + ", j=" + std::to_string(j); }

Check commutation(const BiBar& b, const Policy& policy) {
  const std::size_t N = b.n_depth(), M = b.m_depth();
  const CheckClass k = b.klass();
  Check group = Check::group("horizontal-vertical commutation", k);
  Check& dd = group.add(Check::group("d^h d^v", k));
  Check& ds = group.add(Check::group("d^h s^v", k));
  Check& sd = group.add(Check::group("s^h d^v", k));
  Check& ss = group.add(Check::group("s^h s^v", k));
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t m = 0; m <= M; ++m) {
      if (n >= 1 && m >= 1) {
        dd.add(commutation_leaf(b, "d^h_i d^v_j = d^v_j d^h_i", n, m, policy, [&](const Element& x, std::string& w) {
          for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
              if (!(b.h_face(n - 1, m, i, b.v_face(n, m, j, x)) == b.v_face(n, m - 1, j, b.h_face(n, m, i, x)))) {
                w = ij(i, j);
                return false;
              }
            }
          }
          return true;
        }));
      }
      if (m >= 1 && n + 1 <= N) {
        ds.add(commutation_leaf(b, "d^h_i s^v_j = s^v_j d^h_i", n, m, policy, [&](const Element& x, std::string& w) {
          for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
              if (!(b.h_face(n + 1, m, i, b.v_degeneracy(n, m, j, x)) ==
                    b.v_degeneracy(n, m - 1, j, b.h_face(n, m, i, x)))) {
                w = ij(i, j);
                return false;
              }
            }
          }
          return true;
        }));
      }
      if (n >= 1 && m + 1 <= M) {
        sd.add(commutation_leaf(b, "s^h_i d^v_j = d^v_j s^h_i", n, m, policy, [&](const Element& x, std::string& w) {
          for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
              if (!(b.h_degeneracy(n - 1, m, i, b.v_face(n, m, j, x)) ==
                    b.v_face(n, m + 1, j, b.h_degeneracy(n, m, i, x)))) {
                w = ij(i, j);
                return false;
              }
            }
          }
          return true;
        }));
      }
      if (n + 1 <= N && m + 1 <= M) {
        ss.add(commutation_leaf(b, "s^h_i s^v_j = s^v_j s^h_i", n, m, policy, [&](const Element& x, std::string& w) {
          for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
              if (!(b.h_degeneracy(n + 1, m, i, b.v_degeneracy(n, m, j, x)) ==
                    b.v_degeneracy(n, m + 1, j, b.h_degeneracy(n, m, i, x)))) {
                w = ij(i, j);
                return false;
              }
            }
          }
          return true;
        }));
      }
    }
  }
  return group;
}

/// Every operator agrees with the module map given by its generator images.
Check linearity(const BiBar& b, const Policy& policy) {
  Check group = Check::group("operators are module maps", b.klass());
  for (std::size_t n = 0; n <= b.n_depth(); ++n) {
    for (std::size_t m = 0; m <= b.m_depth(); ++m) {
      struct Op {
        std::string name;
        std::function<Element(const Element&)> apply;
        ModuleHom hom;
      };
      std::vector<Op> ops;
      const FiniteModule& dom = b.carrier(n, m);
      auto add = [&](std::string name, const FiniteModule& cod, std::function<Element(const Element&)> f) {
        std::vector<Element> images;
        for (const auto& g : dom.generators()) images.push_back(f(g));
        ops.push_back(Op{std::move(name), f, ModuleHom(dom, cod, std::move(images))});
      };
      for (std::size_t i = 0; m >= 1 && i <= m; ++i) {
        add("d^h_" + std::to_string(i), b.carrier(n, m - 1),
            [&b, n, m, i](const Element& x) { return b.h_face(n, m, i, x); });
      }
      for (std::size_t i = 0; m + 1 <= b.m_depth() && i <= m; ++i) {
        add("s^h_" + std::to_string(i), b.carrier(n, m + 1),
            [&b, n, m, i](const Element& x) { return b.h_degeneracy(n, m, i, x); });
      }
      for (std::size_t j = 0; n >= 1 && j <= n; ++j) {
        add("d^v_" + std::to_string(j), b.carrier(n - 1, m),
            [&b, n, m, j](const Element& x) { return b.v_face(n, m, j, x); });
      }
      for (std::size_t j = 0; n + 1 <= b.n_depth() && j <= n; ++j) {
        add("s^v_" + std::to_string(j), b.carrier(n + 1, m),
            [&b, n, m, j](const Element& x) { return b.v_degeneracy(n, m, j, x); });
      }
      std::string where;
      const FiniteModule d[] = {dom};
      Check c = sweep_check("bidegree" + at(n, m), b.klass(), d, {"x"}, policy, [&](const std::vector<Element>& x) {
        for (const auto& op : ops) {
          if (!(op.apply(x[0]) == op.hom(x[0]))) {
            where = op.name + " is not linear";
            return false;
          }
        }
        return true;
      });
      if (c.status == Status::Fail) c.detail = where;
      group.add(std::move(c));
    }
  }
  return group;
}

/// d^v_j and s^v_j against the blockwise level products. Both sides are
/// bilinear in the pair, so generator pairs decide it.
Check vertical_multiplicativity(const BiBar& b) {
  Check group = Check::group("vertical operators are multiplicative", b.klass());
  for (std::size_t n = 0; n <= b.n_depth(); ++n) {
    for (std::size_t m = 0; m <= b.m_depth(); ++m) {
      const auto gens = b.carrier(n, m).generators();
      std::optional<Witness> w;
      std::string detail;
      auto test = [&](const std::string& name, std::size_t target_n, auto f) {
        for (const auto& x : gens) {
          for (const auto& y : gens) {
            if (w) return;
            if (!(f(b.product(n, m, x, y)) == b.product(target_n, m, f(x), f(y)))) {
              w = Witness{{"x", "y"}, {x, y}};
              detail = name + " is not multiplicative";
            }
          }
        }
      };
      std::size_t maps = 0;
      for (std::size_t j = 0; n >= 1 && j <= n; ++j, ++maps) {
        test("d^v_" + std::to_string(j), n - 1, [&](const Element& x) { return b.v_face(n, m, j, x); });
      }
      for (std::size_t j = 0; n + 1 <= b.n_depth() && j <= n; ++j, ++maps) {
        test("s^v_" + std::to_string(j), n + 1, [&](const Element& x) { return b.v_degeneracy(n, m, j, x); });
      }
      group.add(exact_check("bidegree" + at(n, m), b.klass(), maps * gens.size() * gens.size(), w, detail));
    }
  }
  return group;
}
}  // namespace

Check verify_bibar(const BiBar& b, const Policy& policy) {
  const CheckClass k = b.klass();
  Check root = Check::group("bisimplicial module", k);

  Check& phis = root.add(Check::group("Phi_n are algebra homomorphisms", k));
  for (std::size_t n = 0; n <= b.n_depth(); ++n) {
    Check c = validate_hom(b.phi(n), policy, "Phi_" + std::to_string(n) + ": B1_" + std::to_string(n) + " -> B2_" +
                                                 std::to_string(n));
    set_class(c, k);
    phis.add(std::move(c));
  }

  Check& rows = root.add(Check::group("horizontal identities", k));
  for (std::size_t n = 0; n <= b.n_depth(); ++n) {
    Check c = verify_simplicial_identities(b.row(n), policy, k);
    c.name = "row n=" + std::to_string(n);
    rows.add(std::move(c));
  }
  Check& cols = root.add(Check::group("vertical identities", k));
  for (std::size_t m = 0; m <= b.m_depth(); ++m) {
    Check c = verify_simplicial_identities(BiBarColumn(b, m), policy, k);
    c.name = "column m=" + std::to_string(m);
    cols.add(std::move(c));
  }
  root.add(commutation(b, policy));
  root.add(linearity(b, policy));
  root.add(vertical_multiplicativity(b));

  Check& rowact = root.add(Check::group("rows are bar constructions of the translation through Phi_n", k));
  for (std::size_t n = 0; n <= b.n_depth(); ++n) {
    Check c = validate_module_action(b.row(n).action(), policy, "translation action on row n=" + std::to_string(n));
    set_class(c, k);
    rowact.add(std::move(c));
  }

  Check& formulas = root.add(Check::group("operators match the blockwise formulas", k));
  for (std::size_t n = 0; n <= b.n_depth(); ++n) {
    for (std::size_t m = 0; m <= b.m_depth(); ++m) {
      if (m >= 1) formulas.add(formula_leaf(b, Family::HFace, n, m, policy));
      if (m + 1 <= b.m_depth()) formulas.add(formula_leaf(b, Family::HDegen, n, m, policy));
      if (n >= 1) formulas.add(formula_leaf(b, Family::VFace, n, m, policy));
      if (n + 1 <= b.n_depth()) formulas.add(formula_leaf(b, Family::VDegen, n, m, policy));
    }
  }

  root.add(low_dimension_square_check(b, policy));

  Check& notes = root.add(Check::group("readings", k));
  notes.add(Check::note("vertical d_0", "every inner block is translated by eta1 of its own first coordinate"));
  notes.add(Check::note("vertical d_n", "every block, including the last inner one, keeps its own superscript"));
  notes.add(Check::note("inner action", "the S-coordinate is translated by alpha2(s1)"));
  notes.add(Check::note("scope", "no product is defined on whole bidegrees; only vertical operators are checked "
                                 "against the blockwise level products, and only the forward direction is verified"));
  return root;
}

}  // namespace xmodbar
