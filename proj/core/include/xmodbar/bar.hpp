#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xmodbar/algebra.hpp"
#include "xmodbar/report.hpp"
#include "xmodbar/xmod.hpp"

namespace xmodbar {

inline constexpr std::size_t kDefaultBarDepth = 4;

/// A simplicial module truncated at depth(): levels 0..depth with faces
/// d_i: B_k -> B_{k-1} (0 <= i <= k) and degeneracies s_i: B_k -> B_{k+1}
/// (0 <= i <= k, k < depth).
class SimplicialModule {
 public:
  virtual ~SimplicialModule() = default;
  virtual std::size_t depth() const = 0;
  virtual const FiniteModule& level(std::size_t k) const = 0;
  virtual Element face(std::size_t k, std::size_t i, const Element& x) const = 0;
  virtual Element degeneracy(std::size_t k, std::size_t i, const Element& x) const = 0;
};

/// (x, r_1, ..., r_k) split out of a flat element of B_k = X + R^k.
struct BarElement {
  Element x;
  std::vector<Element> rs;
};

/// The bar construction of a module action of R on X:
///   d_0(x, r_1, ..., r_k) = (x^{r_1}, r_2, ..., r_k)
///   d_i adds r_i and r_{i+1},  d_k drops r_k,  s_i inserts 0 after r_i.
class BarModule : public SimplicialModule {
 public:
  BarModule() = default;
  BarModule(ModuleAction action, std::size_t depth);

  std::size_t depth() const override { return depth_; }
  const FiniteModule& level(std::size_t k) const override;
  Element face(std::size_t k, std::size_t i, const Element& x) const override;
  Element degeneracy(std::size_t k, std::size_t i, const Element& x) const override;

  const ModuleAction& action() const { return action_; }
  const FiniteModule& space() const { return action_.space; }
  const FiniteModule& acting() const { return action_.acting.carrier; }

  BarElement split(std::size_t k, const Element& e) const;
  Element join(const Element& x, std::span<const Element> rs) const;
  Element join(const BarElement& b) const { return join(b.x, b.rs); }

  /// The operators as generator-image maps. They agree with face() and
  /// degeneracy() exactly when those are k-linear.
  ModuleHom face_hom(std::size_t k, std::size_t i) const;
  ModuleHom degeneracy_hom(std::size_t k, std::size_t i) const;

 private:
  ModuleAction action_;
  std::size_t depth_ = 0;
  std::vector<FiniteModule> levels_;
};

/// A choice of algebra structure on every level of a bar module.
struct BarAlgebra {
  BarModule module;
  std::vector<Algebra> levels;
  /// Set when the levels were built from a crossed module.
  std::optional<CrossedModule> source;
  /// THEOREM when built from a validated crossed module, AXIOM otherwise.
  CheckClass klass = CheckClass::Axiom;

  std::size_t depth() const { return module.depth(); }
  const Algebra& S() const { return levels.front(); }
  const Algebra& R() const { return module.action().acting; }
};

BarModule build_bar_module(const ModuleAction& action, std::size_t depth);

/// Level-k product in closed form: first coordinate ss', j-th coordinate
///   s.b_j + s'.a_j + (a_1 + ... + a_{j-1}) b_j + a_j (b_1 + ... + b_j).
Element bar_product(const CrossedModule& xm, const BarModule& bar, std::size_t k, const Element& a, const Element& b);

/// Level-k tensor tabulated from bar_product on generator pairs.
Algebra bar_level_algebra(const CrossedModule& xm, const BarModule& bar, std::size_t k);

/// Level-k algebra built independently as B_{k-1} x| R, where
/// (s, a_1..a_{k-1}) acts on R through s + eta(a_1 + ... + a_{k-1}).
Algebra bar_level_semidirect(const CrossedModule& xm, std::size_t k);

/// Throws PreconditionError unless `xm` is a crossed module.
BarAlgebra build_bar_algebra(const CrossedModule& xm, std::size_t depth);
BarAlgebra build_bar_algebra_unchecked(const CrossedModule& xm, std::size_t depth);

Check verify_simplicial_identities(const SimplicialModule& t, const Policy& policy,
                                   CheckClass klass = CheckClass::Theorem);
Check verify_operators_linear(const BarModule& t, const Policy& policy);
Check verify_level_algebras(const BarAlgebra& t);
Check verify_level_homomorphisms(const BarAlgebra& t, const Policy& policy);
Check verify_ideal_axiom(const BarAlgebra& t, const Policy& policy);
Check verify_decomposition(const BarAlgebra& t, std::size_t k, const Policy& policy);
Check rk_closed_formulas(const BarAlgebra& t, std::size_t k, const Policy& policy);

/// (s, a_1..a_k) -> s + eta(a_1 + ... + a_k), eta read off d_0 on level 1.
AlgebraHom eta_k(const BarAlgebra& t, std::size_t k);
Check eta_k_check(const BarAlgebra& t, std::size_t k, const Policy& policy);

/// Zero element, coordinatewise addition and R_1 products.
Check bar_regressions(const BarAlgebra& t, const Policy& policy);
/// Closed-form tensors against the recursive semidirect construction.
Check product_cross_check(const BarAlgebra& t);

/// Every check above, for all levels up to the depth.
Check verify_bar(const BarAlgebra& t, const Policy& policy);

/// Elements of R_k = {(0, r_1, ..., r_k)} and S_k = {(s, 0, ..., 0)}.
Element bar_r_element(const BarModule& bar, std::span<const Element> rs);
Element bar_s_element(const BarModule& bar, std::size_t k, const Element& s);

}  // namespace xmodbar
