#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xmodbar/module.hpp"
#include "xmodbar/presentation.hpp"
#include "xmodbar/report.hpp"

namespace xmodbar {

/// A k-bilinear map left x right -> target stored as structure constants:
/// entry(i, j) is the image of (generator i, generator j).
class BilinearMap {
 public:
  using Tensor = std::vector<std::vector<Element>>;

  BilinearMap() = default;
  /// Entries are reduced modulo the target orders. Torsion compatibility
  /// is not enforced here; see torsion_violation().
  BilinearMap(FiniteModule left, FiniteModule right, FiniteModule target, Tensor constants);

  static BilinearMap zero(const FiniteModule& left, const FiniteModule& right, const FiniteModule& target);

  const FiniteModule& left() const { return left_; }
  const FiniteModule& right() const { return right_; }
  const FiniteModule& target() const { return target_; }
  const Tensor& constants() const { return c_; }
  const Element& entry(std::size_t i, std::size_t j) const { return c_[i][j]; }

  Element operator()(const Element& x, const Element& y) const;

  /// Lexicographically least (i, j, l) with d_i c[i][j][l] or e_j c[i][j][l]
  /// nonzero modulo f_l.
  std::optional<std::array<std::size_t, 3>> torsion_violation() const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  FiniteModule left_;
  FiniteModule right_;
  FiniteModule target_;
  Tensor c_;
};

/// A commutative associative (not necessarily unital) k-algebra. Holding
/// an Algebra does not imply the axioms hold; run validate_algebra.
struct Algebra {
  FiniteModule carrier;
  BilinearMap mul;

  Algebra() = default;
  Algebra(FiniteModule carrier, BilinearMap::Tensor constants);
  static Algebra zero_algebra(Residue modulus);
  /// The zero multiplication on `carrier`.
  static Algebra trivial(const FiniteModule& carrier);

  Element operator()(const Element& x, const Element& y) const { return mul(x, y); }

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

struct AlgebraHom {
  Algebra domain;
  Algebra codomain;
  ModuleHom map;

  AlgebraHom() = default;
  AlgebraHom(Algebra domain, Algebra codomain, std::vector<Element> images);
  Element operator()(const Element& x) const { return map(x); }
};

/// s . r given by a bilinear tensor actor x acted -> acted.
struct AlgebraAction {
  Algebra actor;
  Algebra acted;
  BilinearMap tensor;

  AlgebraAction() = default;
  AlgebraAction(Algebra actor, Algebra acted, BilinearMap::Tensor constants);
  Element operator()(const Element& s, const Element& r) const { return tensor(s, r); }
};

Check validate_algebra(const Algebra& a, std::string name = "algebra");

/// Two-sided unit if one exists (informational only).
std::optional<Element> find_unit(const Algebra& a);

Check validate_hom(const AlgebraHom& f, const Policy& policy, std::string name = "hom");

/// Exact multiplicativity on generator pairs; first failing pair.
std::optional<std::array<std::size_t, 2>> hom_generator_violation(const AlgebraHom& f);

Submodule image(const ModuleHom& f);
Submodule kernel(const ModuleHom& f);

Check is_ideal(const Algebra& a, const Submodule& ideal, const Policy& policy, std::string name = "ideal",
               CheckClass klass = CheckClass::Axiom);
bool closed_under_product(const Algebra& a, const Submodule& sub);

struct QuotientAlgebra {
  Algebra algebra;
  AlgebraHom projection;
  LatticeQuotient lattice;
  Element lift(const Element& y) const;
};

/// Throws PreconditionError unless `ideal` is an ideal of `a`.
QuotientAlgebra quotient_algebra(const Algebra& a, const Submodule& ideal);

struct Subalgebra {
  Algebra algebra;
  AlgebraHom inclusion;
  SpanPresentation presentation;
};

/// Throws PreconditionError unless `sub` is closed under the product.
Subalgebra subalgebra(const Algebra& a, const Submodule& sub);

/// S x R with (s,r)(s',r') = (ss', s.r' + s'.r + rr'). Throws
/// PreconditionError unless the action satisfies the algebra-action axioms.
Algebra semidirect_product(const AlgebraAction& action);
/// Same construction with no validation (for the criteria that probe
/// invalid actions).
Algebra semidirect_product_unchecked(const AlgebraAction& action);

/// Exact generator-level check of action axioms 4 and 5 (plus torsion);
/// returns a description of the first violation.
std::optional<std::string> action_generator_violation(const AlgebraAction& action);

/// Exact generator-level check of commutativity, associativity and torsion.
bool algebra_axioms_hold(const Algebra& a);

}  // namespace xmodbar
