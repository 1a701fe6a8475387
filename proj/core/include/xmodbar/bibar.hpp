#pragma once

#include <vector>

#include "xmodbar/bar.hpp"
#include "xmodbar/crossed_ideal.hpp"
#include "xmodbar/report.hpp"

namespace xmodbar {

inline constexpr std::size_t kDefaultBiBarDepth = 2;
inline constexpr std::size_t kMaxBiBarDepth = 8;

/// Phi_n(s1, r_1..r_n) = (alpha2(s1), alpha1(r_1), ..., alpha1(r_n)) between
/// level-n bar algebras.
AlgebraHom phi(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target, std::size_t n);
std::vector<AlgebraHom> phi_maps(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target,
                                 std::size_t depth);
/// Negative control: Phi_n with the first R-coordinate sent to zero (n >= 1).
std::vector<AlgebraHom> corrupted_phi_maps(const XModMorphism& m, const BarAlgebra& source, const BarAlgebra& target,
                                           std::size_t depth);

/// Bar2_{n,m} = B2_n x (B1_n)^m split into its blocks.
struct BiBarElement {
  std::size_t n = 0;
  std::size_t m = 0;
  BarElement outer;
  std::vector<BarElement> inner;
};

/// Truncated bisimplicial module (S2//R2)//(S1//R1). Row n is the bar
/// construction of B1_n acting on B2_n by translation through Phi_n;
/// vertical operators apply the bar operator of level n to every block.
class BiBar {
 public:
  BiBar(XModMorphism morphism, BarAlgebra source, BarAlgebra target, std::vector<AlgebraHom> phis, std::size_t n_depth,
        std::size_t m_depth, CheckClass klass);

  std::size_t n_depth() const { return n_depth_; }
  std::size_t m_depth() const { return m_depth_; }
  const XModMorphism& morphism() const { return morphism_; }
  const BarAlgebra& source() const { return source_; }
  const BarAlgebra& target() const { return target_; }
  const AlgebraHom& phi(std::size_t n) const { return phis_.at(n); }
  const BarModule& row(std::size_t n) const { return rows_.at(n); }
  CheckClass klass() const { return klass_; }

  const FiniteModule& carrier(std::size_t n, std::size_t m) const { return row(n).level(m); }
  BiBarElement split(std::size_t n, std::size_t m, const Element& e) const;
  Element join(const BiBarElement& b) const;

  Element h_face(std::size_t n, std::size_t m, std::size_t i, const Element& e) const;
  Element h_degeneracy(std::size_t n, std::size_t m, std::size_t i, const Element& e) const;
  Element v_face(std::size_t n, std::size_t m, std::size_t j, const Element& e) const;
  Element v_degeneracy(std::size_t n, std::size_t m, std::size_t j, const Element& e) const;

  /// Blockwise product: B2_n in the outer block, B1_n in every inner one.
  Element product(std::size_t n, std::size_t m, const Element& a, const Element& b) const;

 private:
  XModMorphism morphism_;
  BarAlgebra source_;
  BarAlgebra target_;
  std::vector<AlgebraHom> phis_;
  std::vector<BarModule> rows_;
  std::size_t n_depth_;
  std::size_t m_depth_;
  CheckClass klass_;
};

/// Column m as a simplicial module in n.
class BiBarColumn : public SimplicialModule {
 public:
  BiBarColumn(const BiBar& b, std::size_t m) : b_(&b), m_(m) {}
  std::size_t depth() const override { return b_->n_depth(); }
  const FiniteModule& level(std::size_t n) const override { return b_->carrier(n, m_); }
  Element face(std::size_t n, std::size_t j, const Element& x) const override { return b_->v_face(n, m_, j, x); }
  Element degeneracy(std::size_t n, std::size_t j, const Element& x) const override {
    return b_->v_degeneracy(n, m_, j, x);
  }

 private:
  const BiBar* b_;
  std::size_t m_;
};

/// Throws UnsupportedScale beyond kMaxBiBarDepth. A validated morphism of
/// crossed modules gives THEOREM-class checks; anything else AXIOM.
BiBar build_bibar(const XModMorphism& m, std::size_t n_depth, std::size_t m_depth);
/// Same carriers with caller-supplied Phi_n (checks become AXIOM-class).
BiBar build_bibar(const XModMorphism& m, std::size_t n_depth, std::size_t m_depth, std::vector<AlgebraHom> phis);

/// The printed first-square and second-square tables at bidegrees up to (1,1).
Check low_dimension_square_check(const BiBar& b, const Policy& policy);

Check verify_bibar(const BiBar& b, const Policy& policy);

}  // namespace xmodbar
