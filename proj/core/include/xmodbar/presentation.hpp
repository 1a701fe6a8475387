#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "xmodbar/module.hpp"

namespace xmodbar {

/// Z^n / L for a lattice L containing mZ^n, brought to diagonal form by
/// unimodular row and column operations carried out modulo m. After the
/// change of basis y = xV the quotient is the direct sum of Z/delta_j.
struct LatticeQuotient {
  Residue modulus = 2;
  std::vector<Residue> deltas;                  // one per column, delta_j | m
  std::vector<std::vector<Residue>> v;          // n x n, mod m
  std::vector<std::vector<Residue>> v_inverse;  // n x n, mod m
  std::vector<std::size_t> kept;                // columns with delta_j > 1

  /// `relations` are integer row vectors of length n.
  static LatticeQuotient diagonalize(Residue modulus, std::size_t n, std::vector<std::vector<Residue>> relations);

  FiniteModule module() const;
  /// Coordinates in module() of the class of the integer vector x.
  Element project(std::span<const Residue> x) const;
  /// An integer vector (mod m) in the class of y.
  std::vector<Residue> lift(const Element& y) const;
};

/// The submodule spanned by `generators`, re-presented as a direct sum of
/// cyclic summands with an explicit basis inside the ambient module.
class SpanPresentation {
 public:
  SpanPresentation(const FiniteModule& ambient, std::span<const Element> generators);

  const FiniteModule& module() const { return module_; }
  const FiniteModule& ambient() const { return ambient_; }
  /// Ambient image of each basis vector of module().
  const std::vector<Element>& basis() const { return basis_; }
  bool contains(const Element& x) const;
  /// Coordinates of an ambient element of the span. Throws
  /// PreconditionError for elements outside the span.
  Element coords(const Element& x) const;
  Element embed(const Element& y) const;

 private:
  FiniteModule ambient_;
  FiniteModule module_;
  std::vector<Element> generators_;
  std::vector<Element> basis_;
  LatticeQuotient lattice_;
  std::unordered_map<std::uint64_t, std::vector<Residue>> combination_;
};

/// A small additive generating set of an enumerated submodule, chosen
/// greedily in index order.
std::vector<Element> generating_set(const Submodule& sub);

}  // namespace xmodbar
