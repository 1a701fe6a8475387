#pragma once

#include <string>
#include <vector>

#include "xmodbar/algebra.hpp"
#include "xmodbar/crossed_ideal.hpp"
#include "xmodbar/xmod.hpp"

namespace xmodbar {

/// Brute-force enumeration of tiny instances, the oracle behind the suite
/// counts. Everything is returned in a fixed, deterministic order.

inline constexpr std::size_t kMaxEnumerationRank = 2;

/// Throws InputError unless m is 2, 3 or 4 and rank <= kMaxEnumerationRank.
void check_enumeration_bounds(Residue m, std::size_t rank);

/// Invariant-factor shapes d_1 | d_2 | ... | d_rank with 1 < d_i | m.
std::vector<std::vector<Residue>> canonical_shapes(Residue m, std::size_t rank);

/// All commutative associative multiplications on modules of exactly this
/// rank (one canonical module per isomorphism type of the underlying module).
std::vector<Algebra> enumerate_algebras(Residue m, std::size_t rank);
std::vector<Algebra> enumerate_algebras_up_to(Residue m, std::size_t max_rank);

/// Module maps given by all order-compatible generator images.
std::vector<ModuleHom> enumerate_module_homs(const FiniteModule& from, const FiniteModule& to);
std::vector<AlgebraHom> enumerate_algebra_homs(const Algebra& from, const Algebra& to);
/// All torsion-compatible tensors left x right -> target.
std::vector<BilinearMap::Tensor> enumerate_tensors(const FiniteModule& left, const FiniteModule& right,
                                                   const FiniteModule& target);
/// All torsion-compatible action tensors of S on R (no axioms imposed).
std::vector<BilinearMap::Tensor> enumerate_action_tensors(const Algebra& S, const Algebra& R);

struct XModCandidate {
  CrossedModule xm;
  XModClassification cls;
};

/// Every (eta, action) pair on (R, S) with eta an algebra homomorphism.
std::vector<XModCandidate> enumerate_xmods(const Algebra& R, const Algebra& S, const std::string& prefix = "xm");
/// Only the crossed modules among them, with the same names; faster because
/// rejected candidates are never assembled.
std::vector<CrossedModule> enumerate_crossed_modules(const Algebra& R, const Algebra& S,
                                                     const std::string& prefix = "xm");
/// The same over all pairs of algebras of rank <= max_rank.
std::vector<XModCandidate> enumerate_xmods(Residue m, std::size_t max_rank);

std::vector<XModMorphism> enumerate_morphisms(const CrossedModule& from, const CrossedModule& to);

}  // namespace xmodbar
