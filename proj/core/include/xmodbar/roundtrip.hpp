#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xmodbar/bar.hpp"
#include "xmodbar/report.hpp"
#include "xmodbar/xmod.hpp"

namespace xmodbar {

/// Reads s.r off level 1 through (s,0)(0,r) = (0, s.r). Throws
/// MalformedStructure if some product has a nonzero S-coordinate.
AlgebraAction extract_action(const BarAlgebra& t);
/// eta(r) = d_0(0, r). Throws MalformedStructure unless d_0 is the
/// translation (s, r) -> s + eta(r).
AlgebraHom extract_eta(const BarAlgebra& t);
CrossedModule extract_crossed_module(const BarAlgebra& t, std::string name = "extracted");

/// Checks the extracted action through the level structure: B_1 must be
/// S x| R with d_0 multiplicative (the CM1 route) and R_2 must be R x| R
/// with d_0 multiplicative on it (the CM2 route).
Check verify_extracted(const BarAlgebra& t, const Policy& policy);

/// extract, then build the bar algebra of the result to the same depth.
BarAlgebra rebuild(const BarAlgebra& t);

/// Coordinate-exact comparison of the level tensors.
Check compare_structures(const BarAlgebra& expected, const BarAlgebra& actual, std::string name);

/// Generator-level verdicts for the ideal simplicial algebra conditions.
/// Every condition is multilinear, so these are exact.
struct StructureVerdict {
  bool base_is_s = true;
  bool levels_are_algebras = true;
  bool operators_multiplicative = true;
  bool natural_action = true;  // (s,0)(s',r') = (ss', s.r'_1, ..., s.r'_k)
  bool r_products = true;      // (0,r)(0,r') = (0,rr')

  bool all() const { return base_is_s && levels_are_algebras && operators_multiplicative && natural_action && r_products; }
  bool all_but_r_products() const {
    return base_is_s && levels_are_algebras && operators_multiplicative && natural_action && !r_products;
  }
};
StructureVerdict structure_verdict(const BarAlgebra& t);

struct PerturbOptions {
  std::size_t budget = 1000;
  std::uint64_t seed = 20240917;
};

struct PerturbResult {
  std::size_t candidates = 0;
  std::size_t passed = 0;
  std::size_t failed_only_r_products = 0;
  std::vector<BarAlgebra> survivors;  // distinct, canonical first
};

/// Candidate 0 is the canonical structure; the rest perturb random
/// torsion-compatible symmetric tensor entries on random levels.
PerturbResult perturb_and_filter(const CrossedModule& xm, std::size_t depth, const PerturbOptions& options);

Check roundtrip_check(const CrossedModule& xm, std::size_t depth, const Policy& policy, const PerturbOptions& options);

}  // namespace xmodbar
