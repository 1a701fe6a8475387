#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "xmodbar/crossed_ideal.hpp"
#include "xmodbar/report.hpp"
#include "xmodbar/xmod.hpp"

namespace xmodbar {

struct WorkspaceOptions {
  std::optional<std::size_t> levels;
  std::optional<std::pair<std::size_t, std::size_t>> bibar_levels;
  std::optional<std::uint64_t> seed;
  std::optional<PolicyMode> policy;
  std::optional<std::size_t> perturb_budget;
};

/// Named objects from a workspace file. Maps keep names sorted so every
/// traversal is deterministic.
struct Workspace {
  Residue modulus = 2;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, AlgebraHom> homs;
  std::map<std::string, AlgebraAction> actions;
  std::map<std::string, CrossedModule> xmods;
  std::map<std::string, XModMorphism> morphisms;
  std::map<std::string, CrossedIdealMap> cims;
  WorkspaceOptions options;

  /// Throws InputError naming the identifier when it is missing.
  const Algebra& algebra(const std::string& name) const;
  const CrossedModule& xmod(const std::string& name) const;
  const XModMorphism& morphism(const std::string& name) const;
  const CrossedIdealMap& cim(const std::string& name) const;
};

/// Parses and cross-references a workspace document. Every error is an
/// InputError whose message starts with "source:line:col:"; semantic errors
/// also name the offending JSON pointer.
Workspace parse_workspace(std::string_view text, const std::string& source = "<input>");
Workspace load_workspace(const std::filesystem::path& path);

/// Line and column (both 1-based) of the value a JSON pointer addresses, or
/// of its deepest existing ancestor.
std::pair<std::size_t, std::size_t> locate_pointer(std::string_view text, std::string_view pointer);

}  // namespace xmodbar
