#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xmodbar/report.hpp"
#include "xmodbar/workspace.hpp"

namespace xmodbar {

inline constexpr std::size_t kDefaultPerturbBudget = 1000;
inline constexpr std::size_t kDefaultFuzzCount = 1000;

/// One command invocation. Unset optionals fall back to the workspace
/// options, then to the library defaults.
struct RunOptions {
  std::string command;
  std::vector<std::string> args;
  std::optional<std::size_t> levels;
  std::optional<std::pair<std::size_t, std::size_t>> bibar_levels;
  std::optional<PolicyMode> policy;
  std::optional<std::uint64_t> seed;
  std::optional<Residue> modulus;
  std::optional<std::size_t> rank;
  std::string kind = "algebra";
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::size_t> count;
  std::optional<std::size_t> perturb_budget;
  bool corrupt_phi = false;
};

struct RunResult {
  Report report;
  /// Command output beyond the verdicts (bar tensors, enumerated
  /// instances) as a JSON document; empty when there is none.
  std::string artifact;
};

/// F1, F2, F3, the F2 sub crossed module and inclusion, the CM1/CM2
/// failures and the image counterexample, under fixed names.
Workspace builtin_workspace();

Policy effective_policy(const RunOptions& options, const Workspace& ws);

/// Throws InputError for unknown commands or names.
RunResult run(const RunOptions& options, const Workspace& ws);

std::string render(const RunResult& result, bool json);

/// A leaf standing for a whole check tree: its verdict, the class and
/// path of the first failure, and that failure's witness.
Check summarize(std::string name, const Check& tree);

/// Every submodule of a desk-scale module, in a fixed order.
std::vector<Submodule> all_submodules(const FiniteModule& m);

struct PipelineOptions {
  std::size_t bar_depth = 4;
  std::size_t perturb_budget = 50;
  bool consequences = true;
  bool bar = true;
  bool roundtrip = true;
  bool ideals = true;
  bool bibar = true;
  std::pair<std::size_t, std::size_t> bibar_levels{2, 2};
};

/// xmod -> bar -> round trip -> crossed-ideal inclusions -> bisimplicial
/// module, for every crossed module the enumeration produces.
Check enumeration_pipeline(Residue m, std::size_t max_rank, const Policy& policy, const PipelineOptions& options);

struct FuzzStats {
  std::size_t attempts = 0;
  std::size_t validated = 0;
  std::size_t mode_a = 0;
  std::size_t mode_b = 0;
  std::size_t image_failures = 0;
};

/// Seeded crossed ideal maps at m = 2, rank <= 2: mode A takes the inclusion
/// of a random crossed ideal, mode B draws a random morphism with random
/// ideal structures and h-map and keeps it when every condition holds.
/// Each validated instance is re-checked under `policy` and its image is
/// checked to be a crossed ideal.
Check cim_fuzz(std::uint64_t seed, std::size_t count, const Policy& policy, FuzzStats* stats = nullptr);

/// Fixtures, negative controls, the m = 2 enumeration pipeline and the fuzz
/// run, as one report.
Check full_suite(std::uint64_t seed, const Policy& policy);

}  // namespace xmodbar
