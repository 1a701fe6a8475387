#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xmodbar/errors.hpp"
#include "xmodbar/harness.hpp"
#include "xmodbar/workspace.hpp"

namespace {

constexpr int kInputErrorExit = 3;

struct Subcommand {
  const char* name;
  const char* help;
};

constexpr Subcommand kCommands[] = {
    {"check-algebra", "validate a named algebra"},
    {"check-xmod", "validate a crossed module and its consequences"},
    {"bar-build", "build the bar construction and print its level tensors"},
    {"bar-verify", "verify the bar construction up to --levels"},
    {"roundtrip", "extract and rebuild the bar structure, with perturbed survivors"},
    {"ideal-check", "check <sub> <ambient> for the crossed ideal conditions"},
    {"cim-check", "validate a crossed ideal map and its image"},
    {"bibar-verify", "verify the bisimplicial module of a morphism at --levels N M"},
    {"enumerate", "list algebras, crossed modules or morphisms"},
    {"fuzz", "seeded crossed ideal maps, each re-checked with its image"},
    {"suite", "fixtures, negative controls, enumeration pipeline and fuzz run"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite crossed modules of commutative algebras and their bar constructions"};
  app.require_subcommand(1);

  std::string workspace_path;
  std::string format = "text";
  std::string policy;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> levels;
  std::optional<xmodbar::Residue> modulus;
  std::optional<std::size_t> rank;
  std::string kind = "algebra";
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::size_t> count;
  std::optional<std::size_t> perturb_budget;
  bool corrupt_phi = false;

  app.add_option("-w,--workspace", workspace_path, "workspace JSON file (default: built-in fixtures)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--policy", policy, "sweep policy")->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
  app.add_option("--seed", seed, "seed for sampled sweeps, perturbation and fuzzing");
  app.add_option("--levels", levels, "bar depth N, or bisimplicial truncation N M")->expected(1, 2);
  app.add_option("--modulus", modulus, "enumeration modulus (2, 3 or 4)");
  app.add_option("--rank", rank, "enumeration rank (at most 2)");
  app.add_option("--kind", kind, "enumeration kind")->check(CLI::IsMember({"algebra", "xmod", "morphism"}));
  app.add_option("--from", from, "source algebra or crossed module for enumerate");
  app.add_option("--to", to, "target algebra or crossed module for enumerate");
  app.add_option("--count", count, "number of fuzz instances");
  app.add_option("--perturb-budget", perturb_budget, "perturbed candidates for roundtrip");
  app.add_flag("--corrupt-phi", corrupt_phi, "bibar-verify negative control");

  std::map<std::string, std::vector<std::string>> positional;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("args", positional[c.name], "names");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputErrorExit;
  }

  xmodbar::RunOptions options;
  options.command = app.get_subcommands().front()->get_name();
  options.args = positional[options.command];
  if (levels.size() == 2) {
    if (options.command != "bibar-verify") {
      std::cerr << "error: --levels takes two values only for bibar-verify\n";
      return kInputErrorExit;
    }
    options.bibar_levels = std::make_pair(levels[0], levels[1]);
  } else if (levels.size() == 1) {
    if (options.command == "bibar-verify") {
      options.bibar_levels = std::make_pair(levels[0], levels[0]);
    } else {
      options.levels = levels[0];
    }
  }
  if (policy == "auto") options.policy = xmodbar::PolicyMode::Auto;
  if (policy == "exhaustive") options.policy = xmodbar::PolicyMode::Exhaustive;
  if (policy == "sample") options.policy = xmodbar::PolicyMode::Sample;
  options.seed = seed;
  options.modulus = modulus;
  options.rank = rank;
  options.kind = kind;
  options.from = from;
  options.to = to;
  options.count = count;
  options.perturb_budget = perturb_budget;
  options.corrupt_phi = corrupt_phi;

  try {
    const xmodbar::Workspace ws =
        workspace_path.empty() ? xmodbar::builtin_workspace() : xmodbar::load_workspace(workspace_path);
    const xmodbar::RunResult result = xmodbar::run(options, ws);
    std::cout << xmodbar::render(result, format == "json");
    return result.report.exit_code();
  } catch (const xmodbar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputErrorExit;
  }
}
