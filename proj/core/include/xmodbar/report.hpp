#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmodbar/module.hpp"

namespace xmodbar {

enum class Status { Pass, Fail, Note, Skip };

/// AXIOM: the input may legitimately violate it. THEOREM: holds for every
/// valid input, so a failure is an implementation bug. STRUCTURAL: the
/// input is not even well formed.
enum class CheckClass { Axiom, Theorem, Structural };

const char* to_string(Status s);
const char* to_string(CheckClass c);

struct Witness {
  std::vector<std::string> labels;
  std::vector<Element> values;
};

/// One node of a verification report. Leaves carry a verdict; groups take
/// the worst verdict of their children.
struct Check {
  std::string name;
  Status status = Status::Pass;
  CheckClass klass = CheckClass::Axiom;
  std::string detail;
  std::string coverage;
  std::optional<Witness> witness;
  // A list so references returned by add() survive later additions.
  std::list<Check> children;

  static Check pass(std::string name, CheckClass klass, std::string detail = {});
  static Check fail(std::string name, CheckClass klass, std::string detail, std::optional<Witness> w = {});
  static Check note(std::string name, std::string detail);
  static Check skip(std::string name, std::string detail);
  static Check group(std::string name, CheckClass klass = CheckClass::Axiom);

  Check& add(Check child);
  Status effective() const;
  bool passed() const { return effective() != Status::Fail; }
  bool has_failure(CheckClass klass) const;

  /// Path lookup with '/' separators, e.g. "preconditions/action/axiom 5".
  const Check* find(std::string_view path) const;
  /// Depth-first search for the first node with the given name.
  const Check* find_named(std::string_view name) const;
  /// First failing leaf in depth-first order.
  const Check* first_failure() const;
  std::size_t leaf_count() const;
};

/// Re-labels a subtree, e.g. when an axiom check is reused as a
/// regression whose failure would be a bug.
void set_class(Check& c, CheckClass klass);

enum class PolicyMode { Auto, Exhaustive, Sample };

const char* to_string(PolicyMode m);

/// Exhaustive sweeps up to `exhaustive_limit` tuples; larger sweeps draw
/// `sample_count` uniform tuples from a generator seeded with `seed`.
struct Policy {
  PolicyMode mode = PolicyMode::Auto;
  std::uint64_t seed = 20240917;
  std::uint64_t exhaustive_limit = 1'000'000;
  std::uint64_t sample_count = 10'000;
};

struct Report {
  std::string command;
  Policy policy;
  Check root;

  /// 0 all pass, 1 axiom failures, 2 theorem-class failures,
  /// 3 structural failures.
  int exit_code() const;
};

std::string render_text(const Report& report);
std::string render_json(const Report& report, std::string_view artifact_json = {});

}  // namespace xmodbar
