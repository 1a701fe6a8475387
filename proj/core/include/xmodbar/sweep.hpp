#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "xmodbar/errors.hpp"
#include "xmodbar/module.hpp"
#include "xmodbar/report.hpp"

namespace xmodbar {

/// Hard ceiling for a forced exhaustive sweep; beyond it even
/// `--policy exhaustive` refuses rather than running for hours.
inline constexpr std::uint64_t kExhaustiveCeiling = std::uint64_t{1} << 32;

struct SweepResult {
  bool exhaustive = true;
  std::uint64_t total = 0;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
  std::optional<std::vector<Element>> witness;

  bool holds() const { return !witness.has_value(); }
  std::string coverage() const;
};

/// Product of the domain sizes, saturating at UINT64_MAX.
std::uint64_t tuple_count(std::span<const FiniteModule> domains);

bool use_exhaustive(const Policy& policy, std::uint64_t total);

/// Evaluates `holds(tuple)` over the cartesian product of `domains`.
/// Exhaustive sweeps walk tuples in lexicographic order and stop at the
/// first violation, which is therefore the least one. Sampled sweeps draw
/// `policy.sample_count` tuples from mt19937_64 seeded with `policy.seed`.
template <class Pred>
SweepResult sweep(std::span<const FiniteModule> domains, const Policy& policy, Pred&& holds) {
  SweepResult res;
  res.total = tuple_count(domains);
  res.seed = policy.seed;
  res.exhaustive = use_exhaustive(policy, res.total);
  std::vector<Element> tuple;
  tuple.reserve(domains.size());
  for (const auto& d : domains) tuple.push_back(d.zero());
  if (res.total == 0) return res;

  if (res.exhaustive) {
    if (res.total > kExhaustiveCeiling) throw UnsupportedScale("exhaustive sweep of " + std::to_string(res.total) + " tuples");
    while (true) {
      ++res.checked;
      if (!holds(static_cast<const std::vector<Element>&>(tuple))) {
        res.witness = tuple;
        return res;
      }
      std::size_t pos = domains.size();
      bool carried = true;
      while (carried && pos-- > 0) carried = !domains[pos].advance(tuple[pos]);
      if (carried) return res;
    }
  }

  std::mt19937_64 rng(policy.seed);
  for (std::uint64_t n = 0; n < policy.sample_count; ++n) {
    for (std::size_t i = 0; i < domains.size(); ++i) tuple[i] = domains[i].element_at(rng() % domains[i].size());
    ++res.checked;
    if (!holds(static_cast<const std::vector<Element>&>(tuple))) {
      res.witness = tuple;
      return res;
    }
  }
  return res;
}

/// Wraps a sweep into a report leaf. `explain` (optional) turns the
/// witness into extra detail text, e.g. the two sides of the equation.
template <class Pred>
Check sweep_check(std::string name, CheckClass klass, std::span<const FiniteModule> domains,
                  std::vector<std::string> labels, const Policy& policy, Pred&& holds,
                  const std::function<std::string(const std::vector<Element>&)>& explain = {}) {
  SweepResult res = sweep(domains, policy, std::forward<Pred>(holds));
  Check c = res.holds() ? Check::pass(std::move(name), klass)
                        : Check::fail(std::move(name), klass, explain ? explain(*res.witness) : std::string("violated"),
                                      Witness{std::move(labels), *res.witness});
  c.coverage = res.coverage();
  return c;
}

/// Leaf for checks that are exact because both sides are multilinear, so
/// generator tuples suffice.
Check exact_check(std::string name, CheckClass klass, std::uint64_t generator_tuples,
                  std::optional<Witness> witness, std::string detail = {});

}  // namespace xmodbar
