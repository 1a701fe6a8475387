#include "xmodbar/sweep.hpp"

#include <limits>

namespace xmodbar {

std::string SweepResult::coverage() const {
  if (exhaustive) return "exhaustive " + std::to_string(checked) + "/" + std::to_string(total);
  return "sampled " + std::to_string(checked) + " of " + std::to_string(total) + ", seed " + std::to_string(seed);
}

std::uint64_t tuple_count(std::span<const FiniteModule> domains) {
  std::uint64_t n = 1;
  for (const auto& d : domains) {
    const std::uint64_t s = d.size();
    if (s != 0 && n > std::numeric_limits<std::uint64_t>::max() / s) return std::numeric_limits<std::uint64_t>::max();
    n *= s;
  }
  return n;
}

bool use_exhaustive(const Policy& policy, std::uint64_t total) {
  switch (policy.mode) {
    case PolicyMode::Exhaustive: return true;
    case PolicyMode::Sample: return false;
    case PolicyMode::Auto: return total <= policy.exhaustive_limit;
  }
  return true;
}

Check exact_check(std::string name, CheckClass klass, std::uint64_t generator_tuples, std::optional<Witness> witness,
                  std::string detail) {
  Check c = witness ? Check::fail(std::move(name), klass, detail.empty() ? "violated" : std::move(detail), std::move(witness))
                    : Check::pass(std::move(name), klass, std::move(detail));
  c.coverage = "generators " + std::to_string(generator_tuples) + ", exact by multilinearity";
  return c;
}

}  // namespace xmodbar
