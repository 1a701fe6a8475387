// One line per acceptance criterion; exits nonzero when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "xmodbar/bar.hpp"
#include "xmodbar/bibar.hpp"
#include "xmodbar/crossed_ideal.hpp"
#include "xmodbar/enumerate.hpp"
#include "xmodbar/examples.hpp"
#include "xmodbar/harness.hpp"
#include "xmodbar/roundtrip.hpp"
#include "xmodbar/xmod.hpp"

using namespace xmodbar;

namespace {

// Pinned limits.
constexpr std::size_t kCmTupleLimit = 32;
constexpr std::size_t kBarPairLimit = 4096;
constexpr double kAc1Seconds = 1.0;
constexpr double kAc5Seconds = 10.0;
constexpr std::size_t kMinFuzzInstances = 100;
constexpr std::uint64_t kSeed = 20240917;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// "exhaustive a/b" -> b; 0 when the sweep was not exhaustive.
std::size_t exhaustive_total(const std::string& coverage) {
  const auto pos = coverage.find("exhaustive ");
  if (pos == std::string::npos) return 0;
  const auto slash = coverage.find('/', pos);
  if (slash == std::string::npos) return 0;
  return std::stoull(coverage.substr(slash + 1));
}

void for_each_leaf(const Check& c, const std::function<void(const Check&)>& f) {
  if (c.children.empty()) {
    f(c);
    return;
  }
  for (const auto& ch : c.children) for_each_leaf(ch, f);
}

bool group_passes(const Check& tree, const char* name, Verdict& v) {
  const Check* g = tree.find_named(name);
  v.require(g != nullptr, std::string("missing group '") + name + "'");
  if (g == nullptr) return false;
  v.require(g->passed(), std::string("'") + name + "' fails");
  return g->passed();
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.carrier.orders() == b.carrier.orders() && a.mul.constants() == b.mul.constants();
}

Verdict ac1() {
  Verdict v;
  Policy exact;
  exact.mode = PolicyMode::Exhaustive;
  const auto t0 = std::chrono::steady_clock::now();
  const CrossedModule f1 = examples::f1();
  const Check xm = validate_crossed_module(f1, exact);
  const Check bar = verify_bar(build_bar_algebra(f1, 4), exact);
  const double secs = seconds_since(t0);

  v.require(xm.passed(), "F1 crossed module fails");
  for (const char* cm : {"CM1: eta(s.r) = s eta(r)", "CM2: eta(r).r' = rr'"}) {
    const Check* leaf = xm.find_named(cm);
    v.require(leaf && leaf->status == Status::Pass, std::string(cm) + " does not pass");
    if (leaf) {
      const std::size_t n = exhaustive_total(leaf->coverage);
      v.require(n > 0 && n <= kCmTupleLimit, std::string(cm) + " coverage '" + leaf->coverage + "'");
    }
  }
  v.require(bar.passed(), "bar construction fails");
  for (const char* g : {"simplicial identities", "faces and degeneracies are multiplicative", "ideal axiom",
                        "decomposition", "closed formulas", "eta_k"}) {
    group_passes(bar, g, v);
  }
  std::size_t largest = 0;
  if (const Check* mult = bar.find_named("faces and degeneracies are multiplicative")) {
    for_each_leaf(*mult, [&](const Check& leaf) {
      const std::size_t n = exhaustive_total(leaf.coverage);
      v.require(n > 0, "non-exhaustive sweep '" + leaf.name + "'");
      largest = std::max(largest, n);
    });
  }
  v.require(largest <= kBarPairLimit, "a sweep exceeds " + std::to_string(kBarPairLimit) + " pairs");
  for (std::size_t k = 1; k <= 4; ++k) {
    v.require(bar.find_named("decomposition of B_" + std::to_string(k)) != nullptr,
              "no decomposition check at level " + std::to_string(k));
  }
  v.require(secs < kAc1Seconds, "took " + std::to_string(secs) + " s");
  if (v.ok) {
    v.detail << "CM sweeps <= " << kCmTupleLimit << ", " << bar.leaf_count() << " bar checks, largest sweep "
             << largest << " pairs, " << secs << " s";
  }
  return v;
}

Verdict ac2() {
  Verdict v;
  std::vector<CrossedModule> cases;
  for (Residue m : {2, 3}) {
    for (auto& c : enumerate_xmods(m, 1)) {
      if (c.cls.crossed()) cases.push_back(std::move(c.xm));
    }
  }
  const std::size_t enumerated = cases.size();
  cases.push_back(examples::f1());
  cases.push_back(examples::f2());
  cases.push_back(examples::f2_sub_xmod());
  for (const auto& xm : cases) {
    const BarAlgebra built = build_bar_algebra(xm, 4);
    const CrossedModule back = extract_crossed_module(built);
    const bool tensors = same_algebra(back.R(), xm.R()) && same_algebra(back.S(), xm.S()) &&
                         back.eta.map.images() == xm.eta.map.images() &&
                         back.action.tensor.constants() == xm.action.tensor.constants();
    v.require(tensors, xm.name + ": extracted structure differs");
    const BarAlgebra rebuilt = rebuild(built);
    bool levels = rebuilt.levels.size() == built.levels.size();
    for (std::size_t k = 0; levels && k < built.levels.size(); ++k) levels = same_algebra(rebuilt.levels[k], built.levels[k]);
    v.require(levels, xm.name + ": rebuilt level products differ");
  }
  if (v.ok) v.detail << enumerated << " enumerated crossed modules + F1, F2, F2-sub; exact at levels <= 4";
  return v;
}

Verdict ac3() {
  Verdict v;
  Policy exact;
  exact.mode = PolicyMode::Exhaustive;

  const CrossedModule f3 = examples::f3();
  const Check xm = validate_crossed_module(f3, exact);
  const Check* cm2 = xm.find_named("CM2: eta(r).r' = rr'");
  const Element g = f3.R().carrier.generator(0);
  v.require(cm2 && cm2->status == Status::Fail, "F3 does not fail CM2");
  v.require(cm2 && cm2->witness && cm2->witness->values == std::vector<Element>{g, g}, "F3 CM2 witness is not (g,g)");

  const Check bar3 = verify_bar(build_bar_algebra_unchecked(f3, 2), exact);
  const Check* r2 = bar3.find_named("d_0 on R_2");
  v.require(r2 && r2->status == Status::Fail, "F3 bar passes d_0 on R_2");

  // Rank 1 has no candidate failing CM1 alone, so the search widens to rank 2.
  const CrossedModule* cm1 = nullptr;
  std::vector<XModCandidate> cands;
  for (std::size_t rank = 1; rank <= 2 && cm1 == nullptr; ++rank) {
    cands = enumerate_xmods(2, rank);
    for (const auto& c : cands) {
      if (c.cls.algebras_ok && c.cls.hom_ok && c.cls.action_ok && !c.cls.cm1 && c.cls.cm2) {
        cm1 = &c.xm;
        break;
      }
    }
  }
  v.require(cm1 != nullptr, "no CM1-only failure in the m = 2, rank <= 2 enumeration");
  std::vector<std::string> failing;
  if (cm1) {
    const Check bar1 = verify_bar(build_bar_algebra_unchecked(*cm1, 2), exact);
    const Check* d0 = bar1.find_named("d_0: B_1 -> B_0");
    v.require(d0 && d0->status == Status::Fail, cm1->name + " passes d_0: B_1 -> B_0");
    // Localization: among the face and degeneracy sweeps only the d_0 faces fail.
    for (const Check* tree : {&bar1, &bar3}) {
      const Check* mult = tree->find_named("faces and degeneracies are multiplicative");
      if (!mult) continue;
      for_each_leaf(*mult, [&](const Check& leaf) {
        if (leaf.status != Status::Fail) return;
        failing.push_back(leaf.name);
        v.require(leaf.name.rfind("d_0", 0) == 0, "unexpected failure '" + leaf.name + "'");
      });
    }
  }
  if (v.ok) {
    v.detail << "F3 CM2 witness (g,g); F3 fails d_0 on R_2; " << cm1->name << " fails d_0: B_1 -> B_0; "
             << failing.size() << " failing sweeps, all d_0 faces";
  }
  return v;
}

Verdict ac4() {
  Verdict v;
  Policy policy;
  std::size_t tested = 0;
  auto run_all = [&](Residue m, std::size_t rank) {
    for (const auto& c : enumerate_xmods(m, rank)) {
      if (!c.cls.crossed()) continue;
      ++tested;
      const Check cc = consequence_checks(c.xm, policy);
      v.require(cc.passed(), c.xm.name + " fails its consequences");
    }
  };
  run_all(2, 2);
  run_all(3, 1);
  run_all(4, 1);
  if (v.ok) v.detail << tested << " crossed modules (m=2 rank<=2, m=3,4 rank<=1), zero failures";
  return v;
}

Verdict ac5() {
  Verdict v;
  Policy policy;
  const auto t0 = std::chrono::steady_clock::now();
  const SubXMod sub = examples::f2_sub();
  const Check ideal = validate_crossed_ideal(sub, policy);
  v.require(ideal.passed(), "F2 fails the crossed ideal conditions");
  for (const char* ci : {"CI1", "CI2", "CI3: S'.R in R'", "CI4: S.R' in R'"}) {
    v.require(ideal.find_named(ci) != nullptr, std::string("no ") + ci + " check");
  }
  const CrossedIdealMap cim = inclusion_cim(sub);
  const Check map = validate_crossed_ideal_map(cim, policy);
  v.require(map.passed(), "inclusion_cim(F2) fails");
  for (const char* c : {"(a) alpha1(h(r2,s1)) = alpha2(s1).r2", "(b) eta1(h(r2,s1)) = eta2(r2).s1",
                        "(c) h(alpha1(r1),s1) = s1.r1", "(d) h(r2,eta1(r1)) = r2.r1"}) {
    v.require(map.find_named(c) != nullptr, std::string("no h-condition ") + c);
  }
  v.require(image_crossed_ideal_check(cim, policy).passed(), "F2 image is not a crossed ideal");

  FuzzStats stats;
  const Check fuzz = cim_fuzz(kSeed, kDefaultFuzzCount, policy, &stats);
  const double secs = seconds_since(t0);
  v.require(stats.validated >= kMinFuzzInstances, "only " + std::to_string(stats.validated) + " fuzzed instances");
  if (stats.image_failures > 0) {
    std::string first;
    for (const auto& inst : fuzz.children) {
      if (inst.status == Status::Fail) {
        first = inst.name + ": " + inst.detail;
        break;
      }
    }
    v.require(false, std::to_string(stats.image_failures) + " of " + std::to_string(stats.validated) +
                         " fuzzed images are not crossed ideals (first " + first + ")");
  }
  v.require(secs < kAc5Seconds, "took " + std::to_string(secs) + " s");
  if (v.ok) v.detail << "F2 CI1-CI4, (a)-(d), image; " << stats.validated << " fuzzed images pass; " << secs << " s";
  return v;
}

Verdict ac6() {
  Verdict v;
  Policy exact;
  exact.mode = PolicyMode::Exhaustive;
  const XModMorphism inc = examples::f2_inclusion();
  const Check good = verify_bibar(build_bibar(inc, 2, 2), exact);
  v.require(good.passed(), "F2 inclusion bisimplicial module fails");
  for (const char* g : {"horizontal identities", "vertical identities", "horizontal-vertical commutation",
                        "low-dimension squares"}) {
    group_passes(good, g, v);
  }
  const BarAlgebra src = build_bar_algebra(inc.source, 2);
  const BarAlgebra tgt = build_bar_algebra(inc.target, 2);
  const Check bad = verify_bibar(build_bibar(inc, 2, 2, corrupted_phi_maps(inc, src, tgt, 2)), exact);
  const Check* at11 = bad.find_named("d^h_i d^v_j = d^v_j d^h_i at (1,1)");
  v.require(at11 && at11->status == Status::Fail, "corrupted Phi passes commutation at (1,1)");
  if (v.ok) v.detail << good.leaf_count() << " checks pass; corrupted Phi fails commutation at (1,1)";
  return v;
}

Verdict ac7() {
  Verdict v;
  Policy policy;
  policy.seed = kSeed;
  const std::string a = render_json(Report{"suite", policy, full_suite(kSeed, policy)});
  const std::string b = render_json(Report{"suite", policy, full_suite(kSeed, policy)});
  v.require(a == b, "suite reports differ");
  if (v.ok) v.detail << "two suite runs, " << a.size() << " identical bytes";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "F1 crossed module and bar construction to level 4", ac1},
      {"AC2", "round trip exactness", ac2},
      {"AC3", "negative controls localized", ac3},
      {"AC4", "consequences on enumerated crossed modules", ac4},
      {"AC5", "crossed ideal suite and fuzzed images", ac5},
      {"AC6", "bisimplicial suite and corrupted Phi", ac6},
      {"AC7", "suite determinism", ac7},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail << "exception: " << e.what();
    }
    std::printf("%s %s: %s (%s)\n", v.ok ? "PASS" : "FAIL", c.id, c.what, v.detail.str().c_str());
    std::fflush(stdout);
    failed += v.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
