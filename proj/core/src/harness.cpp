#include "xmodbar/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xmodbar/bibar.hpp"
#include "xmodbar/enumerate.hpp"
#include "xmodbar/errors.hpp"
#include "xmodbar/examples.hpp"
#include "xmodbar/roundtrip.hpp"

namespace xmodbar {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Element& x) { return json(x.coeffs); }

json to_json(const BilinearMap::Tensor& t) {
  json out = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const std::vector<Element>& images) {
  json out = json::array();
  for (const auto& e : images) out.push_back(to_json(e));
  return out;
}

json algebra_json(const Algebra& a) {
  return json{{"orders", a.carrier.orders()}, {"mul", to_json(a.mul.constants())}};
}

const std::string& arg(const RunOptions& o, std::size_t i, const char* what) {
  if (o.args.size() <= i) throw InputError(o.command + ": missing argument <" + what + ">");
  return o.args[i];
}

void expect_args(const RunOptions& o, std::size_t n) {
  if (o.args.size() > n) throw InputError(o.command + ": unexpected argument '" + o.args[n] + "'");
}

std::size_t bar_levels(const RunOptions& o, const Workspace& ws) {
  return o.levels.value_or(ws.options.levels.value_or(kDefaultBarDepth));
}

std::pair<std::size_t, std::size_t> bibar_levels(const RunOptions& o, const Workspace& ws) {
  return o.bibar_levels.value_or(ws.options.bibar_levels.value_or(std::pair<std::size_t, std::size_t>{kDefaultBiBarDepth, kDefaultBiBarDepth}));
}

std::string command_line(const RunOptions& o) {
  std::string s = o.command;
  for (const auto& a : o.args) s += " " + a;
  return s;
}

BarAlgebra bar_for(const CrossedModule& xm, std::size_t depth) {
  return classify(xm).crossed() ? build_bar_algebra(xm, depth) : build_bar_algebra_unchecked(xm, depth);
}

/// Depth-first path to the first failing leaf.
bool failure_path(const Check& c, std::string& path, const Check*& leaf) {
  if (c.children.empty()) {
    if (c.status != Status::Fail) return false;
    path = c.name;
    leaf = &c;
    return true;
  }
  for (const auto& child : c.children) {
    if (failure_path(child, path, leaf)) {
      path = c.name + "/" + path;
      return true;
    }
  }
  return false;
}

/// Passes when the named node of `tree` fails, as a negative control should.
Check expected_failure(std::string name, const Check& tree, std::string_view node) {
  const Check* at = tree.find_named(node);
  if (at && at->effective() == Status::Fail) {
    Check c = Check::pass(std::move(name), CheckClass::Theorem, "fails at '" + std::string(node) + "' as predicted");
    if (const Check* leaf = at->first_failure()) c.witness = leaf->witness;
    return c;
  }
  const Check* other = tree.first_failure();
  return Check::fail(std::move(name), CheckClass::Theorem,
                     "expected a failure at '" + std::string(node) + "'" +
                         (other ? ", first failure is at '" + other->name + "'" : ", found none"));
}

Check run_check_algebra(const RunOptions& o, const Workspace& ws) {
  const std::string& name = arg(o, 0, "name");
  expect_args(o, 1);
  Check root = Check::group(name);
  root.add(validate_algebra(ws.algebra(name), name));
  if (auto unit = find_unit(ws.algebra(name))) {
    root.add(Check::note("unit", to_string(*unit)));
  } else {
    root.add(Check::note("unit", "none"));
  }
  return root;
}

Check run_check_xmod(const RunOptions& o, const Workspace& ws, const Policy& policy) {
  const std::string& name = arg(o, 0, "xmod");
  expect_args(o, 1);
  const CrossedModule& xm = ws.xmod(name);
  Check root = Check::group(name);
  Check v = validate_crossed_module(xm, policy);
  const bool valid = v.passed();
  root.add(std::move(v));
  root.add(semidirect_to_base_check(xm, policy));
  root.add(self_semidirect_check(xm, policy));
  if (valid) {
    root.add(consequence_checks(xm, policy));
  } else {
    root.add(Check::skip("consequences", "input is not a crossed module"));
  }
  return root;
}

Check run_bar_build(const RunOptions& o, const Workspace& ws, const Policy& policy, std::string& artifact) {
  const std::string& name = arg(o, 0, "xmod");
  expect_args(o, 1);
  const CrossedModule& xm = ws.xmod(name);
  const std::size_t depth = bar_levels(o, ws);
  const BarAlgebra t = bar_for(xm, depth);
  Check root = Check::group(name);
  root.add(validate_crossed_module(xm, policy, "input crossed module"));
  root.add(verify_level_algebras(t));
  json levels = json::array();
  for (std::size_t k = 0; k <= depth; ++k) {
    json l = algebra_json(t.levels[k]);
    levels.push_back(json{{"level", k}, {"orders", l["orders"]}, {"mul", l["mul"]}});
  }
  artifact = json{{"xmod", name}, {"depth", depth}, {"levels", std::move(levels)}}.dump();
  return root;
}

Check run_bar_verify(const RunOptions& o, const Workspace& ws, const Policy& policy) {
  const std::string& name = arg(o, 0, "xmod");
  expect_args(o, 1);
  const CrossedModule& xm = ws.xmod(name);
  Check root = Check::group(name);
  root.add(validate_crossed_module(xm, policy, "input crossed module"));
  root.add(verify_bar(bar_for(xm, bar_levels(o, ws)), policy));
  return root;
}

Check run_roundtrip(const RunOptions& o, const Workspace& ws, const Policy& policy) {
  const std::string& name = arg(o, 0, "xmod");
  expect_args(o, 1);
  PerturbOptions po;
  po.budget = o.perturb_budget.value_or(ws.options.perturb_budget.value_or(kDefaultPerturbBudget));
  po.seed = policy.seed;
  Check root = Check::group(name);
  root.add(roundtrip_check(ws.xmod(name), bar_levels(o, ws), policy, po));
  return root;
}

/// The sub crossed module is given by a workspace morphism from <sub> into
/// <ambient>; its images are the candidate R' and S'.
Check run_ideal_check(const RunOptions& o, const Workspace& ws, const Policy& policy) {
  const std::string& sub = arg(o, 0, "sub");
  const std::string& ambient = arg(o, 1, "ambient");
  expect_args(o, 2);
  ws.xmod(sub);
  ws.xmod(ambient);
  const XModMorphism* inc = nullptr;
  for (const auto& [n, m] : ws.morphisms) {
    if (m.source.name == sub && m.target.name == ambient) {
      inc = &m;
      break;
    }
  }
  if (!inc) throw InputError("ideal-check: no morphism from '" + sub + "' to '" + ambient + "' in the workspace");
  Check root = Check::group(sub + " in " + ambient);
  Check m = validate_morphism(*inc, policy, "inclusion " + inc->name);
  const bool injective = kernel(inc->alpha1.map).size() == 1 && kernel(inc->alpha2.map).size() == 1;
  root.add(injective ? Check::pass("inclusion is injective", CheckClass::Structural)
                     : Check::fail("inclusion is injective", CheckClass::Structural,
                                   "morphism '" + inc->name + "' has a nonzero kernel"));
  const bool ok = m.passed() && injective;
  root.add(std::move(m));
  if (!ok) {
    root.add(Check::skip("crossed ideal", "the morphism does not embed the sub crossed module"));
    return root;
  }
  root.add(validate_crossed_ideal(SubXMod{inc->target, image(inc->alpha1.map), image(inc->alpha2.map)}, policy));
  return root;
}

Check run_cim_check(const RunOptions& o, const Workspace& ws, const Policy& policy) {
  const std::string& name = arg(o, 0, "name");
  expect_args(o, 1);
  const CrossedIdealMap& c = ws.cim(name);
  Check root = Check::group(name);
  Check v = validate_crossed_ideal_map(c, policy);
  const bool valid = v.passed();
  root.add(std::move(v));
  if (valid) {
    root.add(image_crossed_ideal_check(c, policy));
  } else {
    root.add(Check::skip("image is a crossed ideal", "input is not a crossed ideal map"));
  }
  return root;
}

Check run_bibar_verify(const RunOptions& o, const Workspace& ws, const Policy& policy) {
  const std::string& name = arg(o, 0, "morphism");
  expect_args(o, 1);
  const XModMorphism& m = ws.morphism(name);
  const auto [n, mm] = bibar_levels(o, ws);
  Check root = Check::group(name);
  root.add(validate_crossed_module(m.source, policy, "source crossed module"));
  root.add(validate_crossed_module(m.target, policy, "target crossed module"));
  root.add(validate_morphism(m, policy));
  if (o.corrupt_phi) {
    const BarAlgebra src = build_bar_algebra_unchecked(m.source, n);
    const BarAlgebra tgt = build_bar_algebra_unchecked(m.target, n);
    root.add(Check::note("corrupted Phi", "Phi_n drops the first R-coordinate for n >= 1"));
    root.add(verify_bibar(build_bibar(m, n, mm, corrupted_phi_maps(m, src, tgt, n)), policy));
  } else {
    root.add(verify_bibar(build_bibar(m, n, mm), policy));
  }
  return root;
}

Check run_enumerate(const RunOptions& o, const Workspace& ws, std::string& artifact) {
  expect_args(o, 0);
  const Residue m = o.modulus.value_or(ws.modulus);
  const std::size_t rank = o.rank.value_or(1);
  check_enumeration_bounds(m, rank);
  Check root = Check::group("enumerate " + o.kind);
  json items = json::array();
  if (o.kind == "algebra") {
    const auto algebras = enumerate_algebras(m, rank);
    for (const auto& a : algebras) items.push_back(algebra_json(a));
    root.add(Check::note("count", std::to_string(algebras.size()) + " algebras of rank " + std::to_string(rank) +
                                      " over Z/" + std::to_string(m)));
  } else if (o.kind == "xmod") {
    std::vector<XModCandidate> cands;
    if (o.from || o.to) {
      if (!o.from || !o.to) throw InputError("enumerate --kind xmod: give both --from <R> and --to <S>");
      cands = enumerate_xmods(ws.algebra(*o.from), ws.algebra(*o.to), *o.from + "->" + *o.to);
    } else {
      cands = enumerate_xmods(m, rank);
    }
    std::map<std::string, std::size_t> by_label;
    for (const auto& c : cands) {
      ++by_label[c.cls.label()];
      items.push_back(json{{"name", c.xm.name},
                           {"R", algebra_json(c.xm.R())},
                           {"S", algebra_json(c.xm.S())},
                           {"eta", to_json(c.xm.eta.map.images())},
                           {"action", to_json(c.xm.action.tensor.constants())},
                           {"class", c.cls.label()}});
    }
    root.add(Check::note("count", std::to_string(cands.size()) + " candidates"));
    for (const auto& [label, n] : by_label) root.add(Check::note(label, std::to_string(n)));
  } else if (o.kind == "morphism") {
    if (!o.from || !o.to) throw InputError("enumerate --kind morphism: give --from <xmod> and --to <xmod>");
    const auto ms = enumerate_morphisms(ws.xmod(*o.from), ws.xmod(*o.to));
    for (const auto& mo : ms) {
      items.push_back(json{{"name", mo.name},
                           {"alpha1", to_json(mo.alpha1.map.images())},
                           {"alpha2", to_json(mo.alpha2.map.images())}});
    }
    root.add(Check::note("count", std::to_string(ms.size()) + " morphisms"));
  } else {
    throw InputError("unknown enumeration kind '" + o.kind + "' (expected algebra, xmod or morphism)");
  }
  artifact = json{{"kind", o.kind}, {"modulus", m}, {"rank", rank}, {"instances", std::move(items)}}.dump();
  return root;
}

/// Lazily enumerated crossed modules between the m = 2, rank <= 2 algebras.
class FuzzPool {
 public:
  FuzzPool() : algebras_(enumerate_algebras_up_to(2, 2)) {}

  std::size_t algebra_count() const { return algebras_.size(); }

  const std::vector<CrossedModule>& crossed(std::size_t r, std::size_t s) {
    auto it = cache_.find({r, s});
    if (it != cache_.end()) return it->second;
    auto out = enumerate_crossed_modules(algebras_[r], algebras_[s], "R" + std::to_string(r) + ".S" + std::to_string(s));
    return cache_.emplace(std::make_pair(r, s), std::move(out)).first->second;
  }

  std::optional<CrossedModule> random_xmod(std::mt19937_64& rng) {
    const std::size_t r = rng() % algebras_.size();
    const std::size_t s = rng() % algebras_.size();
    const auto& xs = crossed(r, s);
    if (xs.empty()) return std::nullopt;
    return xs[rng() % xs.size()];
  }

 private:
  std::vector<Algebra> algebras_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<CrossedModule>> cache_;
};

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

std::optional<CrossedIdealMap> fuzz_inclusion(FuzzPool& pool, std::mt19937_64& rng) {
  auto xm = pool.random_xmod(rng);
  if (!xm) return std::nullopt;
  const auto rs = all_submodules(xm->R().carrier);
  const auto ss = all_submodules(xm->S().carrier);
  SubXMod sub{*xm, pick(rs, rng), pick(ss, rng)};
  Policy exact;
  exact.mode = PolicyMode::Exhaustive;
  if (!validate_crossed_ideal(sub, exact).passed()) return std::nullopt;
  CrossedIdealMap c = inclusion_cim(sub);
  c.name = "inclusion into " + xm->name;
  return c;
}

std::optional<CrossedIdealMap> fuzz_random_map(FuzzPool& pool, std::mt19937_64& rng) {
  auto x1 = pool.random_xmod(rng);
  auto x2 = pool.random_xmod(rng);
  if (!x1 || !x2) return std::nullopt;
  const auto morphisms = enumerate_morphisms(*x1, *x2);
  if (morphisms.empty()) return std::nullopt;
  const XModMorphism& mor = pick(morphisms, rng);

  auto ideal_structures = [](const AlgebraHom& onto, const Algebra& actor, const Algebra& acted) {
    std::vector<AlgebraAction> out;
    AlgebraAction act(actor, acted, BilinearMap::zero(actor.carrier, acted.carrier, acted.carrier).constants());
    for (auto& t : enumerate_action_tensors(actor, acted)) {
      act.tensor = BilinearMap(actor.carrier, acted.carrier, acted.carrier, std::move(t));
      if (crossed_on_generators(onto, act)) out.push_back(act);
    }
    return out;
  };
  const auto b1s = ideal_structures(mor.alpha1, x2->R(), x1->R());
  const auto b2s = ideal_structures(mor.alpha2, x2->S(), x1->S());
  if (b1s.empty() || b2s.empty()) return std::nullopt;

  CrossedIdealMap c{x1->name + " -> " + x2->name + " via " + mor.name, mor, pick(b1s, rng), pick(b2s, rng), {}, true};
  std::vector<BilinearMap> hs;
  for (auto& t : enumerate_tensors(x2->R().carrier, x1->S().carrier, x1->R().carrier)) {
    c.h = BilinearMap(x2->R().carrier, x1->S().carrier, x1->R().carrier, std::move(t));
    if (cim_holds(c)) hs.push_back(c.h);
  }
  if (hs.empty()) return std::nullopt;
  c.h = pick(hs, rng);
  return c;
}

}  // namespace

Workspace builtin_workspace() {
  Workspace ws;
  ws.modulus = 2;
  auto add_xmod = [&](const CrossedModule& xm) {
    ws.xmods.emplace(xm.name, xm);
    ws.homs.emplace(xm.name + ".eta", xm.eta);
    ws.actions.emplace(xm.name + ".action", xm.action);
    ws.algebras.emplace(xm.name + ".R", xm.R());
    ws.algebras.emplace(xm.name + ".S", xm.S());
  };
  for (const auto& xm : {examples::f1(), examples::f2(), examples::f3(), examples::f2_sub_xmod(),
                         examples::cm1_failure(), examples::cm2_failure()}) {
    add_xmod(xm);
  }
  const XModMorphism inc = examples::f2_inclusion();
  ws.morphisms.emplace(inc.name, inc);

  CrossedIdealMap f2_cim = inclusion_cim(examples::f2_sub());
  f2_cim.name = "F2-inclusion";
  ws.cims.emplace(f2_cim.name, f2_cim);

  CrossedIdealMap counter = examples::image_ci4_counterexample();
  add_xmod(counter.morphism.source);
  add_xmod(counter.morphism.target);
  ws.morphisms.emplace(counter.morphism.name, counter.morphism);
  ws.cims.emplace(counter.name, counter);
  return ws;
}

Policy effective_policy(const RunOptions& options, const Workspace& ws) {
  Policy p;
  p.mode = options.policy.value_or(ws.options.policy.value_or(PolicyMode::Auto));
  p.seed = options.seed.value_or(ws.options.seed.value_or(p.seed));
  return p;
}

RunResult run(const RunOptions& options, const Workspace& ws) {
  RunResult out;
  out.report.command = command_line(options);
  out.report.policy = effective_policy(options, ws);
  const Policy& policy = out.report.policy;
  const std::string& c = options.command;
  if (c == "check-algebra") {
    out.report.root = run_check_algebra(options, ws);
  } else if (c == "check-xmod") {
    out.report.root = run_check_xmod(options, ws, policy);
  } else if (c == "bar-build") {
    out.report.root = run_bar_build(options, ws, policy, out.artifact);
  } else if (c == "bar-verify") {
    out.report.root = run_bar_verify(options, ws, policy);
  } else if (c == "roundtrip") {
    out.report.root = run_roundtrip(options, ws, policy);
  } else if (c == "ideal-check") {
    out.report.root = run_ideal_check(options, ws, policy);
  } else if (c == "cim-check") {
    out.report.root = run_cim_check(options, ws, policy);
  } else if (c == "bibar-verify") {
    out.report.root = run_bibar_verify(options, ws, policy);
  } else if (c == "enumerate") {
    out.report.root = run_enumerate(options, ws, out.artifact);
  } else if (c == "fuzz") {
    expect_args(options, 0);
    out.report.root = cim_fuzz(policy.seed, options.count.value_or(kDefaultFuzzCount), policy);
  } else if (c == "suite") {
    expect_args(options, 0);
    out.report.root = full_suite(policy.seed, policy);
  } else {
    throw InputError("unknown command '" + c + "'");
  }
  return out;
}

std::string render(const RunResult& result, bool as_json) {
  if (as_json) return render_json(result.report, result.artifact);
  std::string text = render_text(result.report);
  if (!result.artifact.empty()) text += json::parse(result.artifact).dump(2) + "\n";
  return text;
}

Check summarize(std::string name, const Check& tree) {
  std::string path;
  const Check* leaf = nullptr;
  if (!failure_path(tree, path, leaf)) {
    Check c = Check::pass(std::move(name), tree.klass, std::to_string(tree.leaf_count()) + " checks");
    return c;
  }
  Check c = Check::fail(std::move(name), leaf->klass, path + (leaf->detail.empty() ? "" : ": " + leaf->detail),
                        leaf->witness);
  c.coverage = leaf->coverage;
  return c;
}

std::vector<Submodule> all_submodules(const FiniteModule& m) {
  if (m.size() > 64) throw UnsupportedScale("submodule listing of a module with " + std::to_string(m.size()) + " elements");
  const auto elems = [&] {
    std::vector<Element> v;
    Element x = m.zero();
    do v.push_back(x);
    while (m.advance(x));
    return v;
  }();
  std::vector<Submodule> out;
  std::set<std::vector<std::uint64_t>> seen;
  // Desk-scale modules here have rank <= 2, so spans of pairs reach every
  // submodule; a third generator is added for safety on larger ones.
  const std::size_t n = elems.size();
  auto consider = [&](std::vector<Element> gens) {
    Submodule s = Submodule::span(m, gens);
    if (seen.insert(s.indices()).second) out.push_back(std::move(s));
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (m.rank() <= 2) {
        consider({elems[a], elems[b]});
      } else {
        for (std::size_t c = b; c < n; ++c) consider({elems[a], elems[b], elems[c]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Submodule& x, const Submodule& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.indices() < y.indices();
  });
  return out;
}

Check enumeration_pipeline(Residue m, std::size_t max_rank, const Policy& policy, const PipelineOptions& options) {
  const auto cands = enumerate_xmods(m, max_rank);
  Check root = Check::group("pipeline m=" + std::to_string(m) + " rank<=" + std::to_string(max_rank),
                            CheckClass::Theorem);
  std::size_t crossed = 0;
  for (const auto& c : cands) crossed += c.cls.crossed() ? 1 : 0;
  root.add(Check::note("enumeration", std::to_string(cands.size()) + " candidates, " + std::to_string(crossed) +
                                          " crossed modules"));
  Policy exact = policy;
  exact.mode = PolicyMode::Exhaustive;
  for (const auto& cand : cands) {
    if (!cand.cls.crossed()) continue;
    const CrossedModule& xm = cand.xm;
    Check inst = Check::group(xm.name, CheckClass::Theorem);
    if (options.consequences) inst.add(summarize("consequences", consequence_checks(xm, policy)));
    if (options.bar) inst.add(summarize("bar", verify_bar(build_bar_algebra(xm, options.bar_depth), policy)));
    if (options.roundtrip) {
      inst.add(summarize("round trip", roundtrip_check(xm, options.bar_depth, policy,
                                                       PerturbOptions{options.perturb_budget, policy.seed})));
    }
    std::vector<XModMorphism> morphisms{identity_morphism(xm)};
    if (options.ideals) {
      Check ideals = Check::group("crossed ideals", CheckClass::Theorem);
      std::size_t found = 0;
      for (const auto& rs : all_submodules(xm.R().carrier)) {
        for (const auto& ss : all_submodules(xm.S().carrier)) {
          SubXMod sub{xm, rs, ss};
          if (!validate_crossed_ideal(sub, exact).passed()) continue;
          ++found;
          const CrossedIdealMap c = inclusion_cim(sub);
          Check v = validate_crossed_ideal_map(c, policy);
          set_class(v, CheckClass::Theorem);
          ideals.add(std::move(v));
          ideals.add(image_crossed_ideal_check(c, policy));
          morphisms.push_back(c.morphism);
        }
      }
      inst.add(summarize("crossed ideals (" + std::to_string(found) + " found)", ideals));
    }
    if (options.bibar) {
      Check bi = Check::group("bisimplicial", CheckClass::Theorem);
      for (const auto& mor : morphisms) {
        bi.add(verify_bibar(build_bibar(mor, options.bibar_levels.first, options.bibar_levels.second), policy));
      }
      inst.add(summarize("bisimplicial (" + std::to_string(morphisms.size()) + " morphisms)", bi));
    }
    root.add(std::move(inst));
  }
  return root;
}

Check cim_fuzz(std::uint64_t seed, std::size_t count, const Policy& policy, FuzzStats* stats) {
  FuzzStats local;
  FuzzStats& st = stats ? *stats : local;
  st = FuzzStats{};
  std::mt19937_64 rng(seed);
  FuzzPool pool;
  Check root = Check::group("fuzz seed=" + std::to_string(seed), CheckClass::Theorem);
  std::vector<Check> instances;
  const std::size_t max_attempts = 200 * std::max<std::size_t>(count, 1);
  while (st.validated < count && st.attempts < max_attempts) {
    ++st.attempts;
    const bool mode_a = st.validated % 2 == 0;
    auto c = mode_a ? fuzz_inclusion(pool, rng) : fuzz_random_map(pool, rng);
    if (!c) continue;
    ++st.validated;
    ++(mode_a ? st.mode_a : st.mode_b);
    Check one = Check::group("instance", CheckClass::Theorem);
    Check v = validate_crossed_ideal_map(*c, policy);
    set_class(v, CheckClass::Theorem);
    one.add(std::move(v));
    Check image = image_crossed_ideal_check(*c, policy);
    if (!image.passed()) ++st.image_failures;
    one.add(std::move(image));
    instances.push_back(summarize("#" + std::to_string(st.validated) + (mode_a ? " (A) " : " (B) ") + c->name, one));
  }
  std::ostringstream note;
  note << st.validated << " validated of " << st.attempts << " attempts (" << st.mode_a << " inclusions, " << st.mode_b
       << " random maps); images failing: " << st.image_failures;
  root.add(Check::note("summary", note.str()));
  if (st.validated < count) {
    root.add(Check::fail("instance count", CheckClass::Theorem,
                         "only " + std::to_string(st.validated) + " of " + std::to_string(count) + " instances found"));
  }
  for (auto& i : instances) root.add(std::move(i));
  return root;
}

Check full_suite(std::uint64_t seed, const Policy& base) {
  Policy policy = base;
  policy.seed = seed;
  Check root = Check::group("suite", CheckClass::Theorem);

  Check fixtures = Check::group("fixtures", CheckClass::Theorem);
  const CrossedModule f1 = examples::f1();
  const CrossedModule f2 = examples::f2();
  fixtures.add(summarize("F1 crossed module", validate_crossed_module(f1, policy)));
  fixtures.add(summarize("F1 bar to level 4", verify_bar(build_bar_algebra(f1, 4), policy)));
  fixtures.add(summarize("F1 round trip", roundtrip_check(f1, 4, policy, PerturbOptions{kDefaultPerturbBudget, seed})));
  fixtures.add(summarize("F2 round trip", roundtrip_check(f2, 4, policy, PerturbOptions{kDefaultPerturbBudget, seed})));
  fixtures.add(summarize("F2 crossed ideal", validate_crossed_ideal(examples::f2_sub(), policy)));
  const CrossedIdealMap f2_cim = inclusion_cim(examples::f2_sub());
  fixtures.add(summarize("F2 inclusion crossed ideal map", validate_crossed_ideal_map(f2_cim, policy)));
  fixtures.add(summarize("F2 image", image_crossed_ideal_check(f2_cim, policy)));
  const XModMorphism inc = examples::f2_inclusion();
  fixtures.add(summarize("F2 bisimplicial (2,2)", verify_bibar(build_bibar(inc, 2, 2), policy)));
  root.add(std::move(fixtures));

  Check controls = Check::group("negative controls", CheckClass::Theorem);
  const CrossedModule f3 = examples::f3();
  controls.add(expected_failure("F3 fails CM2", validate_crossed_module(f3, policy), "CM2: eta(r).r' = rr'"));
  controls.add(expected_failure("F3 bar fails d_0 on R_2",
                                verify_bar(build_bar_algebra_unchecked(f3, 2), policy), "d_0 on R_2"));
  controls.add(expected_failure("CM1 failure breaks d_0 on B_1",
                                verify_bar(build_bar_algebra_unchecked(examples::cm1_failure(), 1), policy),
                                "d_0: B_1 -> B_0"));
  {
    const BarAlgebra src = build_bar_algebra(inc.source, 2);
    const BarAlgebra tgt = build_bar_algebra(inc.target, 2);
    controls.add(expected_failure("corrupted Phi breaks commutation",
                                  verify_bibar(build_bibar(inc, 2, 2, corrupted_phi_maps(inc, src, tgt, 2)), policy),
                                  "horizontal-vertical commutation"));
  }
  {
    const CrossedIdealMap counter = examples::image_ci4_counterexample();
    const Check image = image_crossed_ideal_check(counter, policy);
    if (const Check* ci4 = image.find_named("CI4: S.R' in R'"); ci4 && ci4->effective() == Status::Fail) {
      Check n = Check::note("image of a crossed ideal map need not satisfy CI4",
                            counter.name + ": " + ci4->first_failure()->detail);
      n.witness = ci4->first_failure()->witness;
      controls.add(std::move(n));
    } else {
      controls.add(Check::fail("image of a crossed ideal map need not satisfy CI4", CheckClass::Theorem,
                               "the counterexample's image unexpectedly passed CI4"));
    }
  }
  root.add(std::move(controls));

  root.add(enumeration_pipeline(2, 1, policy, PipelineOptions{}));
  root.add(cim_fuzz(seed, kDefaultFuzzCount, policy));
  return root;
}

}  // namespace xmodbar
