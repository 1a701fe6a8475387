#include "xmodbar/enumerate.hpp"

#include <numeric>

#include "xmodbar/errors.hpp"

namespace xmodbar {

namespace {

/// Elements v of `target` with g v = 0.
std::vector<Element> killed_by(const FiniteModule& target, Residue g) {
  std::vector<Element> out;
  Element v = target.zero();
  do {
    bool ok = true;
    for (std::size_t l = 0; l < target.rank() && ok; ++l) ok = (g * v[l]) % target.order(l) == 0;
    if (ok) out.push_back(v);
  } while (target.advance(v));
  return out;
}

/// Calls `visit(choice)` for every tuple in the product of `options`, first
/// slot most significant. Stops early when visit returns false.
template <class Visit>
void odometer(const std::vector<std::vector<Element>>& options, Visit visit) {
  for (const auto& o : options) {
    if (o.empty()) return;
  }
  std::vector<std::size_t> pos(options.size(), 0);
  std::vector<Element> choice;
  for (const auto& o : options) choice.push_back(o.front());
  while (true) {
    if (!visit(static_cast<const std::vector<Element>&>(choice))) return;
    std::size_t p = options.size();
    bool carried = true;
    while (carried && p-- > 0) {
      if (++pos[p] == options[p].size()) {
        pos[p] = 0;
      } else {
        carried = false;
      }
      choice[p] = options[p][pos[p]];
    }
    if (carried) return;
  }
}

void shapes_rec(Residue m, std::size_t rank, std::vector<Residue>& cur, std::vector<std::vector<Residue>>& out) {
  if (cur.size() == rank) {
    out.push_back(cur);
    return;
  }
  for (Residue d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    shapes_rec(m, rank, cur, out);
    cur.pop_back();
  }
}

}  // namespace

void check_enumeration_bounds(Residue m, std::size_t rank) {
  if (m < 2 || m > 4) throw InputError("enumeration modulus must be 2, 3 or 4 (got " + std::to_string(m) + ")");
  if (rank > kMaxEnumerationRank) {
    throw InputError("enumeration rank must be at most " + std::to_string(kMaxEnumerationRank) + " (got " +
                     std::to_string(rank) + ")");
  }
}

std::vector<std::vector<Residue>> canonical_shapes(Residue m, std::size_t rank) {
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> cur;
  shapes_rec(m, rank, cur, out);
  return out;
}

std::vector<Algebra> enumerate_algebras(Residue m, std::size_t rank) {
  check_enumeration_bounds(m, rank);
  std::vector<Algebra> out;
  for (const auto& shape : canonical_shapes(m, rank)) {
    const FiniteModule carrier(m, shape);
    // Symmetric slots (i <= j); the tensor is mirrored below.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<Element>> options;
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i; j < rank; ++j) {
        slots.emplace_back(i, j);
        options.push_back(killed_by(carrier, std::gcd(shape[i], shape[j])));
      }
    }
    odometer(options, [&](const std::vector<Element>& choice) {
      BilinearMap::Tensor t(rank, std::vector<Element>(rank));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        t[slots[s].first][slots[s].second] = choice[s];
        t[slots[s].second][slots[s].first] = choice[s];
      }
      Algebra a(carrier, std::move(t));
      if (algebra_axioms_hold(a)) out.push_back(std::move(a));
      return true;
    });
  }
  return out;
}

std::vector<Algebra> enumerate_algebras_up_to(Residue m, std::size_t max_rank) {
  check_enumeration_bounds(m, max_rank);
  std::vector<Algebra> out;
  for (std::size_t r = 0; r <= max_rank; ++r) {
    auto part = enumerate_algebras(m, r);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<ModuleHom> enumerate_module_homs(const FiniteModule& from, const FiniteModule& to) {
  std::vector<std::vector<Element>> options;
  for (std::size_t i = 0; i < from.rank(); ++i) options.push_back(killed_by(to, from.order(i)));
  std::vector<ModuleHom> out;
  odometer(options, [&](const std::vector<Element>& choice) {
    out.emplace_back(from, to, choice);
    return true;
  });
  return out;
}

std::vector<AlgebraHom> enumerate_algebra_homs(const Algebra& from, const Algebra& to) {
  std::vector<AlgebraHom> out;
  for (const auto& f : enumerate_module_homs(from.carrier, to.carrier)) {
    AlgebraHom h(from, to, f.images());
    if (!hom_generator_violation(h)) out.push_back(std::move(h));
  }
  return out;
}

std::vector<BilinearMap::Tensor> enumerate_tensors(const FiniteModule& left, const FiniteModule& right,
                                                   const FiniteModule& target) {
  std::vector<std::vector<Element>> options;
  for (std::size_t i = 0; i < left.rank(); ++i) {
    for (std::size_t j = 0; j < right.rank(); ++j) {
      options.push_back(killed_by(target, std::gcd(left.order(i), right.order(j))));
    }
  }
  std::vector<BilinearMap::Tensor> out;
  const std::size_t nr = right.rank();
  odometer(options, [&](const std::vector<Element>& choice) {
    BilinearMap::Tensor t(left.rank(), std::vector<Element>(nr));
    for (std::size_t p = 0; p < choice.size(); ++p) t[p / nr][p % nr] = choice[p];
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

std::vector<BilinearMap::Tensor> enumerate_action_tensors(const Algebra& S, const Algebra& R) {
  return enumerate_tensors(S.carrier, R.carrier, R.carrier);
}

std::vector<XModCandidate> enumerate_xmods(const Algebra& R, const Algebra& S, const std::string& prefix) {
  std::vector<XModCandidate> out;
  const auto homs = enumerate_algebra_homs(R, S);
  const auto tensors = enumerate_action_tensors(S, R);
  for (std::size_t h = 0; h < homs.size(); ++h) {
    for (std::size_t t = 0; t < tensors.size(); ++t) {
      CrossedModule xm = make_crossed_module(prefix + ".eta" + std::to_string(h) + ".act" + std::to_string(t), homs[h],
                                             tensors[t]);
      XModClassification cls = classify(xm);
      out.push_back(XModCandidate{std::move(xm), cls});
    }
  }
  return out;
}

std::vector<CrossedModule> enumerate_crossed_modules(const Algebra& R, const Algebra& S, const std::string& prefix) {
  std::vector<CrossedModule> out;
  if (!algebra_axioms_hold(R) || !algebra_axioms_hold(S)) return out;
  const auto homs = enumerate_algebra_homs(R, S);
  const auto tensors = enumerate_action_tensors(S, R);
  AlgebraAction act(S, R, BilinearMap::zero(S.carrier, R.carrier, R.carrier).constants());
  for (std::size_t h = 0; h < homs.size(); ++h) {
    for (std::size_t t = 0; t < tensors.size(); ++t) {
      act.tensor = BilinearMap(S.carrier, R.carrier, R.carrier, tensors[t]);
      if (!crossed_on_generators(homs[h], act)) continue;
      out.push_back(make_crossed_module(prefix + ".eta" + std::to_string(h) + ".act" + std::to_string(t), homs[h],
                                        tensors[t]));
    }
  }
  return out;
}

std::vector<XModCandidate> enumerate_xmods(Residue m, std::size_t max_rank) {
  const auto algebras = enumerate_algebras_up_to(m, max_rank);
  std::vector<XModCandidate> out;
  for (std::size_t r = 0; r < algebras.size(); ++r) {
    for (std::size_t s = 0; s < algebras.size(); ++s) {
      auto part = enumerate_xmods(algebras[r], algebras[s],
                                  "m" + std::to_string(m) + ".R" + std::to_string(r) + ".S" + std::to_string(s));
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return out;
}

std::vector<XModMorphism> enumerate_morphisms(const CrossedModule& from, const CrossedModule& to) {
  std::vector<XModMorphism> out;
  const auto a1s = enumerate_algebra_homs(from.R(), to.R());
  const auto a2s = enumerate_algebra_homs(from.S(), to.S());
  for (std::size_t i = 0; i < a1s.size(); ++i) {
    for (std::size_t j = 0; j < a2s.size(); ++j) {
      XModMorphism m{"alpha1#" + std::to_string(i) + ".alpha2#" + std::to_string(j), from, to, a1s[i], a2s[j]};
      if (morphism_holds(m)) out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace xmodbar
