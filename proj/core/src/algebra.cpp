#include "xmodbar/algebra.hpp"

#include <numeric>
#include <unordered_set>

#include "xmodbar/errors.hpp"
#include "xmodbar/sweep.hpp"

namespace xmodbar {

namespace {

std::string gen_label(const char* prefix, std::size_t i) { return std::string(prefix) + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------------------
// BilinearMap

BilinearMap::BilinearMap(FiniteModule left, FiniteModule right, FiniteModule target, Tensor constants)
    : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)), c_(std::move(constants)) {
  if (left_.modulus() != right_.modulus() || left_.modulus() != target_.modulus()) {
    throw StructuralError("bilinear map across different moduli");
  }
  if (c_.size() != left_.rank()) {
    throw StructuralError("tensor has " + std::to_string(c_.size()) + " rows, expected " + std::to_string(left_.rank()));
  }
  for (auto& row : c_) {
    if (row.size() != right_.rank()) {
      throw StructuralError("tensor row has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(right_.rank()));
    }
    for (auto& e : row) e = target_.reduce(std::move(e.coeffs));
  }
}

BilinearMap BilinearMap::zero(const FiniteModule& left, const FiniteModule& right, const FiniteModule& target) {
  return BilinearMap(left, right, target, Tensor(left.rank(), std::vector<Element>(right.rank(), target.zero())));
}

Element BilinearMap::operator()(const Element& x, const Element& y) const {
  left_.require(x, "left argument");
  right_.require(y, "right argument");
  Element out = target_.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      target_.add_scaled_into(out, x[i] * y[j], c_[i][j]);
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> BilinearMap::torsion_violation() const {
  for (std::size_t i = 0; i < left_.rank(); ++i) {
    for (std::size_t j = 0; j < right_.rank(); ++j) {
      for (std::size_t l = 0; l < target_.rank(); ++l) {
        const Residue c = c_[i][j][l];
        const Residue f = target_.order(l);
        if ((left_.order(i) * c) % f != 0 || (right_.order(j) * c) % f != 0) return std::array{i, j, l};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Algebra, AlgebraHom, AlgebraAction

Algebra::Algebra(FiniteModule c, BilinearMap::Tensor constants) : carrier(c), mul(c, c, c, std::move(constants)) {}

Algebra Algebra::zero_algebra(Residue modulus) { return trivial(FiniteModule(modulus, {})); }

Algebra Algebra::trivial(const FiniteModule& carrier) {
  Algebra a;
  a.carrier = carrier;
  a.mul = BilinearMap::zero(carrier, carrier, carrier);
  return a;
}

AlgebraHom::AlgebraHom(Algebra d, Algebra c, std::vector<Element> images)
    : domain(std::move(d)), codomain(std::move(c)), map(domain.carrier, codomain.carrier, std::move(images)) {}

AlgebraAction::AlgebraAction(Algebra s, Algebra r, BilinearMap::Tensor constants)
    : actor(std::move(s)), acted(std::move(r)), tensor(actor.carrier, acted.carrier, acted.carrier, std::move(constants)) {}

// ---------------------------------------------------------------------------
// Validation

Check validate_algebra(const Algebra& a, std::string name) {
  Check group = Check::group(std::move(name));
  const FiniteModule& m = a.carrier;
  const std::size_t n = m.rank();
  const auto gens = m.generators();

  if (!(a.mul.left() == m && a.mul.right() == m && a.mul.target() == m)) {
    group.add(Check::fail("shape", CheckClass::Structural, "multiplication tensor does not live on the carrier"));
    return group;
  }

  std::optional<Witness> torsion;
  std::string torsion_detail;
  if (auto v = a.mul.torsion_violation()) {
    const auto [i, j, l] = *v;
    torsion = Witness{{gen_label("g", i), gen_label("g", j), gen_label("g", l)}, {gens[i], gens[j], gens[l]}};
    torsion_detail = "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(l) +
                     "] = " + std::to_string(a.mul.entry(i, j)[l]) + " is not killed by the orders " +
                     std::to_string(m.order(i)) + ", " + std::to_string(m.order(j)) + " modulo " +
                     std::to_string(m.order(l));
  }
  group.add(exact_check("torsion compatibility", CheckClass::Structural, n * n * n, torsion, torsion_detail));

  std::optional<Witness> comm;
  std::string comm_detail;
  for (std::size_t i = 0; i < n && !comm; ++i) {
    for (std::size_t j = 0; j < n && !comm; ++j) {
      if (!(a.mul.entry(i, j) == a.mul.entry(j, i))) {
        comm = Witness{{gen_label("g", i), gen_label("g", j)}, {gens[i], gens[j]}};
        comm_detail = "g_i g_j = " + to_string(a.mul.entry(i, j)) + " but g_j g_i = " + to_string(a.mul.entry(j, i));
      }
    }
  }
  group.add(exact_check("commutativity", CheckClass::Axiom, n * n, comm, comm_detail));

  std::optional<Witness> assoc;
  std::string assoc_detail;
  for (std::size_t i = 0; i < n && !assoc; ++i) {
    for (std::size_t j = 0; j < n && !assoc; ++j) {
      for (std::size_t k = 0; k < n && !assoc; ++k) {
        const Element lhs = a.mul(a.mul.entry(i, j), gens[k]);
        const Element rhs = a.mul(gens[i], a.mul.entry(j, k));
        if (!(lhs == rhs)) {
          assoc = Witness{{gen_label("g", i), gen_label("g", j), gen_label("g", k)}, {gens[i], gens[j], gens[k]}};
          assoc_detail = "(g_i g_j) g_k = " + to_string(lhs) + " but g_i (g_j g_k) = " + to_string(rhs);
        }
      }
    }
  }
  group.add(exact_check("associativity", CheckClass::Axiom, n * n * n, assoc, assoc_detail));

  if (m.size() <= kEnumerationLimit) {
    auto unit = find_unit(a);
    group.add(Check::note("unit", unit ? "unital with unit " + to_string(*unit) : "no unit (non-unital algebra)"));
  }
  return group;
}

bool algebra_axioms_hold(const Algebra& a) {
  if (a.mul.torsion_violation()) return false;
  const std::size_t n = a.carrier.rank();
  const auto gens = a.carrier.generators();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(a.mul.entry(i, j) == a.mul.entry(j, i))) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (!(a.mul(a.mul.entry(i, j), gens[k]) == a.mul(gens[i], a.mul.entry(j, k)))) return false;
      }
    }
  }
  return true;
}

std::optional<Element> find_unit(const Algebra& a) {
  const auto gens = a.carrier.generators();
  if (gens.empty()) return std::nullopt;
  Element e = a.carrier.zero();
  do {
    bool unit = true;
    for (const auto& g : gens) {
      if (!(a.mul(e, g) == g) || !(a.mul(g, e) == g)) {
        unit = false;
        break;
      }
    }
    if (unit) return e;
  } while (a.carrier.advance(e));
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> hom_generator_violation(const AlgebraHom& f) {
  const std::size_t n = f.domain.carrier.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element lhs = f(f.domain.mul.entry(i, j));
      const Element rhs = f.codomain.mul(f.map.images()[i], f.map.images()[j]);
      if (!(lhs == rhs)) return std::array{i, j};
    }
  }
  return std::nullopt;
}

Check validate_hom(const AlgebraHom& f, const Policy& policy, std::string name) {
  Check group = Check::group(std::move(name));
  if (auto bad = f.map.order_violation()) {
    const Element g = f.domain.carrier.generator(*bad);
    group.add(Check::fail("order compatibility", CheckClass::Structural,
                          "generator of order " + std::to_string(f.domain.carrier.order(*bad)) + " maps to " +
                              to_string(f.map.images()[*bad]),
                          Witness{{"x"}, {g}}));
    return group;
  }
  group.add(Check::pass("order compatibility", CheckClass::Structural));
  group.add(Check::pass("additivity and k-linearity", CheckClass::Structural, "by generator-image extension"));
  const FiniteModule doms[] = {f.domain.carrier, f.domain.carrier};
  group.add(sweep_check(
      "multiplicativity", CheckClass::Axiom, doms, {"x", "y"}, policy,
      [&](const std::vector<Element>& t) { return f(f.domain.mul(t[0], t[1])) == f.codomain.mul(f(t[0]), f(t[1])); },
      [&](const std::vector<Element>& t) {
        return "f(xy) = " + to_string(f(f.domain.mul(t[0], t[1]))) + " but f(x)f(y) = " +
               to_string(f.codomain.mul(f(t[0]), f(t[1])));
      }));
  return group;
}

// ---------------------------------------------------------------------------
// Images, kernels, ideals

Submodule image(const ModuleHom& f) { return Submodule::span(f.codomain(), f.images()); }

Submodule kernel(const ModuleHom& f) {
  const FiniteModule& d = f.domain();
  if (d.size() > kEnumerationLimit) throw UnsupportedScale("kernel of a map out of " + describe(d));
  Element x = d.zero();
  std::vector<std::uint64_t> members;
  do {
    if (f(x).is_zero()) members.push_back(d.index_of(x));
  } while (d.advance(x));
  return Submodule(d, std::move(members));
}

Check is_ideal(const Algebra& a, const Submodule& ideal, const Policy&, std::string name, CheckClass klass) {
  Check group = Check::group(std::move(name), klass);
  if (!(ideal.ambient() == a.carrier)) {
    group.add(Check::fail("containment", CheckClass::Structural, "submodule lives in a different module"));
    return group;
  }
  group.add(Check::pass("additive closure", klass, "closed under addition and residues by construction"));
  // a -> a.x is linear, so generators of the algebra suffice on the left.
  const auto gens = a.carrier.generators();
  const auto members = ideal.elements();
  std::optional<Witness> w;
  std::string detail;
  for (std::size_t i = 0; i < gens.size() && !w; ++i) {
    for (const auto& x : members) {
      const Element p = a.mul(gens[i], x);
      if (!ideal.contains(p)) {
        w = Witness{{"a", "x"}, {gens[i], x}};
        detail = "a x = " + to_string(p) + " leaves the submodule";
        break;
      }
    }
  }
  Check absorb = exact_check("absorption", klass, gens.size() * members.size(), w, detail);
  absorb.coverage = "generators x members " + std::to_string(gens.size() * members.size()) + ", exact by linearity";
  group.add(std::move(absorb));
  return group;
}

bool closed_under_product(const Algebra& a, const Submodule& sub) {
  const auto gens = generating_set(sub);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      if (!sub.contains(a.mul(x, y))) return false;
    }
  }
  return true;
}

Element QuotientAlgebra::lift(const Element& y) const {
  return projection.domain.carrier.reduce(lattice.lift(y));
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Submodule& ideal) {
  if (!(ideal.ambient() == a.carrier)) throw StructuralError("ideal lives in a different module");
  const auto gens = generating_set(ideal);
  for (const auto& g : a.carrier.generators()) {
    for (const auto& x : gens) {
      if (!ideal.contains(a.mul(g, x))) throw PreconditionError("quotient by a submodule that is not an ideal");
    }
  }
  std::vector<std::vector<Residue>> rows;
  for (const auto& x : gens) rows.push_back(x.coeffs);
  for (std::size_t i = 0; i < a.carrier.rank(); ++i) {
    std::vector<Residue> r(a.carrier.rank(), 0);
    r[i] = a.carrier.order(i);
    rows.push_back(std::move(r));
  }
  QuotientAlgebra q;
  q.lattice = LatticeQuotient::diagonalize(a.carrier.modulus(), a.carrier.rank(), std::move(rows));
  const FiniteModule qm = q.lattice.module();
  std::vector<Element> lifts;
  for (const auto& e : qm.generators()) lifts.push_back(a.carrier.reduce(q.lattice.lift(e)));
  BilinearMap::Tensor t(qm.rank(), std::vector<Element>(qm.rank()));
  for (std::size_t i = 0; i < qm.rank(); ++i) {
    for (std::size_t j = 0; j < qm.rank(); ++j) t[i][j] = q.lattice.project(a.mul(lifts[i], lifts[j]).coeffs);
  }
  q.algebra = Algebra(qm, std::move(t));
  std::vector<Element> images;
  for (const auto& g : a.carrier.generators()) images.push_back(q.lattice.project(g.coeffs));
  q.projection = AlgebraHom(a, q.algebra, std::move(images));
  return q;
}

Subalgebra subalgebra(const Algebra& a, const Submodule& sub) {
  if (!(sub.ambient() == a.carrier)) throw StructuralError("submodule lives in a different module");
  const auto gens = generating_set(sub);
  SpanPresentation pres(a.carrier, gens);
  const auto& basis = pres.basis();
  BilinearMap::Tensor t(basis.size(), std::vector<Element>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element p = a.mul(basis[i], basis[j]);
      if (!pres.contains(p)) throw PreconditionError("submodule is not closed under the product");
      t[i][j] = pres.coords(p);
    }
  }
  Algebra sa(pres.module(), std::move(t));
  AlgebraHom inc(sa, a, basis);
  return Subalgebra{std::move(sa), std::move(inc), std::move(pres)};
}

// ---------------------------------------------------------------------------
// Semidirect products

std::optional<std::string> action_generator_violation(const AlgebraAction& act) {
  if (auto v = act.tensor.torsion_violation()) {
    return "action tensor entry (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," +
           std::to_string((*v)[2]) + ") is not torsion compatible";
  }
  const auto sg = act.actor.carrier.generators();
  const auto rg = act.acted.carrier.generators();
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < rg.size(); ++j) {
      for (std::size_t k = 0; k < rg.size(); ++k) {
        const Element a = act(sg[i], act.acted.mul.entry(j, k));
        const Element b = act.acted.mul(act.tensor.entry(i, j), rg[k]);
        const Element c = act.acted.mul(rg[j], act.tensor.entry(i, k));
        if (!(a == b) || !(a == c)) return "axiom 4 fails at generators s" + std::to_string(i) + ", r" + std::to_string(j) + ", r" + std::to_string(k);
      }
    }
  }
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < sg.size(); ++j) {
      for (std::size_t k = 0; k < rg.size(); ++k) {
        if (!(act(act.actor.mul.entry(i, j), rg[k]) == act(sg[i], act.tensor.entry(j, k)))) {
          return "axiom 5 fails at generators s" + std::to_string(i) + ", s" + std::to_string(j) + ", r" + std::to_string(k);
        }
      }
    }
  }
  return std::nullopt;
}

Algebra semidirect_product_unchecked(const AlgebraAction& act) {
  const FiniteModule& s = act.actor.carrier;
  const FiniteModule& r = act.acted.carrier;
  const FiniteModule parts[] = {s, r};
  const FiniteModule sum = FiniteModule::direct_sum(parts);
  const std::size_t ns = s.rank(), nr = r.rank(), n = ns + nr;
  auto embed = [&](const Element& x, std::size_t offset) {
    Element e = sum.zero();
    for (std::size_t i = 0; i < x.size(); ++i) e[offset + i] = x[i];
    return e;
  };
  BilinearMap::Tensor t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < ns && j < ns) {
        t[i][j] = embed(act.actor.mul.entry(i, j), 0);
      } else if (i < ns) {
        t[i][j] = embed(act.tensor.entry(i, j - ns), ns);
      } else if (j < ns) {
        t[i][j] = embed(act.tensor.entry(j, i - ns), ns);
      } else {
        t[i][j] = embed(act.acted.mul.entry(i - ns, j - ns), ns);
      }
    }
  }
  return Algebra(sum, std::move(t));
}

Algebra semidirect_product(const AlgebraAction& act) {
  if (!algebra_axioms_hold(act.actor) || !algebra_axioms_hold(act.acted)) {
    throw PreconditionError("semidirect product of invalid algebras");
  }
  if (auto why = action_generator_violation(act)) throw PreconditionError("semidirect product: " + *why);
  return semidirect_product_unchecked(act);
}

}  // namespace xmodbar
