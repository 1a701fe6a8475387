#include "xmodbar/presentation.hpp"

#include <numeric>
#include <unordered_set>

#include "xmodbar/errors.hpp"

namespace xmodbar {

LatticeQuotient LatticeQuotient::diagonalize(Residue m, std::size_t n, std::vector<std::vector<Residue>> rows) {
  LatticeQuotient q;
  q.modulus = m;
  q.deltas.assign(n, m);
  q.v.assign(n, std::vector<Residue>(n, 0));
  q.v_inverse = q.v;
  for (std::size_t i = 0; i < n; ++i) q.v[i][i] = q.v_inverse[i][i] = 1;

  // Rows are reduced mod m throughout. That is harmless because mZ^n lies
  // in the lattice and stays there under unimodular column changes.
  for (auto& r : rows) {
    if (r.size() != n) throw StructuralError("relation row has wrong length");
    for (auto& e : r) e = mod_reduce(e, m);
  }
  auto col_sub = [&](std::size_t c, std::size_t t, Residue k) {  // col_c -= k col_t
    for (auto& r : rows) r[c] = mod_reduce(r[c] - k * r[t], m);
    for (std::size_t i = 0; i < n; ++i) q.v[i][c] = mod_reduce(q.v[i][c] - k * q.v[i][t], m);
    for (std::size_t i = 0; i < n; ++i) q.v_inverse[t][i] = mod_reduce(q.v_inverse[t][i] + k * q.v_inverse[c][i], m);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : rows) std::swap(r[a], r[b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(q.v[i][a], q.v[i][b]);
    std::swap(q.v_inverse[a], q.v_inverse[b]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    bool pivot_found = true;
    while (true) {
      std::size_t pr = 0, pc = 0;
      Residue best = 0;
      for (std::size_t r = t; r < rows.size(); ++r) {
        for (std::size_t c = t; c < n; ++c) {
          const Residue e = rows[r][c];
          if (e != 0 && (best == 0 || e < best)) {
            best = e;
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) {
        pivot_found = false;
        break;
      }
      std::swap(rows[t], rows[pr]);
      col_swap(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows.size(); ++r) {
        const Residue k = rows[r][t] / rows[t][t];
        if (k != 0) {
          for (std::size_t c = t; c < n; ++c) rows[r][c] = mod_reduce(rows[r][c] - k * rows[t][c], m);
        }
        if (rows[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        const Residue k = rows[t][c] / rows[t][t];
        if (k != 0) col_sub(c, t, k);
        if (rows[t][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot_found) break;  // remaining deltas stay m
    q.deltas[t] = std::gcd(rows[t][t], m);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (q.deltas[j] != 1) q.kept.push_back(j);
  }
  return q;
}

FiniteModule LatticeQuotient::module() const { return FiniteModule(modulus, deltas); }

Element LatticeQuotient::project(std::span<const Residue> x) const {
  Element y;
  y.coeffs.reserve(kept.size());
  for (std::size_t j : kept) {
    Residue acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = mod_reduce(acc + x[i] * v[i][j], modulus);
    y.coeffs.push_back(acc % deltas[j]);
  }
  return y;
}

std::vector<Residue> LatticeQuotient::lift(const Element& y) const {
  std::vector<Residue> x(v.size(), 0);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto& row = v_inverse[kept[k]];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_reduce(x[i] + y[k] * row[i], modulus);
  }
  return x;
}

SpanPresentation::SpanPresentation(const FiniteModule& ambient, std::span<const Element> generators)
    : ambient_(ambient), generators_(generators.begin(), generators.end()) {
  for (const auto& g : generators_) ambient_.require(g, "span generator");
  const std::size_t p = generators_.size();
  std::vector<std::pair<Element, std::vector<Residue>>> members{{ambient_.zero(), std::vector<Residue>(p, 0)}};
  combination_.emplace(0, std::vector<Residue>(p, 0));
  std::vector<std::vector<Residue>> relations;

  for (std::size_t t = 0; t < p; ++t) {
    const Element& g = generators_[t];
    Element cur = g;
    Residue c = 1;
    while (!combination_.count(ambient_.index_of(cur))) {
      cur = ambient_.add(cur, g);
      ++c;
    }
    std::vector<Residue> rel = combination_.at(ambient_.index_of(cur));
    for (auto& e : rel) e = -e;
    rel[t] += c;
    relations.push_back(std::move(rel));

    const std::size_t before = members.size();
    if (before * static_cast<std::size_t>(c) > kEnumerationLimit) throw UnsupportedScale("span exceeds enumeration bound");
    for (Residue k = 1; k < c; ++k) {
      for (std::size_t i = 0; i < before; ++i) {
        Element y = ambient_.add(members[i].first, ambient_.scale(k, g));
        std::vector<Residue> a = members[i].second;
        a[t] = k;
        combination_.emplace(ambient_.index_of(y), a);
        members.emplace_back(std::move(y), std::move(a));
      }
    }
  }

  lattice_ = LatticeQuotient::diagonalize(ambient_.modulus(), p, std::move(relations));
  module_ = lattice_.module();
  for (std::size_t j : lattice_.kept) {
    Element b = ambient_.zero();
    for (std::size_t t = 0; t < p; ++t) ambient_.add_scaled_into(b, lattice_.v_inverse[j][t], generators_[t]);
    basis_.push_back(std::move(b));
  }
}

bool SpanPresentation::contains(const Element& x) const {
  return ambient_.contains(x) && combination_.count(ambient_.index_of(x)) != 0;
}

Element SpanPresentation::coords(const Element& x) const {
  ambient_.require(x, "span element");
  auto it = combination_.find(ambient_.index_of(x));
  if (it == combination_.end()) throw PreconditionError(to_string(x) + " is not in the span");
  return lattice_.project(it->second);
}

Element SpanPresentation::embed(const Element& y) const {
  module_.require(y, "presented element");
  Element x = ambient_.zero();
  for (std::size_t j = 0; j < basis_.size(); ++j) ambient_.add_scaled_into(x, y[j], basis_[j]);
  return x;
}

std::vector<Element> generating_set(const Submodule& sub) {
  const FiniteModule& amb = sub.ambient();
  std::vector<Element> gens;
  std::unordered_set<std::uint64_t> span{0};
  std::vector<Element> span_elems{amb.zero()};
  for (std::uint64_t idx : sub.indices()) {
    if (span.count(idx)) continue;
    Element x = amb.element_at(idx);
    const std::size_t before = span_elems.size();
    Element shift = x;
    while (!span.count(amb.index_of(shift))) {
      for (std::size_t i = 0; i < before; ++i) {
        Element y = amb.add(span_elems[i], shift);
        span.insert(amb.index_of(y));
        span_elems.push_back(std::move(y));
      }
      shift = amb.add(shift, x);
    }
    gens.push_back(std::move(x));
  }
  return gens;
}

}  // namespace xmodbar
