#include "xmodbar/module.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "xmodbar/errors.hpp"

namespace xmodbar {

bool Element::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Residue c) { return c == 0; });
}

std::string to_string(const Element& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ',';
    out << x[i];
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// FiniteModule

FiniteModule::FiniteModule(Residue modulus, std::vector<Residue> orders) : modulus_(modulus) {
  if (modulus < 2) throw StructuralError("modulus must be at least 2, got " + std::to_string(modulus));
  for (Residue d : orders) {
    if (d < 1 || modulus % d != 0) {
      throw StructuralError("summand order " + std::to_string(d) + " does not divide modulus " +
                            std::to_string(modulus));
    }
    if (d != 1) orders_.push_back(d);
  }
}

std::vector<std::size_t> FiniteModule::kept_summands(std::span<const Residue> orders) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] != 1) kept.push_back(i);
  }
  return kept;
}

FiniteModule FiniteModule::direct_sum(std::span<const FiniteModule> parts) {
  if (parts.empty()) throw StructuralError("direct sum of no modules");
  std::vector<Residue> orders;
  for (const auto& p : parts) {
    if (p.modulus() != parts.front().modulus()) throw StructuralError("direct sum across different moduli");
    orders.insert(orders.end(), p.orders().begin(), p.orders().end());
  }
  return FiniteModule(parts.front().modulus(), std::move(orders));
}

std::uint64_t FiniteModule::size() const {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t n = 1;
  for (Residue d : orders_) {
    if (n > cap / static_cast<std::uint64_t>(d)) throw UnsupportedScale("module " + describe(*this) + " is too large");
    n *= static_cast<std::uint64_t>(d);
  }
  return n;
}

Element FiniteModule::generator(std::size_t i) const {
  if (i >= rank()) throw StructuralError("generator index out of range");
  Element e = zero();
  e[i] = 1;
  return e;
}

std::vector<Element> FiniteModule::generators() const {
  std::vector<Element> gens;
  gens.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(generator(i));
  return gens;
}

bool FiniteModule::contains(const Element& x) const {
  if (x.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] < 0 || x[i] >= orders_[i]) return false;
  }
  return true;
}

void FiniteModule::require(const Element& x, const char* what) const {
  if (!contains(x)) {
    throw StructuralError(std::string(what) + ": " + to_string(x) + " is not an element of " + describe(*this));
  }
}

Element FiniteModule::reduce(std::vector<Residue> coeffs) const {
  if (coeffs.size() != rank()) throw StructuralError("coefficient vector has wrong length for " + describe(*this));
  for (std::size_t i = 0; i < rank(); ++i) coeffs[i] = mod_reduce(coeffs[i], orders_[i]);
  return Element(std::move(coeffs));
}

Element FiniteModule::add(const Element& a, const Element& b) const {
  Element r = a;
  add_into(r, b);
  return r;
}

Element FiniteModule::sub(const Element& a, const Element& b) const {
  Element r = a;
  add_scaled_into(r, -1, b);
  return r;
}

Element FiniteModule::neg(const Element& a) const { return scale(-1, a); }

Element FiniteModule::scale(Residue k, const Element& a) const {
  Element r = zero();
  add_scaled_into(r, k, a);
  return r;
}

void FiniteModule::add_into(Element& acc, const Element& x) const {
  for (std::size_t i = 0; i < rank(); ++i) {
    Residue v = acc[i] + x[i];
    if (v >= orders_[i]) v -= orders_[i];
    acc[i] = v;
  }
}

void FiniteModule::add_scaled_into(Element& acc, Residue k, const Element& x) const {
  for (std::size_t i = 0; i < rank(); ++i) acc[i] = mod_reduce(acc[i] + k * x[i], orders_[i]);
}

std::uint64_t FiniteModule::index_of(const Element& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

Element FiniteModule::element_at(std::uint64_t index) const {
  Element x = zero();
  for (std::size_t i = rank(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>(orders_[i]);
    x[i] = static_cast<Residue>(index % d);
    index /= d;
  }
  return x;
}

bool FiniteModule::advance(Element& x) const {
  for (std::size_t i = rank(); i-- > 0;) {
    if (++x[i] < orders_[i]) return true;
    x[i] = 0;
  }
  return false;
}

std::string describe(const FiniteModule& m) {
  std::ostringstream out;
  if (m.rank() == 0) {
    out << "0";
  } else {
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if (i) out << " + ";
      out << "Z/" << m.order(i);
    }
  }
  out << " over Z/" << m.modulus();
  return out.str();
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(FiniteModule ambient, std::vector<std::uint64_t> members, bool)
    : ambient_(std::move(ambient)), members_(std::move(members)) {}

Submodule::Submodule(FiniteModule ambient, std::vector<std::uint64_t> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const std::uint64_t n = ambient_.size();
  if (members_.empty() || members_.front() != 0) throw StructuralError("submodule must contain zero");
  if (members_.back() >= n) throw StructuralError("submodule member index out of range");
  if (members_.size() > kEnumerationLimit) throw UnsupportedScale("submodule too large to enumerate");
  // Grow the subgroup generated so far one cyclic piece at a time; a subset
  // closed under addition is exactly one where this never leaves the set.
  std::vector<Element> group{ambient_.zero()};
  std::unordered_set<std::uint64_t> in_group{0};
  for (std::uint64_t idx : members_) {
    if (in_group.count(idx)) continue;
    const Element x = ambient_.element_at(idx);
    std::vector<Element> grown;
    Element shift = x;
    while (!in_group.count(ambient_.index_of(shift))) {
      for (const auto& c : group) {
        Element y = ambient_.add(c, shift);
        if (!contains(y)) {
          throw StructuralError("subset is not closed under addition: " + to_string(c) + " + " + to_string(shift));
        }
        grown.push_back(std::move(y));
      }
      shift = ambient_.add(shift, x);
    }
    for (auto& y : grown) {
      in_group.insert(ambient_.index_of(y));
      group.push_back(std::move(y));
    }
  }
  if (group.size() != members_.size()) throw StructuralError("subset is not closed under addition");
}

Submodule Submodule::span(const FiniteModule& ambient, std::span<const Element> generators) {
  for (const auto& g : generators) ambient.require(g, "span generator");
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<Element> frontier{ambient.zero()};
  std::vector<std::uint64_t> members{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Element y = ambient.add(x, g);
        const std::uint64_t idx = ambient.index_of(y);
        if (seen.insert(idx).second) {
          if (seen.size() > kEnumerationLimit) throw UnsupportedScale("span exceeds enumeration bound");
          members.push_back(idx);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return Submodule(ambient, std::move(members), true);
}

Submodule Submodule::zero(const FiniteModule& ambient) { return Submodule(ambient, {0}, true); }

Submodule Submodule::whole(const FiniteModule& ambient) {
  const std::uint64_t n = ambient.size();
  if (n > kEnumerationLimit) throw UnsupportedScale("module too large to enumerate: " + describe(ambient));
  std::vector<std::uint64_t> all(n);
  for (std::uint64_t i = 0; i < n; ++i) all[i] = i;
  return Submodule(ambient, std::move(all), true);
}

bool Submodule::contains_index(std::uint64_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

bool Submodule::contains(const Element& x) const {
  return ambient_.contains(x) && contains_index(ambient_.index_of(x));
}

std::vector<Element> Submodule::elements() const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (auto idx : members_) out.push_back(ambient_.element_at(idx));
  return out;
}

// ---------------------------------------------------------------------------
// ModuleHom

ModuleHom::ModuleHom(FiniteModule domain, FiniteModule codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (domain_.modulus() != codomain_.modulus()) throw StructuralError("hom between modules over different rings");
  if (images_.size() != domain_.rank()) {
    throw StructuralError("hom needs " + std::to_string(domain_.rank()) + " generator images, got " +
                          std::to_string(images_.size()));
  }
  for (const auto& img : images_) codomain_.require(img, "generator image");
}

ModuleHom ModuleHom::zero(const FiniteModule& domain, const FiniteModule& codomain) {
  return ModuleHom(domain, codomain, std::vector<Element>(domain.rank(), codomain.zero()));
}

ModuleHom ModuleHom::identity(const FiniteModule& m) { return ModuleHom(m, m, m.generators()); }

Element ModuleHom::operator()(const Element& x) const {
  domain_.require(x, "hom argument");
  Element out = codomain_.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) codomain_.add_scaled_into(out, x[i], images_[i]);
  }
  return out;
}

std::optional<std::size_t> ModuleHom::order_violation() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!codomain_.scale(domain_.order(i), images_[i]).is_zero()) return i;
  }
  return std::nullopt;
}

ModuleHom ModuleHom::after(const ModuleHom& first) const {
  if (!(first.codomain() == domain_)) throw StructuralError("composition of non-composable homs");
  std::vector<Element> imgs;
  imgs.reserve(first.images().size());
  for (const auto& img : first.images()) imgs.push_back((*this)(img));
  return ModuleHom(first.domain(), codomain_, std::move(imgs));
}

}  // namespace xmodbar
