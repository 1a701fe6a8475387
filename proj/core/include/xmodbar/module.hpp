#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xmodbar {

using Residue = std::int64_t;

/// Largest set an enumeration-backed operation (image, kernel, span,
/// presentation) is willing to walk.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;

/// Non-negative representative of `value` modulo `modulus`.
constexpr Residue mod_reduce(Residue value, Residue modulus) {
  Residue r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// Coordinates of an element of a FiniteModule. Coordinate i is a residue
/// modulo the i-th invariant factor of the owning module; the module itself
/// is not stored, operations go through FiniteModule.
struct Element {
  std::vector<Residue> coeffs;

  Element() = default;
  explicit Element(std::vector<Residue> c) : coeffs(std::move(c)) {}
  Element(std::initializer_list<Residue> c) : coeffs(c) {}

  std::size_t size() const { return coeffs.size(); }
  Residue operator[](std::size_t i) const { return coeffs[i]; }
  Residue& operator[](std::size_t i) { return coeffs[i]; }
  bool is_zero() const;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

std::string to_string(const Element& x);

/// A finitely generated Z/m-module presented as a direct sum of cyclic
/// summands Z/d_1 + ... + Z/d_n with every d_i dividing m. Summands with
/// d_i = 1 are dropped on construction.
class FiniteModule {
 public:
  FiniteModule() = default;
  FiniteModule(Residue modulus, std::vector<Residue> orders);

  /// Positions of the summands a raw order list keeps after dropping
  /// the d_i = 1 entries.
  static std::vector<std::size_t> kept_summands(std::span<const Residue> orders);

  static FiniteModule direct_sum(std::span<const FiniteModule> parts);

  Residue modulus() const { return modulus_; }
  std::size_t rank() const { return orders_.size(); }
  Residue order(std::size_t i) const { return orders_[i]; }
  const std::vector<Residue>& orders() const { return orders_; }

  /// Number of elements. Throws UnsupportedScale when it does not fit in
  /// 62 bits.
  std::uint64_t size() const;

  Element zero() const { return Element(std::vector<Residue>(rank(), 0)); }
  Element generator(std::size_t i) const;
  std::vector<Element> generators() const;

  bool contains(const Element& x) const;
  /// Throws StructuralError unless `x` is a reduced element of this module.
  void require(const Element& x, const char* what) const;
  Element reduce(std::vector<Residue> coeffs) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(Residue k, const Element& a) const;
  void add_into(Element& acc, const Element& x) const;
  void add_scaled_into(Element& acc, Residue k, const Element& x) const;

  /// Mixed-radix rank of `x`; coordinate 0 is most significant, so index
  /// order coincides with lexicographic order of coefficient tuples.
  std::uint64_t index_of(const Element& x) const;
  Element element_at(std::uint64_t index) const;
  /// Steps `x` to the next element in index order; returns false after
  /// wrapping back to zero.
  bool advance(Element& x) const;

  friend bool operator==(const FiniteModule&, const FiniteModule&) = default;

 private:
  Residue modulus_ = 2;
  std::vector<Residue> orders_;
};

std::string describe(const FiniteModule& m);

/// An explicit, enumerated submodule of a FiniteModule (desk scale only).
class Submodule {
 public:
  /// `members` are indices into `ambient`; closure under addition is
  /// verified and a StructuralError is thrown when it fails.
  Submodule(FiniteModule ambient, std::vector<std::uint64_t> members);

  static Submodule span(const FiniteModule& ambient, std::span<const Element> generators);
  static Submodule zero(const FiniteModule& ambient);
  static Submodule whole(const FiniteModule& ambient);

  const FiniteModule& ambient() const { return ambient_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Element& x) const;
  bool contains_index(std::uint64_t index) const;
  const std::vector<std::uint64_t>& indices() const { return members_; }
  std::vector<Element> elements() const;

  friend bool operator==(const Submodule&, const Submodule&) = default;

 private:
  Submodule(FiniteModule ambient, std::vector<std::uint64_t> members, bool trusted);

  FiniteModule ambient_;
  std::vector<std::uint64_t> members_;
};

/// A k-linear map between FiniteModules given by generator images.
class ModuleHom {
 public:
  ModuleHom() = default;
  ModuleHom(FiniteModule domain, FiniteModule codomain, std::vector<Element> images);

  static ModuleHom zero(const FiniteModule& domain, const FiniteModule& codomain);
  static ModuleHom identity(const FiniteModule& m);

  const FiniteModule& domain() const { return domain_; }
  const FiniteModule& codomain() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(const Element& x) const;

  /// First generator i whose image is not killed by d_i, i.e. where the
  /// generator-image extension is not well defined.
  std::optional<std::size_t> order_violation() const;

  /// this ∘ first
  ModuleHom after(const ModuleHom& first) const;

  friend bool operator==(const ModuleHom&, const ModuleHom&) = default;

 private:
  FiniteModule domain_;
  FiniteModule codomain_;
  std::vector<Element> images_;
};

}  // namespace xmodbar
