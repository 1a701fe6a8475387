#pragma once

// Brute-force reference implementations and hand-rolled generators. Nothing
// here calls into the library beyond the plain data types, so agreement with
// the library is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "xmodbar/algebra.hpp"
#include "xmodbar/module.hpp"

namespace oracle {

using xmodbar::Element;
using xmodbar::FiniteModule;
using xmodbar::Residue;

/// Every element in lexicographic order.
inline std::vector<Element> all_elements(const std::vector<Residue>& orders) {
  std::vector<Element> out{Element(std::vector<Residue>(orders.size(), 0))};
  for (std::size_t pos = orders.size(); pos-- > 0;) {
    std::vector<Element> next;
    for (const auto& e : out) {
      for (Residue v = 0; v < orders[pos]; ++v) {
        Element f = e;
        f[pos] = v;
        next.push_back(f);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Element add(const std::vector<Residue>& orders, const Element& a, const Element& b) {
  Element c = a;
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
  return c;
}

inline Element scale(const std::vector<Residue>& orders, Residue k, const Element& a) {
  Element c = a;
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] = ((k % orders[i]) * a[i] % orders[i] + orders[i]) % orders[i];
  return c;
}

/// sum_ij x_i y_j t[i][j], reduced coordinatewise.
inline Element bilinear(const std::vector<Residue>& target, const std::vector<std::vector<Element>>& t,
                        const Element& x, const Element& y) {
  Element acc(std::vector<Residue>(target.size(), 0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc = add(target, acc, scale(target, x[i] * y[j], t[i][j]));
    }
  }
  return acc;
}

/// Closure of `gens` under addition (all Z-combinations) as a set.
inline std::set<Element> span(const std::vector<Residue>& orders, const std::vector<Element>& gens) {
  std::set<Element> seen{Element(std::vector<Residue>(orders.size(), 0))};
  std::vector<Element> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Element f = add(orders, e, g);
        if (seen.insert(f).second) next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Commutativity and associativity over every element triple.
inline bool algebra_axioms(const std::vector<Residue>& orders, const std::vector<std::vector<Element>>& t) {
  const auto elems = all_elements(orders);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      const Element xy = bilinear(orders, t, x, y);
      if (xy != bilinear(orders, t, y, x)) return false;
      for (const auto& z : elems) {
        if (bilinear(orders, t, xy, z) != bilinear(orders, t, x, bilinear(orders, t, y, z))) return false;
      }
    }
  }
  return true;
}

/// Every d_i t[i][j] and d_j t[i][j] vanishes in the target.
inline bool torsion_ok(const std::vector<Residue>& left, const std::vector<Residue>& right,
                       const std::vector<Residue>& target, const std::vector<std::vector<Element>>& t) {
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      for (std::size_t l = 0; l < target.size(); ++l) {
        if ((left[i] * t[i][j][l]) % target[l] != 0 || (right[j] * t[i][j][l]) % target[l] != 0) return false;
      }
    }
  }
  return true;
}

/// Seeded generator of small random objects for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  /// Orders dividing m, rank in [0, max_rank].
  std::vector<Residue> orders(Residue m, std::size_t max_rank) {
    std::vector<Residue> divisors;
    for (Residue d = 2; d <= m; ++d) {
      if (m % d == 0) divisors.push_back(d);
    }
    std::vector<Residue> out(below(max_rank + 1));
    for (auto& d : out) d = divisors[below(divisors.size())];
    return out;
  }

  Element element(const std::vector<Residue>& orders) {
    Element e(std::vector<Residue>(orders.size(), 0));
    for (std::size_t i = 0; i < orders.size(); ++i) e[i] = static_cast<Residue>(below(orders[i]));
    return e;
  }

  /// Random torsion-compatible tensor left x right -> target.
  std::vector<std::vector<Element>> tensor(const std::vector<Residue>& left, const std::vector<Residue>& right,
                                           const std::vector<Residue>& target) {
    std::vector<std::vector<Element>> t(left.size(), std::vector<Element>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        Element e = element(target);
        for (std::size_t l = 0; l < target.size(); ++l) {
          // Scale into the subgroup killed by gcd(d_i, e_j).
          const Residue g = std::gcd(std::gcd(left[i], right[j]), target[l]);
          e[l] = (e[l] % g) * (target[l] / g);
        }
        t[i][j] = e;
      }
    }
    return t;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
