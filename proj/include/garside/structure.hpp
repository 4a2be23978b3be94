#ifndef GARSIDE_STRUCTURE_HPP
#define GARSIDE_STRUCTURE_HPP

// Garside structures: the capability set every concrete monoid exposes, and
// the generic lattice algorithms written against it.
//
// Divisibility is always LEFT divisibility: a ≼ b iff b = a·c with c positive.

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace garside {

// Raised when an algorithm detects that one of its own invariants failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a configured resource cap (vertex count, ...) is exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class G>
concept GarsideStructure =
    std::equality_comparable<G> && std::copyable<G> &&
    std::equality_comparable<typename G::Simple> &&
    std::copyable<typename G::Simple> &&
    requires(const G& g, const typename G::Simple& s, int i,
             std::string_view token) {
      { g.strands() } -> std::convertible_to<int>;
      { g.name() } -> std::convertible_to<std::string>;
      { g.atom_count() } -> std::convertible_to<int>;
      { g.atom(i) } -> std::same_as<typename G::Simple>;
      { g.identity() } -> std::same_as<typename G::Simple>;
      { g.delta() } -> std::same_as<typename G::Simple>;
      { g.tau_order() } -> std::convertible_to<int>;
      { g.max_simple_length() } -> std::convertible_to<int>;
      { g.length(s) } -> std::convertible_to<int>;
      { g.left_divides(s, s) } -> std::convertible_to<bool>;
      { g.atom_divides(i, s) } -> std::convertible_to<bool>;
      { g.meet(s, s) } -> std::same_as<typename G::Simple>;
      { g.join(s, s) } -> std::same_as<typename G::Simple>;
      { g.product(s, s) } -> std::same_as<typename G::Simple>;
      { g.left_quotient(s, s) } -> std::same_as<typename G::Simple>;
      { g.right_complement(s) } -> std::same_as<typename G::Simple>;
      { g.left_complement(s) } -> std::same_as<typename G::Simple>;
      { g.tau(s, i) } -> std::same_as<typename G::Simple>;
      { g.simples() } -> std::same_as<const std::vector<typename G::Simple>&>;
      { g.hash(s) } -> std::convertible_to<std::size_t>;
      { g.atom_name(i) } -> std::convertible_to<std::string>;
      { g.parse_atom(token) } -> std::same_as<std::optional<int>>;
    };

// Product a·b is simple iff b ≼ ∂a.
template <GarsideStructure G>
bool product_is_simple(const G& g, const typename G::Simple& a,
                       const typename G::Simple& b) {
  return g.left_divides(b, g.right_complement(a));
}

// (a, b) is left-weighted iff ∂a ∧ b = 1.
template <GarsideStructure G>
bool is_left_weighted(const G& g, const typename G::Simple& a,
                      const typename G::Simple& b) {
  return g.meet(g.right_complement(a), b) == g.identity();
}

// Right divisibility for simples: x ≼_R s iff ∂s ≼ ∂x.
template <GarsideStructure G>
bool right_divides(const G& g, const typename G::Simple& x,
                   const typename G::Simple& s) {
  return g.left_divides(g.right_complement(s), g.right_complement(x));
}

// s·x⁻¹ for x ≼_R s, via ∂(s x⁻¹) = x·∂s.
template <GarsideStructure G>
typename G::Simple right_quotient(const G& g, const typename G::Simple& s,
                                  const typename G::Simple& x) {
  return g.left_complement(g.product(x, g.right_complement(s)));
}

// Greatest common left divisor by greedy atom absorption. This is the
// reference algorithm the structure-specific `meet` is checked against.
template <GarsideStructure G>
typename G::Simple generic_meet(const G& g, const typename G::Simple& a,
                                const typename G::Simple& b) {
  auto d = g.identity();
  auto ra = a;
  auto rb = b;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < g.atom_count(); ++i) {
      if (g.atom_divides(i, ra) && g.atom_divides(i, rb)) {
        const auto x = g.atom(i);
        d = g.product(d, x);
        ra = g.left_quotient(x, ra);
        rb = g.left_quotient(x, rb);
        grew = true;
        break;
      }
    }
  }
  return d;
}

// Greatest common right divisor, absorbing atoms from the right.
template <GarsideStructure G>
typename G::Simple generic_right_meet(const G& g, const typename G::Simple& a,
                                      const typename G::Simple& b) {
  auto d = g.identity();
  auto ra = a;
  auto rb = b;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < g.atom_count(); ++i) {
      const auto x = g.atom(i);
      if (right_divides(g, x, ra) && right_divides(g, x, rb)) {
        d = g.product(x, d);
        ra = right_quotient(g, ra, x);
        rb = right_quotient(g, rb, x);
        grew = true;
        break;
      }
    }
  }
  return d;
}

// Least common left multiple. ∂ is an order-reversing bijection from the
// left-divisibility lattice onto the right-divisibility lattice, so
// ∂(a ∨ b) is the right gcd of ∂a and ∂b.
template <GarsideStructure G>
typename G::Simple generic_join(const G& g, const typename G::Simple& a,
                                const typename G::Simple& b) {
  return g.left_complement(
      generic_right_meet(g, g.right_complement(a), g.right_complement(b)));
}

// a\b := a⁻¹(a ∨ b).
template <GarsideStructure G>
typename G::Simple join_complement(const G& g, const typename G::Simple& a,
                                   const typename G::Simple& b) {
  return g.left_quotient(a, g.join(a, b));
}

// Lexicographically least atom word of a simple element (atom indices,
// 0-based): repeatedly peel off the smallest atom dividing the remainder.
template <GarsideStructure G>
std::vector<int> simple_word(const G& g, typename G::Simple s) {
  std::vector<int> word;
  const auto one = g.identity();
  while (!(s == one)) {
    int i = 0;
    while (i < g.atom_count() && !g.atom_divides(i, s)) ++i;
    if (i == g.atom_count()) {
      throw InvariantViolation("non-trivial simple element with no atom prefix");
    }
    word.push_back(i);
    s = g.left_quotient(g.atom(i), s);
  }
  return word;
}

// Product of an atom word, which must stay simple.
template <GarsideStructure G>
typename G::Simple word_to_simple(const G& g, const std::vector<int>& atoms) {
  auto s = g.identity();
  for (int i : atoms) {
    if (i < 0 || i >= g.atom_count()) {
      throw std::invalid_argument("atom index out of range");
    }
    const auto x = g.atom(i);
    if (!product_is_simple(g, s, x)) {
      throw std::invalid_argument("atom word does not represent a simple element");
    }
    s = g.product(s, x);
  }
  return s;
}

// Canonical total order on simples: by length, then by canonical word.
template <GarsideStructure G>
std::strong_ordering canonical_compare(const G& g, const typename G::Simple& a,
                                       const typename G::Simple& b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = g.length(a) <=> g.length(b); c != 0) return c;
  return simple_word(g, a) <=> simple_word(g, b);
}

template <GarsideStructure G>
struct CanonicalLess {
  const G* g;
  bool operator()(const typename G::Simple& a,
                  const typename G::Simple& b) const {
    return canonical_compare(*g, a, b) < 0;
  }
};

// All simple elements, generated as the closure of 1 under right
// multiplication by atoms while the product stays a divisor of Δ.
// Independent of `simples()`; used to cross-check instances.
template <GarsideStructure G>
std::vector<typename G::Simple> simples_by_closure(const G& g) {
  std::vector<typename G::Simple> found{g.identity()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto s = found[head];
    for (int i = 0; i < g.atom_count(); ++i) {
      const auto x = g.atom(i);
      if (!product_is_simple(g, s, x)) continue;
      const auto t = g.product(s, x);
      bool seen = false;
      for (const auto& f : found) {
        if (f == t) {
          seen = true;
          break;
        }
      }
      if (!seen) found.push_back(t);
    }
  }
  return found;
}

}  // namespace garside

#endif  // GARSIDE_STRUCTURE_HPP
