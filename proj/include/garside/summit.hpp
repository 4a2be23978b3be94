#ifndef GARSIDE_SUMMIT_HPP
#define GARSIDE_SUMMIT_HPP

// Summit classes: conjugates with maximal inf and minimal sup.

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "garside/element.hpp"
#include "garside/structure.hpp"

namespace garside {

template <GarsideStructure G>
struct SummitProfile {
  int summit_inf = 0;
  int summit_sup = 0;
  Element<G> representative;
  // witness⁻¹ · input · witness == representative
  Element<G> witness;
};

// Conjugation by τ^{-p}(s_1): Δ^p s_1 s_2 ··· s_k ↦ Δ^p s_2 ··· s_k τ^{-p}(s_1).
// Returns the conjugate and the (positive) conjugator.
template <GarsideStructure G>
std::pair<Element<G>, typename G::Simple> cycling(const Element<G>& v) {
  const G& g = v.structure();
  if (v.is_delta_power()) return {v, g.identity()};
  const auto x = g.tau(v.factors().front(), -v.inf());
  std::vector<typename G::Simple> seq(v.factors().begin() + 1, v.factors().end());
  seq.push_back(x);
  return {Element<G>::from_sequence(g, v.inf(), seq), x};
}

// Conjugation by s_k⁻¹: Δ^p s_1 ··· s_k ↦ Δ^p τ^p(s_k) s_1 ··· s_{k-1}.
// Returns the conjugate and s_k; the conjugator is s_k⁻¹.
template <GarsideStructure G>
std::pair<Element<G>, typename G::Simple> decycling(const Element<G>& v) {
  const G& g = v.structure();
  if (v.is_delta_power()) return {v, g.identity()};
  const auto last = v.factors().back();
  std::vector<typename G::Simple> seq{g.tau(last, v.inf())};
  seq.insert(seq.end(), v.factors().begin(), v.factors().end() - 1);
  return {Element<G>::from_sequence(g, v.inf(), seq), last};
}

// Iterated cycling raises inf to its summit value and iterated decycling
// then lowers sup, neither undoing the other. Each phase stops once the
// (deterministic) trajectory revisits an element without improving.
template <GarsideStructure G>
SummitProfile<G> summit_representative(const Element<G>& a) {
  const G& g = a.structure();
  Element<G> current = a;
  Element<G> witness(g);
  using Seen = std::unordered_set<Element<G>, ElementHash<G>>;

  Seen seen{current};
  while (!current.is_delta_power()) {
    auto [next, x] = cycling(current);
    witness = witness * Element<G>::from_simple(g, x);
    const bool improved = next.inf() > current.inf();
    current = std::move(next);
    if (improved) {
      seen = Seen{current};
    } else if (!seen.insert(current).second) {
      break;
    }
  }

  seen = Seen{current};
  while (!current.is_delta_power()) {
    auto [next, last] = decycling(current);
    witness = witness * inverse(Element<G>::from_simple(g, last));
    const bool improved = next.sup() < current.sup();
    current = std::move(next);
    if (improved) {
      seen = Seen{current};
    } else if (!seen.insert(current).second) {
      break;
    }
  }

  return SummitProfile<G>{current.inf(), current.sup(), current, witness};
}

template <GarsideStructure G>
bool in_summit(const Element<G>& v, const SummitProfile<G>& profile) {
  return v.inf() == profile.summit_inf && v.sup() == profile.summit_sup;
}

enum class ConjugatorSearch {
  kEnumerate,  // scan every simple element
  kAscending,  // per-atom closure
  kAuto,       // enumerate while the simple set is small, else ascend
};

namespace detail {

// For w = Δ^q P, the simples t with inf(t⁻¹ w t) ≥ q are those with
// τ^q(t) ≼ P·t. Returns c = (P t) \ τ^q(t); the condition holds iff c = 1,
// and otherwise every such t' ≽ t also satisfies t' ≽ t·c.
template <GarsideStructure G>
typename G::Simple inf_defect(const Element<G>& w, const typename G::Simple& t) {
  const G& g = w.structure();
  auto c = g.tau(t, w.inf());
  for (const auto& f : w.factors()) c = join_complement(g, f, c);
  return join_complement(g, t, c);
}

template <GarsideStructure G>
std::vector<typename G::Simple> keep_minimal(const G& g,
                                             std::vector<typename G::Simple> found) {
  std::sort(found.begin(), found.end(), CanonicalLess<G>{&g});
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<typename G::Simple> minimal;
  for (const auto& s : found) {
    bool dominated = false;
    for (const auto& t : found) {
      if (!(t == s) && g.left_divides(t, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

}  // namespace detail

// Minimal simple t ≽ x conjugating v into its summit class. The set of
// simples conjugating v into the summit class is closed under ∧, so this
// element is unique; it is reached by repeatedly right-multiplying by the
// defect of both the inf condition (on v) and the sup condition (the inf
// condition on v⁻¹).
template <GarsideStructure G>
typename G::Simple minimal_conjugator_over(const Element<G>& v, const typename G::Simple& x) {
  const G& g = v.structure();
  const Element<G> v_inverse = inverse(v);
  const auto one = g.identity();
  auto t = x;
  while (true) {
    const auto c = g.join(detail::inf_defect(v, t), detail::inf_defect(v_inverse, t));
    if (c == one) return t;
    if (!product_is_simple(g, t, c)) {
      throw InvariantViolation("ascending conjugator search left the simple elements");
    }
    t = g.product(t, c);
  }
}

// S_v^sum: the ≼-minimal simples s ≠ 1 with s⁻¹ v s in the summit class,
// in canonical order.
template <GarsideStructure G>
std::vector<typename G::Simple> minimal_simple_conjugators(
    const Element<G>& v, const SummitProfile<G>& profile,
    ConjugatorSearch search = ConjugatorSearch::kAuto) {
  if (!in_summit(v, profile)) {
    throw std::invalid_argument("minimal_simple_conjugators: element is not in the summit class");
  }
  const G& g = v.structure();
  if (search == ConjugatorSearch::kAuto) {
    search = g.strands() <= 6 ? ConjugatorSearch::kEnumerate : ConjugatorSearch::kAscending;
  }

  std::vector<typename G::Simple> found;
  if (search == ConjugatorSearch::kEnumerate) {
    const auto one = g.identity();
    for (const auto& s : g.simples()) {
      if (s == one) continue;
      if (in_summit(conjugate(v, s), profile)) found.push_back(s);
    }
  } else {
    for (int i = 0; i < g.atom_count(); ++i) {
      found.push_back(minimal_conjugator_over(v, g.atom(i)));
    }
  }
  return detail::keep_minimal(g, std::move(found));
}

template <GarsideStructure G>
struct ChainStep {
  Element<G> source;
  typename G::Simple label;
  Element<G> target;
};

// Splits a positive conjugator x between summit elements u and x⁻¹ux into a
// minimal chain: take the left normal form of x (every prefix conjugates u
// into the summit class), then split each factor that is not minimal by a
// minimal conjugator dividing it.
template <GarsideStructure G>
std::vector<ChainStep<G>> chain_decompose(const Element<G>& u, const Element<G>& x,
                                          const SummitProfile<G>& profile,
                                          ConjugatorSearch search = ConjugatorSearch::kAuto) {
  const G& g = u.structure();
  if (!x.is_positive()) throw std::invalid_argument("chain_decompose: conjugator is not positive");
  if (!in_summit(u, profile)) throw std::invalid_argument("chain_decompose: source not in summit class");
  if (!in_summit(conjugate(u, x), profile)) {
    throw std::invalid_argument("chain_decompose: target not in summit class");
  }

  std::vector<typename G::Simple> pieces(static_cast<std::size_t>(x.inf()), g.delta());
  pieces.insert(pieces.end(), x.factors().begin(), x.factors().end());

  std::vector<ChainStep<G>> chain;
  Element<G> current = u;
  for (auto rest : pieces) {
    const auto one = g.identity();
    while (!(rest == one)) {
      const auto minimal = minimal_simple_conjugators(current, profile, search);
      auto it = std::find_if(minimal.begin(), minimal.end(),
                             [&](const auto& s) { return g.left_divides(s, rest); });
      if (it == minimal.end()) {
        throw InvariantViolation("no minimal conjugator divides a summit-preserving simple");
      }
      Element<G> next = conjugate(current, *it);
      if (!in_summit(next, profile)) throw InvariantViolation("chain step left the summit class");
      chain.push_back({current, *it, next});
      rest = g.left_quotient(*it, rest);
      current = std::move(next);
    }
  }
  return chain;
}

}  // namespace garside

#endif  // GARSIDE_SUMMIT_HPP
