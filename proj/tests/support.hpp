#ifndef GARSIDE_TESTS_SUPPORT_HPP
#define GARSIDE_TESTS_SUPPORT_HPP

// Brute-force oracles and random inputs shared by the unit and acceptance
// tests. Nothing here relies on the lattice operations under test.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/centralizer.hpp"
#include "garside/word.hpp"

namespace support {

using namespace garside;

// Greatest common left divisor by scanning every simple element.
template <GarsideStructure G>
typename G::Simple oracle_meet(const G& g, const typename G::Simple& a, const typename G::Simple& b) {
  auto best = g.identity();
  for (const auto& s : g.simples()) {
    if (g.left_divides(s, a) && g.left_divides(s, b) && g.length(s) > g.length(best)) best = s;
  }
  return best;
}

// Least common right multiple by scanning every simple element.
template <GarsideStructure G>
typename G::Simple oracle_join(const G& g, const typename G::Simple& a, const typename G::Simple& b) {
  auto best = g.delta();
  for (const auto& s : g.simples()) {
    if (g.left_divides(a, s) && g.left_divides(b, s) && g.length(s) < g.length(best)) best = s;
  }
  return best;
}

// Artin left divisibility straight from the definition: a ≼ b iff a·(a⁻¹b)
// is reduced, i.e. the inversion set of a is contained in that of b.
inline bool oracle_artin_divides(const PermutationSimple& a, const PermutationSimple& b) {
  const int n = a.strands();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Inversion (i,j) of the braid permutation: strands starting at i < j end crossed.
      if (a[i] > a[j] && !(b[i] > b[j])) return false;
    }
  }
  return true;
}

template <GarsideStructure G>
Element<G> random_positive(const G& g, int length, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, g.atom_count() - 1);
  std::vector<Letter> word;
  for (int i = 0; i < length; ++i) word.push_back({Letter::Kind::kAtom, pick(rng), 1});
  return evaluate(g, word);
}

template <GarsideStructure G>
Element<G> random_element(const G& g, int length, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, g.atom_count() - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> word;
  for (int i = 0; i < length; ++i) word.push_back({Letter::Kind::kAtom, pick(rng), sign(rng) ? 1 : -1});
  return evaluate(g, word);
}

// Summit class by brute force: every conjugate reachable through single
// simple conjugations without leaving inf ≥ inf(a), sup ≤ sup(a), reduced to
// those with the largest inf and then the smallest sup.
template <GarsideStructure G>
std::set<Element<G>> oracle_summit_class(const Element<G>& a, std::size_t cap = 200000) {
  const G& g = a.structure();
  std::unordered_set<Element<G>, ElementHash<G>> seen{a};
  std::deque<Element<G>> queue{a};
  while (!queue.empty()) {
    const Element<G> v = queue.front();
    queue.pop_front();
    for (const auto& s : g.simples()) {
      Element<G> w = conjugate(v, s);
      if (w.inf() < a.inf() || w.sup() > a.sup()) continue;
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw ResourceLimit("oracle closure too large");
        queue.push_back(std::move(w));
      }
    }
  }
  int best_inf = a.inf();
  for (const auto& v : seen) best_inf = std::max(best_inf, v.inf());
  int best_sup = a.sup();
  for (const auto& v : seen) {
    if (v.inf() == best_inf) best_sup = std::min(best_sup, v.sup());
  }
  std::set<Element<G>> out;
  for (const auto& v : seen) {
    if (v.inf() == best_inf && v.sup() == best_sup) out.insert(v);
  }
  return out;
}

template <GarsideStructure G>
std::set<Element<G>> as_set(const std::vector<Element<G>>& xs) {
  return {xs.begin(), xs.end()};
}

template <GarsideStructure G>
std::set<std::vector<int>> simple_words(const G& g, const std::vector<typename G::Simple>& xs) {
  std::set<std::vector<int>> out;
  for (const auto& s : xs) out.insert(simple_word(g, s));
  return out;
}

// Word of an Artin element rewritten with σ_i = a(i+1, i).
inline Element<BklStructure> artin_to_bkl(const BklStructure& bkl, const Element<ArtinStructure>& e) {
  auto letters = word_of(e);
  for (auto& l : letters) {
    if (l.kind == Letter::Kind::kAtom) l.atom = artin_to_bkl_atom(bkl, l.atom);
  }
  // Artin Δ^p is not a BKL Δ-power; expand it into atoms.
  std::vector<Letter> out;
  const ArtinStructure artin(bkl.strands());
  for (const auto& l : letters) {
    if (l.kind == Letter::Kind::kDelta) {
      const auto word = simple_word(artin, artin.delta());
      const int reps = l.exponent < 0 ? -l.exponent : l.exponent;
      for (int r = 0; r < reps; ++r) {
        if (l.exponent > 0) {
          for (int i : word) out.push_back({Letter::Kind::kAtom, artin_to_bkl_atom(bkl, i), 1});
        } else {
          for (auto it = word.rbegin(); it != word.rend(); ++it) {
            out.push_back({Letter::Kind::kAtom, artin_to_bkl_atom(bkl, *it), -1});
          }
        }
      }
    } else {
      out.push_back(l);
    }
  }
  return evaluate(bkl, out);
}

}  // namespace support

#endif  // GARSIDE_TESTS_SUPPORT_HPP
