#ifndef GARSIDE_ELEMENT_HPP
#define GARSIDE_ELEMENT_HPP

// Elements of a Garside group in left normal form Δ^p · s_1 ··· s_k.

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

template <GarsideStructure G>
class Element {
 public:
  using Structure = G;
  using Simple = typename G::Simple;

  // The identity.
  explicit Element(G structure) : g_(std::move(structure)) {}

  static Element delta_power(const G& g, int power) {
    Element e(g);
    e.inf_ = power;
    return e;
  }

  static Element from_simple(const G& g, const Simple& s) {
    return from_sequence(g, 0, {s});
  }

  // Δ^power · s_1 ··· s_k for an arbitrary sequence of simples.
  static Element from_sequence(const G& g, int power, const std::vector<Simple>& seq) {
    Element e = delta_power(g, power);
    for (const auto& s : seq) e.append(s);
    e.tidy();
    return e;
  }

  // Δ^{e_1} c_1 Δ^{e_2} c_2 ···: moving every Δ-power to the front twists
  // c_i by τ^{E_i}, E_i being the sum of the exponents to its right.
  static Element from_twisted(const G& g, const std::vector<std::pair<int, Simple>>& terms) {
    int suffix = 0;
    std::vector<Simple> seq(terms.size(), g.identity());
    for (std::size_t i = terms.size(); i-- > 0;) {
      seq[i] = g.tau(terms[i].second, suffix);
      suffix += terms[i].first;
    }
    return from_sequence(g, suffix, seq);
  }

  // Assemble from data already known to be in normal form; throws if not.
  static Element from_normal_form(const G& g, int inf, std::vector<Simple> factors) {
    Element e(g);
    e.inf_ = inf;
    e.factors_ = std::move(factors);
    if (!e.is_normal()) throw std::invalid_argument("factors are not in left normal form");
    return e;
  }

  const G& structure() const { return g_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + canonical_length(); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<Simple>& factors() const { return factors_; }

  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const { return inf_ >= 0; }
  bool is_delta_power() const { return factors_.empty(); }

  // Word length in atoms (exponent sum for homogeneous structures).
  int atom_length() const {
    int total = inf_ * g_.max_simple_length();
    for (const auto& s : factors_) total += g_.length(s);
    return total;
  }

  // No factor is 1 or Δ and every adjacent pair is left-weighted.
  bool is_normal() const {
    const auto one = g_.identity();
    const auto delta = g_.delta();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] == one || factors_[i] == delta) return false;
      if (i > 0 && !is_left_weighted(g_, factors_[i - 1], factors_[i])) return false;
    }
    return true;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.g_ == b.g_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }

  // Normal-form order: inf, canonical length, then factors canonically.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.inf_ <=> b.inf_; c != 0) return c;
    if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
      if (auto c = canonical_compare(a.g_, a.factors_[i], b.factors_[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(inf_) * 31 + factors_.size();
    for (const auto& s : factors_) h = h * 1000003u ^ g_.hash(s);
    return h;
  }

 private:
  // Right-multiply a left-weighted factor list by a simple element with a
  // single right-to-left sweep of pairwise left-weighting.
  void append(const Simple& s) {
    factors_.push_back(s);
    const auto one = g_.identity();
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      const auto t = g_.meet(g_.right_complement(factors_[j - 1]), factors_[j]);
      if (t == one) break;
      factors_[j - 1] = g_.product(factors_[j - 1], t);
      factors_[j] = g_.left_quotient(t, factors_[j]);
    }
  }

  // Δ factors can only lead and trivial factors can only trail.
  void tidy() {
    const auto one = g_.identity();
    const auto delta = g_.delta();
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead] == delta) ++lead;
    inf_ += static_cast<int>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    while (!factors_.empty() && factors_.back() == one) factors_.pop_back();
  }

  G g_;
  int inf_ = 0;
  std::vector<Simple> factors_;
};

template <GarsideStructure G>
void require_same_group(const Element<G>& a, const Element<G>& b) {
  if (!(a.structure() == b.structure())) {
    throw std::invalid_argument("operands belong to different Garside structures");
  }
}

// (Δ^p A)(Δ^q B) = Δ^{p+q} τ^q(A) B.
template <GarsideStructure G>
Element<G> operator*(const Element<G>& a, const Element<G>& b) {
  require_same_group(a, b);
  const G& g = a.structure();
  std::vector<typename G::Simple> seq;
  seq.reserve(a.factors().size() + b.factors().size());
  for (const auto& s : a.factors()) seq.push_back(g.tau(s, b.inf()));
  seq.insert(seq.end(), b.factors().begin(), b.factors().end());
  return Element<G>::from_sequence(g, a.inf() + b.inf(), seq);
}

// s⁻¹ = Δ⁻¹·L(s) with L(s)·s = Δ, so
// (Δ^p s_1···s_k)⁻¹ = Δ⁻¹L(s_k) ··· Δ⁻¹L(s_1) · Δ^{-p}.
template <GarsideStructure G>
Element<G> inverse(const Element<G>& a) {
  const G& g = a.structure();
  std::vector<std::pair<int, typename G::Simple>> terms;
  const auto& f = a.factors();
  for (std::size_t i = f.size(); i-- > 0;) terms.push_back({-1, g.left_complement(f[i])});
  terms.push_back({-a.inf(), g.identity()});
  return Element<G>::from_twisted(g, terms);
}

// c⁻¹ a c.
template <GarsideStructure G>
Element<G> conjugate(const Element<G>& a, const Element<G>& c) {
  return inverse(c) * a * c;
}

template <GarsideStructure G>
Element<G> conjugate(const Element<G>& a, const typename G::Simple& s) {
  return conjugate(a, Element<G>::from_simple(a.structure(), s));
}

template <GarsideStructure G>
Element<G> power(const Element<G>& a, int exponent) {
  Element<G> base = exponent < 0 ? inverse(a) : a;
  Element<G> result(a.structure());
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result = result * base;
  return result;
}

template <GarsideStructure G>
bool commutes(const Element<G>& a, const Element<G>& b) {
  return a * b == b * a;
}

template <GarsideStructure G>
struct ElementHash {
  std::size_t operator()(const Element<G>& e) const { return e.hash(); }
};

}  // namespace garside

#endif  // GARSIDE_ELEMENT_HPP
