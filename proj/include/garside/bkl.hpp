#ifndef GARSIDE_BKL_HPP
#define GARSIDE_BKL_HPP

// Birman–Ko–Lee monoid BKL_n⁺ with band generators a(t,s), n ≥ t > s ≥ 1.
//
// Simple elements are non-crossing partitions of the strand positions; the
// divisibility order is refinement. Each block {b_1 < ... < b_k} acts on
// positions as the cycle b_1 -> b_2 -> ... -> b_k -> b_1, which is the
// permutation of the product a(b_k,b_{k-1})···a(b_2,b_1). Products and
// quotients are computed on these permutations and read back as partitions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garside/artin.hpp"
#include "garside/structure.hpp"

namespace garside {

class NonCrossingSimple {
 public:
  NonCrossingSimple() = default;

  // The all-singletons partition on n points.
  explicit NonCrossingSimple(int n);

  // From explicit 1-based blocks; throws unless they form a non-crossing
  // partition of {1..n}.
  static NonCrossingSimple from_blocks(int n,
                                       const std::vector<std::vector<int>>& blocks);

  int strands() const { return n_; }
  int block_count() const;
  // 1-based blocks, each sorted, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const;
  // 0-based label of the block containing point i (its smallest member).
  int block_of(int i) const { return label_[i]; }

  friend bool operator==(const NonCrossingSimple&,
                         const NonCrossingSimple&) = default;

 private:
  friend class BklStructure;
  std::array<std::uint8_t, kMaxStrands> label_{};
  std::uint8_t n_ = 0;
};

// Blocks {a,c} and {b,d} with a < b < c < d cross.
bool is_non_crossing(int n, std::span<const int> labels);

class BklStructure {
 public:
  using Simple = NonCrossingSimple;

  explicit BklStructure(int n);

  int strands() const { return n_; }
  std::string name() const { return "bkl"; }
  int atom_count() const { return n_ * (n_ - 1) / 2; }
  int tau_order() const { return n_; }
  int max_simple_length() const { return n_ - 1; }

  // Atoms ordered lexicographically by (t, s).
  Simple atom(int i) const;
  // a(t,s), 1-based, n ≥ t > s ≥ 1.
  Simple band(int t, int s) const;
  int atom_index(int t, int s) const;
  std::pair<int, int> atom_pair(int i) const;

  Simple identity() const { return Simple(n_); }
  Simple delta() const;

  int length(const Simple& s) const { return n_ - s.block_count(); }

  bool atom_divides(int i, const Simple& s) const;
  // Refinement.
  bool left_divides(const Simple& a, const Simple& b) const;

  // Common refinement.
  Simple meet(const Simple& a, const Simple& b) const;
  // Finest non-crossing coarsening.
  Simple join(const Simple& a, const Simple& b) const;
  Simple product(const Simple& a, const Simple& b) const;
  Simple left_quotient(const Simple& a, const Simple& b) const;
  Simple right_complement(const Simple& s) const;
  Simple left_complement(const Simple& s) const;
  // Conjugation by δ rotates every block by one position.
  Simple tau(const Simple& s, int power = 1) const;

  // Every non-crossing partition (Catalan(n) of them) in canonical order;
  // n ≤ 12 only.
  const std::vector<Simple>& simples() const;

  std::size_t hash(const Simple& s) const;

  std::string atom_name(int i) const;
  std::optional<int> parse_atom(std::string_view token) const;

  // Position permutation of a simple element (0-based image table).
  std::array<std::uint8_t, kMaxStrands> permutation(const Simple& s) const;

  friend bool operator==(const BklStructure&, const BklStructure&) = default;

 private:
  using Perm = std::array<std::uint8_t, kMaxStrands>;
  Simple from_permutation(const Perm& p) const;
  void check(const Simple& s) const;
  int n_;
};

static_assert(GarsideStructure<BklStructure>);

// σ_i = a(i+1, i).
int artin_to_bkl_atom(const BklStructure& bkl, int artin_atom);

}  // namespace garside

#endif  // GARSIDE_BKL_HPP
