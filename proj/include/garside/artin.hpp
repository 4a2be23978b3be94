#ifndef GARSIDE_ARTIN_HPP
#define GARSIDE_ARTIN_HPP

// Artin braid monoid B_n⁺ with generators σ_1..σ_{n-1}.
//
// A simple element is a positive braid in which any two strands cross at most
// once, stored as the permutation it induces on strand positions:
// image[i] is the bottom position of the strand that starts at top position
// i (0-based). Composition follows reading order, so the braid x·y has
// image y.image[x.image[i]]; see docs/conventions.md for a worked B₃ example.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

inline constexpr int kMaxStrands = 16;

class PermutationSimple {
 public:
  PermutationSimple() = default;

  // Identity permutation on n strands.
  explicit PermutationSimple(int n);

  // From a 0-based image table; throws if it is not a bijection of {0..n-1}.
  static PermutationSimple from_image(std::span<const int> image);

  int strands() const { return n_; }
  int operator[](int i) const { return image_[i]; }
  PermutationSimple inverse() const;

  // Number of inverted pairs, i.e. crossings.
  int inversions() const;

  friend bool operator==(const PermutationSimple&,
                         const PermutationSimple&) = default;

 private:
  friend class ArtinStructure;
  std::array<std::uint8_t, kMaxStrands> image_{};
  std::uint8_t n_ = 0;
};

class ArtinStructure {
 public:
  using Simple = PermutationSimple;

  explicit ArtinStructure(int n);

  int strands() const { return n_; }
  std::string name() const { return "artin"; }
  int atom_count() const { return n_ - 1; }
  int tau_order() const { return 2; }
  int max_simple_length() const { return n_ * (n_ - 1) / 2; }

  // σ_{i+1}, 0-based.
  Simple atom(int i) const;
  Simple identity() const { return Simple(n_); }
  Simple delta() const;

  int length(const Simple& s) const { return s.inversions(); }

  // σ_{i+1} ≼ s iff the strands starting at positions i and i+1 cross.
  bool atom_divides(int i, const Simple& s) const;
  // Inversion-set inclusion.
  bool left_divides(const Simple& a, const Simple& b) const;

  Simple meet(const Simple& a, const Simple& b) const;
  Simple join(const Simple& a, const Simple& b) const;
  Simple product(const Simple& a, const Simple& b) const;
  Simple left_quotient(const Simple& a, const Simple& b) const;
  Simple right_complement(const Simple& s) const;
  Simple left_complement(const Simple& s) const;
  Simple tau(const Simple& s, int power = 1) const;

  // Every simple element in canonical order (n! of them); n ≤ 9 only.
  const std::vector<Simple>& simples() const;

  std::size_t hash(const Simple& s) const;

  std::string atom_name(int i) const;
  std::optional<int> parse_atom(std::string_view token) const;

  friend bool operator==(const ArtinStructure&,
                         const ArtinStructure&) = default;

 private:
  void check(const Simple& s) const;
  int n_;
};

static_assert(GarsideStructure<ArtinStructure>);

}  // namespace garside

#endif  // GARSIDE_ARTIN_HPP
