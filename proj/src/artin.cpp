#include "garside/artin.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace garside {

PermutationSimple::PermutationSimple(int n) : n_(static_cast<std::uint8_t>(n)) {
  for (int i = 0; i < kMaxStrands; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

PermutationSimple PermutationSimple::from_image(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1 || n > kMaxStrands) {
    throw std::invalid_argument("permutation size out of range");
  }
  PermutationSimple p(n);
  std::array<bool, kMaxStrands> hit{};
  for (int i = 0; i < n; ++i) {
    if (image[i] < 0 || image[i] >= n || hit[image[i]]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    hit[image[i]] = true;
    p.image_[i] = static_cast<std::uint8_t>(image[i]);
  }
  return p;
}

PermutationSimple PermutationSimple::inverse() const {
  PermutationSimple p(n_);
  for (int i = 0; i < n_; ++i) p.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

int PermutationSimple::inversions() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (image_[i] > image_[j]) ++count;
    }
  }
  return count;
}

ArtinStructure::ArtinStructure(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands) {
    throw std::invalid_argument("Artin structure needs 2 <= n <= 16");
  }
}

void ArtinStructure::check(const Simple& s) const {
  if (s.strands() != n_) {
    throw std::invalid_argument("simple element has the wrong number of strands");
  }
}

PermutationSimple ArtinStructure::atom(int i) const {
  if (i < 0 || i >= n_ - 1) throw std::invalid_argument("atom index out of range");
  Simple s(n_);
  std::swap(s.image_[i], s.image_[i + 1]);
  return s;
}

PermutationSimple ArtinStructure::delta() const {
  Simple s(n_);
  for (int i = 0; i < n_; ++i) s.image_[i] = static_cast<std::uint8_t>(n_ - 1 - i);
  return s;
}

bool ArtinStructure::atom_divides(int i, const Simple& s) const {
  return s.image_[i] > s.image_[i + 1];
}

bool ArtinStructure::left_divides(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (a.image_[i] > a.image_[j] && b.image_[i] < b.image_[j]) return false;
    }
  }
  return true;
}

// Greedy atom absorption with O(1) residual updates: left-dividing a
// permutation braid by σ_{i+1} swaps entries i and i+1 of its image table.
PermutationSimple ArtinStructure::meet(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  Simple d(n_);
  Simple ra = a;
  Simple rb = b;
  for (int i = 0; i + 1 < n_;) {
    if (ra.image_[i] > ra.image_[i + 1] && rb.image_[i] > rb.image_[i + 1]) {
      std::swap(ra.image_[i], ra.image_[i + 1]);
      std::swap(rb.image_[i], rb.image_[i + 1]);
      for (int k = 0; k < n_; ++k) {
        if (d.image_[k] == i) {
          d.image_[k] = static_cast<std::uint8_t>(i + 1);
        } else if (d.image_[k] == i + 1) {
          d.image_[k] = static_cast<std::uint8_t>(i);
        }
      }
      i = std::max(0, i - 1);
    } else {
      ++i;
    }
  }
  return d;
}

// Reversing a simple braid word inverts its permutation, so right
// divisibility on simples is left divisibility on inverse permutations.
PermutationSimple ArtinStructure::join(const Simple& a, const Simple& b) const {
  const Simple right_gcd =
      meet(right_complement(a).inverse(), right_complement(b).inverse()).inverse();
  return left_complement(right_gcd);
}

PermutationSimple ArtinStructure::product(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  Simple p(n_);
  for (int i = 0; i < n_; ++i) p.image_[i] = b.image_[a.image_[i]];
  return p;
}

PermutationSimple ArtinStructure::left_quotient(const Simple& a,
                                                const Simple& b) const {
  check(a);
  check(b);
  Simple p(n_);
  for (int i = 0; i < n_; ++i) p.image_[a.image_[i]] = b.image_[i];
  return p;
}

PermutationSimple ArtinStructure::right_complement(const Simple& s) const {
  check(s);
  Simple p(n_);
  for (int i = 0; i < n_; ++i) {
    p.image_[s.image_[i]] = static_cast<std::uint8_t>(n_ - 1 - i);
  }
  return p;
}

PermutationSimple ArtinStructure::left_complement(const Simple& s) const {
  check(s);
  const Simple inv = s.inverse();
  Simple p(n_);
  for (int i = 0; i < n_; ++i) p.image_[i] = inv.image_[n_ - 1 - i];
  return p;
}

PermutationSimple ArtinStructure::tau(const Simple& s, int power) const {
  check(s);
  if (power % 2 == 0) return s;
  Simple p(n_);
  for (int i = 0; i < n_; ++i) {
    p.image_[i] = static_cast<std::uint8_t>(n_ - 1 - s.image_[n_ - 1 - i]);
  }
  return p;
}

const std::vector<PermutationSimple>& ArtinStructure::simples() const {
  if (n_ > 9) throw ResourceLimit("refusing to enumerate n! simple elements for n > 9");
  static std::mutex mutex;
  static std::map<int, std::vector<Simple>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n_);
  if (it != cache.end()) return it->second;

  std::vector<int> image(n_);
  std::iota(image.begin(), image.end(), 0);
  std::vector<std::pair<std::pair<int, std::vector<int>>, Simple>> keyed;
  do {
    const Simple s = Simple::from_image(image);
    keyed.push_back({{length(s), simple_word(*this, s)}, s});
  } while (std::next_permutation(image.begin(), image.end()));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Simple> out;
  out.reserve(keyed.size());
  for (auto& [key, s] : keyed) out.push_back(s);
  return cache.emplace(n_, std::move(out)).first->second;
}

std::size_t ArtinStructure::hash(const Simple& s) const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h ^= s.image_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string ArtinStructure::atom_name(int i) const {
  return "s" + std::to_string(i + 1);
}

std::optional<int> ArtinStructure::parse_atom(std::string_view token) const {
  if (token.size() < 2 || token[0] != 's') return std::nullopt;
  int value = 0;
  const auto* first = token.data() + 1;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (value < 1 || value > n_ - 1) return std::nullopt;
  return value - 1;
}

}  // namespace garside
