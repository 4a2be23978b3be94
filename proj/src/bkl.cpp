#include "garside/bkl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace garside {

NonCrossingSimple::NonCrossingSimple(int n) : n_(static_cast<std::uint8_t>(n)) {
  for (int i = 0; i < kMaxStrands; ++i) label_[i] = static_cast<std::uint8_t>(i);
}

NonCrossingSimple NonCrossingSimple::from_blocks(
    int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  std::vector<int> labels(n, -1);
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    int lo = n;
    for (int p : block) {
      if (p < 1 || p > n) throw std::invalid_argument("block point out of range");
      lo = std::min(lo, p - 1);
    }
    for (int p : block) {
      if (labels[p - 1] != -1) throw std::invalid_argument("blocks overlap");
      labels[p - 1] = lo;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (labels[i] == -1) labels[i] = i;
  }
  if (!is_non_crossing(n, labels)) throw std::invalid_argument("blocks cross");
  NonCrossingSimple s(n);
  for (int i = 0; i < n; ++i) s.label_[i] = static_cast<std::uint8_t>(labels[i]);
  return s;
}

int NonCrossingSimple::block_count() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    if (label_[i] == i) ++count;
  }
  return count;
}

std::vector<std::vector<int>> NonCrossingSimple::blocks() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n_; ++i) {
    if (label_[i] != i) continue;
    std::vector<int> block;
    for (int j = i; j < n_; ++j) {
      if (label_[j] == i) block.push_back(j + 1);
    }
    out.push_back(std::move(block));
  }
  return out;
}

bool is_non_crossing(int n, std::span<const int> labels) {
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (labels[b] == labels[a]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (labels[c] != labels[a]) continue;
        for (int d = c + 1; d < n; ++d) {
          if (labels[d] == labels[b]) return false;
        }
      }
    }
  }
  return true;
}

BklStructure::BklStructure(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands) {
    throw std::invalid_argument("BKL structure needs 2 <= n <= 16");
  }
}

void BklStructure::check(const Simple& s) const {
  if (s.strands() != n_) {
    throw std::invalid_argument("simple element has the wrong number of strands");
  }
}

int BklStructure::atom_index(int t, int s) const {
  if (!(n_ >= t && t > s && s >= 1)) {
    throw std::invalid_argument("band generator a(t,s) needs n >= t > s >= 1");
  }
  // Atoms with first index below t: sum_{u=2}^{t-1} (u-1).
  return (t - 1) * (t - 2) / 2 + (s - 1);
}

std::pair<int, int> BklStructure::atom_pair(int i) const {
  if (i < 0 || i >= atom_count()) throw std::invalid_argument("atom index out of range");
  int t = 2;
  while ((t) * (t - 1) / 2 <= i) ++t;
  return {t, i - (t - 1) * (t - 2) / 2 + 1};
}

NonCrossingSimple BklStructure::band(int t, int s) const {
  atom_index(t, s);
  Simple out(n_);
  out.label_[t - 1] = static_cast<std::uint8_t>(s - 1);
  return out;
}

NonCrossingSimple BklStructure::atom(int i) const {
  const auto [t, s] = atom_pair(i);
  return band(t, s);
}

NonCrossingSimple BklStructure::delta() const {
  Simple s(n_);
  for (int i = 0; i < n_; ++i) s.label_[i] = 0;
  return s;
}

bool BklStructure::atom_divides(int i, const Simple& s) const {
  const auto [t, r] = atom_pair(i);
  return s.label_[t - 1] == s.label_[r - 1];
}

bool BklStructure::left_divides(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  for (int i = 0; i < n_; ++i) {
    if (b.label_[i] != b.label_[a.label_[i]]) return false;
  }
  return true;
}

NonCrossingSimple BklStructure::meet(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  Simple out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (a.label_[j] == a.label_[i] && b.label_[j] == b.label_[i]) {
        out.label_[i] = static_cast<std::uint8_t>(j);
        break;
      }
    }
  }
  return out;
}

NonCrossingSimple BklStructure::join(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };
  for (int i = 0; i < n_; ++i) {
    unite(i, a.label_[i]);
    unite(i, b.label_[i]);
  }
  // Merge crossing blocks until none remain.
  for (bool merged = true; merged;) {
    merged = false;
    for (int p = 0; p < n_ && !merged; ++p) {
      for (int q = p + 1; q < n_ && !merged; ++q) {
        if (find(p) == find(q)) continue;
        for (int r = q + 1; r < n_ && !merged; ++r) {
          if (find(r) != find(p)) continue;
          for (int s = r + 1; s < n_; ++s) {
            if (find(s) == find(q)) {
              merged = unite(p, q);
              break;
            }
          }
        }
      }
    }
  }
  Simple out(n_);
  for (int i = 0; i < n_; ++i) out.label_[i] = static_cast<std::uint8_t>(find(i));
  return out;
}

BklStructure::Perm BklStructure::permutation(const Simple& s) const {
  check(s);
  Perm p{};
  std::array<int, kMaxStrands> first{};
  std::array<int, kMaxStrands> last{};
  first.fill(-1);
  for (int i = 0; i < n_; ++i) {
    const int b = s.label_[i];
    if (first[b] == -1) {
      first[b] = i;
    } else {
      p[last[b]] = static_cast<std::uint8_t>(i);
    }
    last[b] = i;
  }
  for (int b = 0; b < n_; ++b) {
    if (first[b] != -1) p[last[b]] = static_cast<std::uint8_t>(first[b]);
  }
  return p;
}

NonCrossingSimple BklStructure::from_permutation(const Perm& p) const {
  Simple s(n_);
  std::array<bool, kMaxStrands> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      s.label_[j] = static_cast<std::uint8_t>(i);
    }
  }
  std::vector<int> labels(s.label_.begin(), s.label_.begin() + n_);
  if (!is_non_crossing(n_, labels) || permutation(s) != p) {
    throw InvariantViolation("permutation is not a BKL simple element");
  }
  return s;
}

NonCrossingSimple BklStructure::product(const Simple& a, const Simple& b) const {
  const Perm pa = permutation(a);
  const Perm pb = permutation(b);
  Perm p{};
  for (int i = 0; i < n_; ++i) p[i] = pb[pa[i]];
  return from_permutation(p);
}

NonCrossingSimple BklStructure::left_quotient(const Simple& a,
                                              const Simple& b) const {
  const Perm pa = permutation(a);
  const Perm pb = permutation(b);
  Perm p{};
  for (int i = 0; i < n_; ++i) p[pa[i]] = pb[i];
  return from_permutation(p);
}

NonCrossingSimple BklStructure::right_complement(const Simple& s) const {
  const Perm ps = permutation(s);
  Perm p{};
  for (int i = 0; i < n_; ++i) p[ps[i]] = static_cast<std::uint8_t>((i + 1) % n_);
  return from_permutation(p);
}

NonCrossingSimple BklStructure::left_complement(const Simple& s) const {
  const Perm ps = permutation(s);
  Perm inv{};
  for (int i = 0; i < n_; ++i) inv[ps[i]] = static_cast<std::uint8_t>(i);
  Perm p{};
  for (int i = 0; i < n_; ++i) p[i] = inv[(i + 1) % n_];
  return from_permutation(p);
}

NonCrossingSimple BklStructure::tau(const Simple& s, int power) const {
  check(s);
  const int shift = ((power % n_) + n_) % n_;
  if (shift == 0) return s;
  std::vector<std::vector<int>> blocks;
  for (auto block : s.blocks()) {
    for (int& p : block) p = (p - 1 + shift) % n_ + 1;
    blocks.push_back(std::move(block));
  }
  return Simple::from_blocks(n_, blocks);
}

namespace {

// Restricted-growth labelings that are non-crossing, in lexicographic order.
void grow_partitions(int n, std::vector<int>& labels, int pos,
                     std::vector<NonCrossingSimple>& out) {
  if (pos == n) {
    std::vector<std::vector<int>> blocks(n);
    for (int i = 0; i < n; ++i) blocks[labels[i]].push_back(i + 1);
    out.push_back(NonCrossingSimple::from_blocks(n, blocks));
    return;
  }
  for (int b = 0; b <= pos; ++b) {
    if (b != pos && labels[b] != b) continue;
    labels[pos] = b;
    if (is_non_crossing(pos + 1, std::span<const int>(labels.data(), pos + 1))) {
      grow_partitions(n, labels, pos + 1, out);
    }
  }
}

}  // namespace

const std::vector<NonCrossingSimple>& BklStructure::simples() const {
  if (n_ > 12) throw ResourceLimit("refusing to enumerate BKL simple elements for n > 12");
  static std::mutex mutex;
  static std::map<int, std::vector<Simple>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n_);
  if (it != cache.end()) return it->second;

  std::vector<Simple> all;
  std::vector<int> labels(n_, 0);
  grow_partitions(n_, labels, 0, all);
  std::vector<std::pair<std::pair<int, std::vector<int>>, Simple>> keyed;
  for (const auto& s : all) keyed.push_back({{length(s), simple_word(*this, s)}, s});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Simple> out;
  for (auto& [key, s] : keyed) out.push_back(s);
  return cache.emplace(n_, std::move(out)).first->second;
}

std::size_t BklStructure::hash(const Simple& s) const {
  std::size_t h = 14695981039346656037ull;
  for (int i = 0; i < n_; ++i) {
    h ^= s.label_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string BklStructure::atom_name(int i) const {
  const auto [t, s] = atom_pair(i);
  return "a(" + std::to_string(t) + "," + std::to_string(s) + ")";
}

std::optional<int> BklStructure::parse_atom(std::string_view token) const {
  if (token.size() < 6 || token.substr(0, 2) != "a(" || token.back() != ')') {
    return std::nullopt;
  }
  const auto body = token.substr(2, token.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto parse = [](std::string_view text, int& value) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc() && ptr == text.data() + text.size();
  };
  int t = 0;
  int s = 0;
  if (!parse(body.substr(0, comma), t) || !parse(body.substr(comma + 1), s)) {
    return std::nullopt;
  }
  if (!(n_ >= t && t > s && s >= 1)) return std::nullopt;
  return atom_index(t, s);
}

int artin_to_bkl_atom(const BklStructure& bkl, int artin_atom) {
  return bkl.atom_index(artin_atom + 2, artin_atom + 1);
}

}  // namespace garside
