#ifndef GARSIDE_CENTRALIZER_HPP
#define GARSIDE_CENTRALIZER_HPP

// Minimal summit graph, its breadth-first maximal tree, and the centralizer
// generators read off the non-tree arrows.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "garside/element.hpp"
#include "garside/summit.hpp"

namespace garside {

struct GraphOptions {
  std::size_t vertex_cap = 100000;
  unsigned threads = 1;
  ConjugatorSearch search = ConjugatorSearch::kAuto;
};

template <GarsideStructure G>
struct Arrow {
  std::size_t source;
  typename G::Simple label;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

template <GarsideStructure G>
class SummitGraph {
 public:
  explicit SummitGraph(Element<G> base) : base_(std::move(base)) {}

  const Element<G>& base() const { return base_; }
  const std::vector<Element<G>>& vertices() const { return vertices_; }
  const std::vector<Arrow<G>>& arrows() const { return arrows_; }

  std::optional<std::size_t> find(const Element<G>& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Returns the vertex index and whether it was new.
  std::pair<std::size_t, bool> add_vertex(const Element<G>& v) {
    auto [it, inserted] = index_.try_emplace(v, vertices_.size());
    if (inserted) vertices_.push_back(v);
    return {it->second, inserted};
  }

  std::size_t add_arrow(Arrow<G> arrow) {
    arrows_.push_back(std::move(arrow));
    return arrows_.size() - 1;
  }

  friend bool operator==(const SummitGraph& a, const SummitGraph& b) {
    return a.base_ == b.base_ && a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  Element<G> base_;
  std::vector<Element<G>> vertices_;
  std::vector<Arrow<G>> arrows_;
  std::unordered_map<Element<G>, std::size_t, ElementHash<G>> index_;
};

// Maximal tree rooted at the base vertex (index 0).
template <GarsideStructure G>
struct SpanningTree {
  // Arrow index entering each vertex; empty for the base.
  std::vector<std::optional<std::size_t>> parent_arrow;
  // Arrow indices of the tree, in insertion order.
  std::vector<std::size_t> edges;
  // γ_v as a group element (product of the tree labels from the base).
  std::vector<Element<G>> path_elements;

  bool contains(std::size_t arrow) const {
    return std::find(edges.begin(), edges.end(), arrow) != edges.end();
  }

  // γ_v as a list of arrow indices from the base.
  std::vector<std::size_t> path(const SummitGraph<G>& graph, std::size_t v) const {
    std::vector<std::size_t> out;
    while (parent_arrow[v]) {
      out.push_back(*parent_arrow[v]);
      v = graph.arrows()[*parent_arrow[v]].source;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

template <GarsideStructure G>
struct GraphBuild {
  SummitProfile<G> profile;
  SummitGraph<G> graph;
  SpanningTree<G> tree;
};

namespace detail {

template <GarsideStructure G>
using Expansion = std::vector<std::pair<typename G::Simple, Element<G>>>;

template <GarsideStructure G>
Expansion<G> expand(const Element<G>& v, const SummitProfile<G>& profile, ConjugatorSearch search) {
  Expansion<G> out;
  for (const auto& s : minimal_simple_conjugators(v, profile, search)) {
    Element<G> w = conjugate(v, s);
    if (!in_summit(w, profile)) throw InvariantViolation("minimal conjugator left the summit class");
    out.emplace_back(s, std::move(w));
  }
  return out;
}

}  // namespace detail

// Breadth-first construction of the minimal summit graph. Vertices are
// expanded in discovery order and S_v^sum is scanned in canonical order; the
// first arrow reaching a new vertex becomes its tree arrow. With several
// threads, a whole frontier is expanded concurrently and merged in the same
// order, so the output does not depend on the schedule.
template <GarsideStructure G>
GraphBuild<G> build_graph(const SummitProfile<G>& profile, const GraphOptions& options = {}) {
  const G& g = profile.representative.structure();
  GraphBuild<G> out{profile, SummitGraph<G>(profile.representative), {}};
  auto& graph = out.graph;
  auto& tree = out.tree;

  graph.add_vertex(profile.representative);
  tree.parent_arrow.push_back(std::nullopt);
  tree.path_elements.push_back(Element<G>(g));

  std::size_t next = 0;
  while (next < graph.vertices().size()) {
    const std::size_t frontier_end = graph.vertices().size();
    const std::size_t count = frontier_end - next;
    std::vector<detail::Expansion<G>> expansions(count);

    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
    if (workers == 1) {
      for (std::size_t i = 0; i < count; ++i) {
        expansions[i] = detail::expand(graph.vertices()[next + i], profile, options.search);
      }
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < count; i += workers) {
              expansions[i] = detail::expand(graph.vertices()[next + i], profile, options.search);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = next + i;
      for (auto& [s, w] : expansions[i]) {
        const auto [target, is_new] = graph.add_vertex(w);
        const std::size_t arrow = graph.add_arrow({v, s, target});
        if (is_new) {
          if (graph.vertices().size() > options.vertex_cap) {
            throw ResourceLimit("summit graph exceeds the vertex cap of " +
                                std::to_string(options.vertex_cap));
          }
          tree.parent_arrow.push_back(arrow);
          tree.edges.push_back(arrow);
          tree.path_elements.push_back(tree.path_elements[v] * Element<G>::from_simple(g, s));
        }
      }
    }
    next = frontier_end;
  }
  return out;
}

template <GarsideStructure G>
GraphBuild<G> build_graph(const Element<G>& a, const GraphOptions& options = {}) {
  return build_graph(summit_representative(a), options);
}

// Structural checks on a build; returns a description of the first failure.
template <GarsideStructure G>
std::optional<std::string> validate_build(const GraphBuild<G>& build) {
  const auto& graph = build.graph;
  const auto& tree = build.tree;
  const std::size_t k = graph.vertices().size();
  const G& g = graph.base().structure();
  if (k == 0 || !(graph.vertices()[0] == graph.base())) return "base is not vertex 0";
  if (tree.parent_arrow.size() != k || tree.path_elements.size() != k) return "tree size mismatch";
  if (tree.edges.size() + 1 != k) return "tree does not have |V|-1 edges";
  if (graph.arrows().size() > static_cast<std::size_t>(g.atom_count()) * k) {
    return "more than t arrows per vertex";
  }
  for (const auto& arrow : graph.arrows()) {
    const auto& v = graph.vertices()[arrow.source];
    if (!(conjugate(v, arrow.label) == graph.vertices()[arrow.target])) {
      return "arrow label does not conjugate source to target";
    }
    if (!in_summit(graph.vertices()[arrow.target], build.profile)) return "vertex outside summit class";
  }
  if (tree.parent_arrow[0]) return "an arrow enters the base in the tree";
  std::vector<int> entering(k, 0);
  for (std::size_t e : tree.edges) ++entering[graph.arrows()[e].target];
  for (std::size_t v = 1; v < k; ++v) {
    if (entering[v] != 1 || !tree.parent_arrow[v]) return "vertex without a unique tree arrow";
    const auto& arrow = graph.arrows()[*tree.parent_arrow[v]];
    if (arrow.target != v) return "parent arrow does not end at its vertex";
    // Following parents must reach the base in fewer than k steps.
    std::size_t steps = 0;
    for (std::size_t u = v; tree.parent_arrow[u]; u = graph.arrows()[*tree.parent_arrow[u]].source) {
      if (++steps > k) return "tree contains a cycle";
    }
    const auto expected = tree.path_elements[arrow.source] * Element<G>::from_simple(g, arrow.label);
    if (!(tree.path_elements[v] == expected)) return "path element mismatch";
    if (!(conjugate(graph.base(), tree.path_elements[v]) == graph.vertices()[v])) {
      return "tree path does not conjugate the base to its vertex";
    }
  }
  return std::nullopt;
}

template <GarsideStructure G>
struct GeneratorSet {
  std::vector<Element<G>> generators;
  // x with x⁻¹ a x = a′, a′ the base of the summit graph.
  Element<G> conjugating_witness;
};

template <GarsideStructure G>
struct CentralizerResult {
  GraphBuild<G> build;
  GeneratorSet<G> generators;
};

// For each non-tree arrow (v, s, w), in arrow order, the normal form of
// x (γ_v s γ_w⁻¹) x⁻¹, keeping first occurrences only.
template <GarsideStructure G>
GeneratorSet<G> generators_from_build(const GraphBuild<G>& build) {
  const G& g = build.graph.base().structure();
  const Element<G>& x = build.profile.witness;
  const Element<G> x_inverse = inverse(x);
  GeneratorSet<G> out{{}, x};
  std::unordered_set<Element<G>, ElementHash<G>> seen;
  std::vector<bool> in_tree(build.graph.arrows().size(), false);
  for (std::size_t e : build.tree.edges) in_tree[e] = true;
  for (std::size_t e = 0; e < build.graph.arrows().size(); ++e) {
    if (in_tree[e]) continue;
    const auto& arrow = build.graph.arrows()[e];
    const Element<G> loop = build.tree.path_elements[arrow.source] *
                            Element<G>::from_simple(g, arrow.label) *
                            inverse(build.tree.path_elements[arrow.target]);
    Element<G> alpha = x * loop * x_inverse;
    if (seen.insert(alpha).second) out.generators.push_back(std::move(alpha));
  }
  return out;
}

template <GarsideStructure G>
CentralizerResult<G> compute_centralizer(const Element<G>& a, const GraphOptions& options = {}) {
  GraphBuild<G> build = build_graph(summit_representative(a), options);
  GeneratorSet<G> gens = generators_from_build(build);
  return {std::move(build), std::move(gens)};
}

template <GarsideStructure G>
GeneratorSet<G> centralizer_generators(const Element<G>& a, const GraphOptions& options = {}) {
  return compute_centralizer(a, options).generators;
}

// Conservative pruning: drops the identity, duplicates, inverses of retained
// elements, and any g equal to w⁻¹ h^{±1} w with h retained and w a word of
// length ≤ 2 in the retained elements and their inverses. Candidates are
// examined from last to first, so earlier generators are preferred.
template <GarsideStructure G>
GeneratorSet<G> reduce_generators(const GeneratorSet<G>& gs) {
  std::vector<Element<G>> kept;
  for (const auto& g : gs.generators) {
    if (g.is_identity()) continue;
    if (std::find(kept.begin(), kept.end(), g) != kept.end()) continue;
    kept.push_back(g);
  }

  for (std::size_t idx = kept.size(); idx-- > 0;) {
    const Element<G> candidate = kept[idx];
    std::vector<Element<G>> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != idx) others.push_back(kept[j]);
    }

    bool redundant = false;
    const Element<G> candidate_inverse = inverse(candidate);
    for (const auto& h : others) {
      if (h == candidate_inverse) {
        redundant = true;
        break;
      }
    }

    if (!redundant) {
      std::vector<Element<G>> letters;
      for (const auto& h : others) {
        letters.push_back(h);
        letters.push_back(inverse(h));
      }
      std::vector<Element<G>> conjugators;
      for (const auto& l1 : letters) {
        conjugators.push_back(l1);
        for (const auto& l2 : letters) conjugators.push_back(l1 * l2);
      }
      std::unordered_set<Element<G>, ElementHash<G>> reachable;
      for (const auto& h : letters) {
        for (const auto& w : conjugators) reachable.insert(conjugate(h, w));
      }
      redundant = reachable.contains(candidate);
    }

    if (redundant) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return GeneratorSet<G>{std::move(kept), gs.conjugating_witness};
}

template <GarsideStructure G>
struct CosetResult {
  // c with c⁻¹ a c = b, when a and b are conjugate.
  std::optional<Element<G>> witness;
  // Z(b); every conjugator from a to b is witness · (element of Z(b)).
  GeneratorSet<G> centralizer;
};

template <GarsideStructure G>
std::optional<Element<G>> find_conjugator(const Element<G>& a, const Element<G>& b,
                                          const GraphOptions& options = {}) {
  require_same_group(a, b);
  const auto pa = summit_representative(a);
  const auto pb = summit_representative(b);
  if (pa.summit_inf != pb.summit_inf || pa.summit_sup != pb.summit_sup) return std::nullopt;
  const auto build = build_graph(pa, options);
  const auto v = build.graph.find(pb.representative);
  if (!v) return std::nullopt;
  // x_a⁻¹ a x_a = a′, γ⁻¹ a′ γ = b′ = x_b⁻¹ b x_b.
  return pa.witness * build.tree.path_elements[*v] * inverse(pb.witness);
}

template <GarsideStructure G>
CosetResult<G> conjugator_coset(const Element<G>& a, const Element<G>& b,
                                const GraphOptions& options = {}) {
  CosetResult<G> out{find_conjugator(a, b, options), GeneratorSet<G>{{}, Element<G>(b.structure())}};
  if (out.witness) out.centralizer = centralizer_generators(b, options);
  return out;
}

}  // namespace garside

#endif  // GARSIDE_CENTRALIZER_HPP
