#ifndef GARSIDE_EXPORT_HPP
#define GARSIDE_EXPORT_HPP

// Graph export as Graphviz DOT and as JSON:
//
//   {
//     "structure": "artin" | "bkl", "n": <int>,
//     "summit_inf": <int>, "summit_sup": <int>,
//     "base": <word>, "witness": <word>,
//     "vertices": [<word>, ...],                 // discovery order, base first
//     "arrows": [{"v": <word>, "s": <word>, "w": <word>, "in_tree": <bool>}],
//     "generators": [<word>, ...]
//   }
//
// Every word uses the printable normal-form grammar of word.hpp.

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "garside/centralizer.hpp"
#include "garside/word.hpp"

namespace garside {

template <GarsideStructure G>
struct GraphDocument {
  GraphBuild<G> build;
  std::vector<Element<G>> generators;

  friend bool operator==(const GraphDocument& a, const GraphDocument& b) {
    return a.build.profile.summit_inf == b.build.profile.summit_inf &&
           a.build.profile.summit_sup == b.build.profile.summit_sup &&
           a.build.profile.representative == b.build.profile.representative &&
           a.build.profile.witness == b.build.profile.witness && a.build.graph == b.build.graph &&
           a.build.tree == b.build.tree && a.generators == b.generators;
  }
};

namespace detail {

inline std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

template <GarsideStructure G>
void write_dot(std::ostream& os, const GraphBuild<G>& build) {
  const auto& graph = build.graph;
  const G& g = graph.base().structure();
  os << "digraph minimal_summit_graph {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  os << "  edge [fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
    os << "  v" << v << " [label=\"" << detail::dot_escape(format_element(graph.vertices()[v]))
       << "\"" << (v == 0 ? ", peripheries=2" : "") << "];\n";
  }
  std::vector<bool> in_tree(graph.arrows().size(), false);
  for (std::size_t e : build.tree.edges) in_tree[e] = true;
  for (std::size_t e = 0; e < graph.arrows().size(); ++e) {
    const auto& arrow = graph.arrows()[e];
    os << "  v" << arrow.source << " -> v" << arrow.target << " [label=\""
       << detail::dot_escape(format_simple(g, arrow.label)) << "\""
       << (in_tree[e] ? ", style=bold, color=blue" : ", style=dashed") << "];\n";
  }
  os << "}\n";
}

template <GarsideStructure G>
std::string to_dot(const GraphBuild<G>& build) {
  std::ostringstream os;
  write_dot(os, build);
  return os.str();
}

template <GarsideStructure G>
nlohmann::json to_json(const GraphBuild<G>& build, const std::vector<Element<G>>& generators) {
  const auto& graph = build.graph;
  const G& g = graph.base().structure();
  nlohmann::json doc;
  doc["structure"] = g.name();
  doc["n"] = g.strands();
  doc["summit_inf"] = build.profile.summit_inf;
  doc["summit_sup"] = build.profile.summit_sup;
  doc["base"] = format_element(graph.base());
  doc["witness"] = format_element(build.profile.witness);
  std::vector<std::string> names;
  for (const auto& v : graph.vertices()) names.push_back(format_element(v));
  doc["vertices"] = names;
  std::vector<bool> in_tree(graph.arrows().size(), false);
  for (std::size_t e : build.tree.edges) in_tree[e] = true;
  nlohmann::json arrows = nlohmann::json::array();
  for (std::size_t e = 0; e < graph.arrows().size(); ++e) {
    const auto& arrow = graph.arrows()[e];
    arrows.push_back({{"v", names[arrow.source]},
                      {"s", format_simple(g, arrow.label)},
                      {"w", names[arrow.target]},
                      {"in_tree", static_cast<bool>(in_tree[e])}});
  }
  doc["arrows"] = arrows;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& x : generators) gens.push_back(format_element(x));
  doc["generators"] = gens;
  return doc;
}

// Rebuilds a document written by to_json; tree paths are recomputed from the
// in_tree flags.
template <GarsideStructure G>
GraphDocument<G> graph_from_json(const G& g, const nlohmann::json& doc) {
  if (doc.at("structure").get<std::string>() != g.name() || doc.at("n").get<int>() != g.strands()) {
    throw std::invalid_argument("graph document was written for a different structure");
  }
  const Element<G> base = parse_element(g, doc.at("base").get<std::string>());
  SummitProfile<G> profile{doc.at("summit_inf").get<int>(), doc.at("summit_sup").get<int>(), base,
                           parse_element(g, doc.at("witness").get<std::string>())};
  GraphDocument<G> out{GraphBuild<G>{profile, SummitGraph<G>(base), {}}, {}};
  auto& graph = out.build.graph;
  auto& tree = out.build.tree;

  for (const auto& word : doc.at("vertices")) {
    if (!graph.add_vertex(parse_element(g, word.get<std::string>())).second) {
      throw std::invalid_argument("duplicate vertex in graph document");
    }
  }
  if (graph.vertices().empty() || !(graph.vertices()[0] == base)) {
    throw std::invalid_argument("first vertex of a graph document must be the base");
  }
  tree.parent_arrow.assign(graph.vertices().size(), std::nullopt);
  for (const auto& item : doc.at("arrows")) {
    const auto v = graph.find(parse_element(g, item.at("v").get<std::string>()));
    const auto w = graph.find(parse_element(g, item.at("w").get<std::string>()));
    if (!v || !w) throw std::invalid_argument("arrow refers to an unknown vertex");
    const std::size_t e = graph.add_arrow({*v, parse_simple(g, item.at("s").get<std::string>()), *w});
    if (item.at("in_tree").get<bool>()) {
      if (tree.parent_arrow[*w]) throw std::invalid_argument("two tree arrows enter one vertex");
      tree.parent_arrow[*w] = e;
      tree.edges.push_back(e);
    }
  }
  // Tree arrows are stored in discovery order, so sources precede targets.
  tree.path_elements.assign(graph.vertices().size(), Element<G>(g));
  for (std::size_t e : tree.edges) {
    const auto& arrow = graph.arrows()[e];
    tree.path_elements[arrow.target] =
        tree.path_elements[arrow.source] * Element<G>::from_simple(g, arrow.label);
  }
  for (const auto& word : doc.at("generators")) {
    out.generators.push_back(parse_element(g, word.get<std::string>()));
  }
  return out;
}

}  // namespace garside

#endif  // GARSIDE_EXPORT_HPP
