#ifndef GARSIDE_CLASSES_HPP
#define GARSIDE_CLASSES_HPP

// Conjugacy classes of the positive elements of a given length, with the
// centralizer generator counts of one representative per class.
//
// Positive elements are visited once each, as left normal forms
// Δ^p s_1 ··· s_k (s_i ∉ {1, Δ}, each pair left-weighted). Classes are keyed
// by their summit sets: every summit vertex found so far maps to its class.

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "garside/centralizer.hpp"
#include "garside/word.hpp"

namespace garside {

template <GarsideStructure G>
struct ClassRecord {
  Element<G> representative;      // lexicographically least normal-form word in the class
  std::size_t class_size = 0;     // positive elements of this length in the class
  std::size_t summit_size = 0;
  std::size_t raw_generators = 0;
  std::size_t reduced_generators = 0;
};

struct ClassesOptions {
  GraphOptions graph;
  bool centralizers = true;
  // JSON checkpoint; read on start when present, rewritten as work completes.
  std::string checkpoint;
  std::function<void(const std::string&)> log;
};

namespace detail {

using AtomMask = std::bitset<128>;

// Left-weighted successor lists over the simple elements, built on demand.
template <GarsideStructure G>
class NormalFormWalker {
 public:
  explicit NormalFormWalker(const G& g) : g_(g), simples_(g.simples()) {
    if (g.atom_count() > static_cast<int>(AtomMask().size())) {
      throw std::invalid_argument("too many atoms for normal-form enumeration");
    }
    const auto one = g.identity();
    const auto delta = g.delta();
    start_.resize(simples_.size());
    finish_.resize(simples_.size());
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
    for (std::size_t i = 0; i < simples_.size(); ++i) by_hash[g.hash(simples_[i])].push_back(i);
    auto index_of = [&](const typename G::Simple& s) {
      for (std::size_t i : by_hash.at(g.hash(s))) {
        if (simples_[i] == s) return i;
      }
      throw InvariantViolation("simple element missing from the enumeration");
    };
    for (std::size_t i = 0; i < simples_.size(); ++i) {
      for (int a = 0; a < g.atom_count(); ++a) {
        if (g.atom_divides(a, simples_[i])) start_[i].set(static_cast<std::size_t>(a));
      }
      if (!(simples_[i] == one) && !(simples_[i] == delta)) {
        proper_.push_back(i);
      }
    }
    for (std::size_t i = 0; i < simples_.size(); ++i) {
      finish_[i] = start_[index_of(g.right_complement(simples_[i]))];
    }
    followers_.resize(simples_.size());
  }

  const std::vector<typename G::Simple>& simples() const { return simples_; }
  const std::vector<std::size_t>& proper() const { return proper_; }
  int length(std::size_t i) const { return g_.length(simples_[i]); }

  const std::vector<std::size_t>& followers(std::size_t i) {
    if (!followers_[i]) {
      std::vector<std::size_t> out;
      for (std::size_t j : proper_) {
        if ((finish_[i] & start_[j]).none()) out.push_back(j);
      }
      followers_[i] = std::move(out);
    }
    return *followers_[i];
  }

 private:
  const G& g_;
  const std::vector<typename G::Simple>& simples_;
  std::vector<AtomMask> start_;
  std::vector<AtomMask> finish_;
  std::vector<std::size_t> proper_;
  std::vector<std::optional<std::vector<std::size_t>>> followers_;
};

// A unit of enumeration: the Δ-power and the first factor (if any).
struct Branch {
  int power;
  std::optional<std::size_t> first;
};

template <GarsideStructure G>
std::vector<Branch> branches(const G& g, NormalFormWalker<G>& walker, int length) {
  std::vector<Branch> out;
  const int m = g.max_simple_length();
  for (int p = 0; p * m <= length; ++p) {
    const int rest = length - p * m;
    if (rest == 0) {
      out.push_back({p, std::nullopt});
      continue;
    }
    for (std::size_t i : walker.proper()) {
      if (walker.length(i) <= rest) out.push_back({p, i});
    }
  }
  return out;
}

template <GarsideStructure G, typename Visit>
void walk_branch(const G& g, NormalFormWalker<G>& walker, const Branch& branch, int length,
                 Visit&& visit) {
  if (!branch.first) {
    visit(Element<G>::delta_power(g, branch.power));
    return;
  }
  std::vector<std::size_t> seq{*branch.first};
  const int rest = length - branch.power * g.max_simple_length() - walker.length(*branch.first);
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      std::vector<typename G::Simple> factors;
      factors.reserve(seq.size());
      for (std::size_t i : seq) factors.push_back(walker.simples()[i]);
      visit(Element<G>::from_normal_form(g, branch.power, std::move(factors)));
      return;
    }
    for (std::size_t j : walker.followers(seq.back())) {
      const int l = walker.length(j);
      if (l > remaining) continue;
      seq.push_back(j);
      extend(remaining - l);
      seq.pop_back();
    }
  };
  extend(rest);
}

}  // namespace detail

// Calls visit(e) once for every positive element of the given atom length.
template <GarsideStructure G, typename Visit>
void for_each_positive(const G& g, int length, Visit&& visit) {
  detail::NormalFormWalker<G> walker(g);
  for (const auto& branch : detail::branches(g, walker, length)) {
    detail::walk_branch(g, walker, branch, length, visit);
  }
}

namespace detail {

// Order on printed normal forms: inf, then the atom word of the factors
// lexicographically.
template <GarsideStructure G>
std::pair<int, std::vector<int>> word_key(const Element<G>& e) {
  std::vector<int> atoms;
  for (const auto& s : e.factors()) {
    for (int i : simple_word(e.structure(), s)) atoms.push_back(i);
  }
  return {e.inf(), std::move(atoms)};
}

template <GarsideStructure G>
struct ClassTable {
  std::vector<ClassRecord<G>> records;
  std::unordered_map<Element<G>, std::size_t, ElementHash<G>> summit_index;

  void add(const Element<G>& e, const GraphOptions& options) {
    const auto profile = summit_representative(e);
    if (auto it = summit_index.find(profile.representative); it != summit_index.end()) {
      auto& record = records[it->second];
      ++record.class_size;
      if (word_key(e) < word_key(record.representative)) record.representative = e;
      return;
    }
    const auto build = build_graph(profile, options);
    const std::size_t id = records.size();
    for (const auto& v : build.graph.vertices()) summit_index.emplace(v, id);
    records.push_back({e, 1, build.graph.vertices().size(), 0, 0});
  }

  // Re-registers a class read from a checkpoint.
  void restore(ClassRecord<G> record, const GraphOptions& options) {
    const auto build = build_graph(record.representative, options);
    const std::size_t id = records.size();
    for (const auto& v : build.graph.vertices()) {
      if (!summit_index.emplace(v, id).second) {
        throw std::invalid_argument("checkpoint lists two conjugate representatives");
      }
    }
    record.summit_size = build.graph.vertices().size();
    records.push_back(std::move(record));
  }
};

template <GarsideStructure G>
nlohmann::json record_to_json(const ClassRecord<G>& r, bool with_generators) {
  nlohmann::json out{{"representative", format_element(r.representative)},
                     {"class_size", r.class_size},
                     {"summit_size", r.summit_size}};
  if (with_generators) {
    out["raw_generators"] = r.raw_generators;
    out["reduced_generators"] = r.reduced_generators;
  }
  return out;
}

inline nlohmann::json read_checkpoint(const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return nlohmann::json::object();
  std::ifstream in(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("unreadable checkpoint " + path + ": " + e.what());
  }
}

inline void write_checkpoint(const std::string& path, const nlohmann::json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

// All conjugacy classes meeting the positive elements of the given length,
// sorted by representative.
template <GarsideStructure G>
std::vector<ClassRecord<G>> enumerate_classes(const G& g, int length,
                                              const ClassesOptions& options = {}) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  const auto log = [&](const std::string& message) {
    if (options.log) options.log(message);
  };

  nlohmann::json checkpoint = detail::read_checkpoint(options.checkpoint);
  if (!checkpoint.empty() &&
      (checkpoint.value("structure", "") != g.name() || checkpoint.value("n", 0) != g.strands())) {
    throw std::invalid_argument("checkpoint belongs to a different structure");
  }
  checkpoint["structure"] = g.name();
  checkpoint["n"] = g.strands();
  const std::string key = std::to_string(length);
  nlohmann::json& entry = checkpoint["lengths"][key];

  detail::ClassTable<G> table;
  std::size_t completed = 0;
  bool finished = false;
  if (entry.is_object()) {
    completed = entry.value("completed_branches", std::size_t{0});
    finished = entry.value("done", false);
    for (const auto& item : entry.at("classes")) {
      ClassRecord<G> r{parse_element(g, item.at("representative").get<std::string>()),
                       item.at("class_size").get<std::size_t>(), 0, 0, 0};
      if (finished) {
        r.raw_generators = item.at("raw_generators").get<std::size_t>();
        r.reduced_generators = item.at("reduced_generators").get<std::size_t>();
      }
      table.restore(std::move(r), options.graph);
    }
    log("length " + key + ": resumed with " + std::to_string(table.records.size()) + " classes");
  }

  auto save = [&](std::size_t branches_done, bool with_generators) {
    if (options.checkpoint.empty()) return;
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& r : table.records) classes.push_back(detail::record_to_json(r, with_generators));
    entry = {{"completed_branches", branches_done}, {"done", with_generators}, {"classes", classes}};
    detail::write_checkpoint(options.checkpoint, checkpoint);
  };

  if (!finished) {
    detail::NormalFormWalker<G> walker(g);
    const auto work = detail::branches(g, walker, length);
    for (; completed < work.size(); ++completed) {
      detail::walk_branch(g, walker, work[completed], length,
                          [&](const Element<G>& e) { table.add(e, options.graph); });
      if (completed + 1 == work.size() || (completed + 1) % 16 == 0) save(completed + 1, false);
    }
    log("length " + key + ": " + std::to_string(table.records.size()) + " classes");

    if (options.centralizers) {
      auto& records = table.records;
      const unsigned workers = std::max(1u, options.graph.threads);
      GraphOptions inner = options.graph;
      inner.threads = 1;
      auto compute = [&](std::size_t i) {
        const auto gens = centralizer_generators(records[i].representative, inner);
        records[i].raw_generators = gens.generators.size();
        records[i].reduced_generators = reduce_generators(gens).generators.size();
      };
      if (workers == 1) {
        for (std::size_t i = 0; i < records.size(); ++i) compute(i);
      } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            try {
              for (std::size_t i = w; i < records.size(); i += workers) compute(i);
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
      save(completed, true);
    }
  }

  auto out = std::move(table.records);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return detail::word_key(a.representative) < detail::word_key(b.representative);
            });
  return out;
}

}  // namespace garside

#endif  // GARSIDE_CLASSES_HPP
