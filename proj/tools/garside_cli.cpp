// garside: command-line front end for normal forms, summit classes, summit
// graphs, centralizers and the class-enumeration harness.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 resource cap, 3 invariant breach.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/centralizer.hpp"
#include "garside/classes.hpp"
#include "garside/export.hpp"
#include "garside/word.hpp"

namespace {

using namespace garside;

enum ExitCode { kOk = 0, kUsage = 1, kResource = 2, kInvariant = 3 };

struct Job {
  std::string structure = "artin";
  int n = 3;
  std::size_t vertex_cap = 100000;
  unsigned threads = 1;
  std::string search = "auto";

  std::string word;
  std::string other;
  bool dot = false;
  bool json = false;
  bool raw = false;
  bool coset = false;
  std::string output;

  int length = -1;
  int min_length = -1;
  int max_length = -1;
  bool csv = false;
  bool no_centralizers = false;
  std::string resume;
  bool verbose = false;

  GraphOptions graph_options() const {
    static const std::map<std::string, ConjugatorSearch> searches{
        {"auto", ConjugatorSearch::kAuto},
        {"enumerate", ConjugatorSearch::kEnumerate},
        {"ascending", ConjugatorSearch::kAscending}};
    return GraphOptions{vertex_cap, threads, searches.at(search)};
  }
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw std::invalid_argument("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_generators(std::ostream& os, const std::vector<std::string>& words) {
  for (const auto& w : words) os << w << '\n';
}

template <GarsideStructure G>
int cmd_nf(const G& g, const Job& job) {
  std::cout << format_element(parse_element(g, job.word)) << '\n';
  return kOk;
}

template <GarsideStructure G>
int cmd_conjugate(const G& g, const Job& job) {
  const auto a = parse_element(g, job.word);
  const auto b = parse_element(g, job.other);
  const auto result = conjugator_coset(a, b, job.graph_options());
  if (!result.witness) {
    std::cout << "conjugate: no\n";
    return kOk;
  }
  if (!(conjugate(a, *result.witness) == b)) {
    throw InvariantViolation("conjugating witness failed verification");
  }
  std::cout << "conjugate: yes\n";
  std::cout << "witness: " << format_element(*result.witness) << '\n';
  if (job.coset) {
    std::cout << "centralizer of target:\n";
    for (const auto& z : reduce_generators(result.centralizer).generators) {
      std::cout << "  " << format_element(z) << '\n';
    }
  }
  return kOk;
}

template <GarsideStructure G>
int cmd_summit(const G& g, const Job& job) {
  const auto a = parse_element(g, job.word);
  const auto build = build_graph(summit_representative(a), job.graph_options());
  std::cout << "representative: " << format_element(build.profile.representative) << '\n';
  std::cout << "witness: " << format_element(build.profile.witness) << '\n';
  std::cout << "summit_inf: " << build.profile.summit_inf << '\n';
  std::cout << "summit_sup: " << build.profile.summit_sup << '\n';
  std::cout << "class_size: " << build.graph.vertices().size() << '\n';
  return kOk;
}

template <GarsideStructure G>
int cmd_graph(const G& g, const Job& job) {
  const auto a = parse_element(g, job.word);
  const auto result = compute_centralizer(a, job.graph_options());
  if (auto error = validate_build(result.build)) throw InvariantViolation(*error);
  Sink sink(job.output);
  if (job.json) {
    sink.stream() << to_json(result.build, result.generators.generators).dump(2) << '\n';
  } else {
    write_dot(sink.stream(), result.build);
  }
  return kOk;
}

template <GarsideStructure G>
int cmd_centralizer(const G& g, const Job& job) {
  const auto a = parse_element(g, job.word);
  auto gens = centralizer_generators(a, job.graph_options());
  if (!job.raw) gens = reduce_generators(gens);
  std::vector<std::string> words;
  for (const auto& z : gens.generators) {
    if (!commutes(z, a)) throw InvariantViolation("emitted generator does not commute with input");
    words.push_back(format_element(z));
  }
  print_generators(std::cout, words);
  return kOk;
}

template <GarsideStructure G>
int cmd_classes(const G& g, const Job& job) {
  int lo = job.length;
  int hi = job.length;
  if (job.length < 0) {
    if (job.min_length < 0 || job.max_length < job.min_length) {
      throw CLI::ValidationError("classes", "give --length or a valid --min/--max range");
    }
    lo = job.min_length;
    hi = job.max_length;
  }
  ClassesOptions options;
  options.graph = job.graph_options();
  options.centralizers = !job.no_centralizers;
  options.checkpoint = job.resume;
  if (job.verbose) options.log = [](const std::string& m) { std::cerr << m << '\n'; };

  Sink sink(job.output);
  std::ostream& os = sink.stream();
  if (job.csv) os << "representative,class_size,summit_size,raw_generators,reduced_generators\n";
  std::size_t total = 0;
  for (int length = lo; length <= hi; ++length) {
    const auto records = enumerate_classes(g, length, options);
    total += records.size();
    std::map<std::size_t, std::size_t> distribution;
    for (const auto& r : records) {
      ++distribution[r.reduced_generators];
      if (job.csv) {
        os << '"' << format_element(r.representative) << "\"," << r.class_size << ','
           << r.summit_size << ',' << r.raw_generators << ',' << r.reduced_generators << '\n';
      }
    }
    if (!job.csv) {
      os << "length " << length << ": " << records.size() << " classes\n";
      for (const auto& r : records) {
        os << "  " << format_element(r.representative) << "  class_size=" << r.class_size
           << " summit_size=" << r.summit_size;
        if (options.centralizers) {
          os << " raw=" << r.raw_generators << " reduced=" << r.reduced_generators;
        }
        os << '\n';
      }
      if (options.centralizers) {
        os << "  reduced generator counts:";
        for (const auto& [count, classes] : distribution) os << ' ' << count << 'x' << classes;
        os << '\n';
      }
    }
  }
  if (!job.csv && lo != hi) os << "total: " << total << " classes\n";
  return kOk;
}

template <GarsideStructure G>
int dispatch(const G& g, const std::string& command, const Job& job) {
  if (command == "nf") return cmd_nf(g, job);
  if (command == "conjugate") return cmd_conjugate(g, job);
  if (command == "summit") return cmd_summit(g, job);
  if (command == "graph") return cmd_graph(g, job);
  if (command == "centralizer") return cmd_centralizer(g, job);
  return cmd_classes(g, job);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, summit classes and centralizers in Garside groups"};
  app.require_subcommand(1);
  Job job;

  app.add_option("--structure", job.structure, "Garside structure")
      ->check(CLI::IsMember({"artin", "bkl"}))
      ->capture_default_str();
  app.add_option("-n,--strands", job.n, "Number of strands")->capture_default_str();
  app.add_option("--vertex-cap", job.vertex_cap, "Abort when a summit graph exceeds this size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", job.threads, "Worker threads for graph construction")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--search", job.search, "Minimal conjugator search")
      ->check(CLI::IsMember({"auto", "enumerate", "ascending"}))
      ->capture_default_str();

  auto* nf = app.add_subcommand("nf", "Print the left normal form of a word");
  nf->add_option("word", job.word)->required();

  auto* conj = app.add_subcommand("conjugate", "Decide conjugacy and print a witness c with c^-1 a c = b");
  conj->add_option("a", job.word)->required();
  conj->add_option("b", job.other)->required();
  conj->add_flag("--coset", job.coset, "Also print generators of the centralizer of b");

  auto* summit = app.add_subcommand("summit", "Summit representative, witness and summit class size");
  summit->add_option("word", job.word)->required();

  auto* graph = app.add_subcommand("graph", "Export the minimal summit graph");
  graph->add_option("word", job.word)->required();
  auto* dot = graph->add_flag("--dot", job.dot, "Graphviz output (default)");
  graph->add_flag("--json", job.json, "JSON output")->excludes(dot);
  graph->add_option("-o,--output", job.output, "Output file");

  auto* centralizer = app.add_subcommand("centralizer", "Generators of the centralizer");
  centralizer->add_option("word", job.word)->required();
  auto* raw = centralizer->add_flag("--raw", job.raw, "Unreduced generator set");
  bool reduced = false;
  centralizer->add_flag("--reduced", reduced, "Reduced generator set (default)")->excludes(raw);

  auto* classes = app.add_subcommand("classes", "Conjugacy classes of positive elements of a length");
  auto* length = classes->add_option("-l,--length", job.length, "Atom length");
  classes->add_option("--min", job.min_length, "Smallest length of a range")->excludes(length);
  classes->add_option("--max", job.max_length, "Largest length of a range")->excludes(length);
  classes->add_flag("--csv", job.csv, "CSV output");
  classes->add_flag("--no-centralizers", job.no_centralizers, "Skip centralizer computation");
  classes->add_option("--resume", job.resume, "JSON checkpoint file, created or resumed");
  classes->add_option("-o,--output", job.output, "Output file");
  classes->add_flag("-v,--verbose", job.verbose, "Progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (job.structure == "artin") return dispatch(ArtinStructure(job.n), command, job);
    return dispatch(BklStructure(job.n), command, job);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
}
