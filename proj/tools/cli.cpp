#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wiremono/green.hpp"
#include "wiremono/identity.hpp"
#include "wiremono/monoid.hpp"
#include "wiremono/presentation.hpp"
#include "wiremono/reduction.hpp"
#include "wiremono/render.hpp"

namespace wiremono::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

struct Options {
  std::string element_a, element_b;
  std::string monoid;
  std::string identity_text;
  std::string strategy = "random";
  std::string out_path;
  std::string witness_text;
  long long budget = 10'000;
  uint64_t seed = 0;
  int max_len = 30;
  int threads = 1;
  int rank = 0;
  int brauer_rank = 0;
  bool verify = false;
  bool census = false;
};

std::vector<Perm> parse_witness(const std::string& text, const Identity& id, int n) {
  // comma-separated `letter=(cycles)` entries, e.g. "x=(1 2), y=(2 3)"
  std::map<std::string, Perm> by_name;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string entry = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (entry.find_first_not_of(" \t") == std::string::npos) continue;
    const size_t eq = entry.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("witness entry needs letter=(cycles)");
    std::string name = entry.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               name.end());
    if (name.empty()) throw std::invalid_argument("witness entry has an empty letter name");
    by_name.emplace(name, Perm::from_cycles(n, entry.substr(eq + 1)));
  }
  std::vector<Perm> witness;
  for (int letter : id.alphabet()) {
    auto it = by_name.find(id.letter_name(letter));
    if (it == by_name.end()) {
      throw std::invalid_argument("witness misses letter " + id.letter_name(letter));
    }
    witness.push_back(it->second);
  }
  return witness;
}

int run_multiply(const Options& opt, std::ostream& out) {
  TwistedElement a = parse_element(opt.element_a);
  TwistedElement b = parse_element(opt.element_b);
  out << format_element(multiply(a, b)) << "\n";
  return kExitOk;
}

int run_check(const Options& opt, bool max_len_given, std::ostream& out) {
  const MonoidKind kind = MonoidKind::parse(opt.monoid);
  const Identity id = parse_identity(opt.identity_text);
  SearchOptions options;
  options.budget = opt.budget;
  options.seed = opt.seed;
  options.threads = opt.threads;
  if (opt.strategy == "random") {
    options.strategy = SearchOptions::Strategy::Random;
  } else if (opt.strategy == "exhaustive" || opt.strategy == "exhaustive-generator-words") {
    options.strategy = SearchOptions::Strategy::ExhaustiveWords;
  } else {
    throw CLI::ValidationError("--strategy must be random or exhaustive");
  }
  if (max_len_given) {
    options.max_word_len = opt.max_len;
    options.exhaustive_max_len = opt.max_len;
  }
  const SearchResult result = search_counterexample(kind, id, options);
  if (result.found()) {
    out << "counterexample\n";
    for (const auto& [letter, value] : *result.witness) {
      out << id.letter_name(letter) << " -> " << format_element(value) << "\n";
    }
    return kExitCounterexample;
  }
  out << "exhausted after " << result.candidates_tried << " candidates\n";
  return kExitOk;
}

int run_reduce(const Options& opt, std::ostream& out) {
  const Identity id = parse_identity(opt.identity_text);
  const Identity built = build_reduced_identity(id, opt.rank);
  const std::string text = built.str();
  out << "|U| = " << built.lhs.size() << ", |V| = " << built.rhs.size() << "\n";
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw std::runtime_error("cannot open " + opt.out_path);
    file << text << "\n";
  } else if (built.lhs.size() + built.rhs.size() <= 100'000) {
    out << text << "\n";
  } else {
    out << "(output exceeds 100000 letters; use --out FILE)\n";
  }
  return kExitOk;
}

int run_lift(const Options& opt, std::ostream& out) {
  const Identity id = parse_identity(opt.identity_text);
  const std::vector<Perm> witness = parse_witness(opt.witness_text, id, opt.rank);
  const Substitution lifted = lift_counterexample(opt.rank, id, witness);
  for (const auto& [letter, value] : lifted) {
    out << id.letter_name(letter) << " -> " << format_element(value) << "\n";
  }
  return kExitOk;
}

int run_green(const Options& opt, std::ostream& out) {
  const MonoidKind kind = MonoidKind::parse(opt.monoid);
  if (opt.census) {
    out << "J-classes of " << kind.str() << ": " << j_class_count(kind.n) << "\n";
    std::vector<long long> diagram_counts;
    if (kind.n <= 6) {
      diagram_counts.assign(static_cast<size_t>(kind.n) + 1, 0);
      for (const Matching& m : all_matchings(kind.n)) ++diagram_counts[static_cast<size_t>(m.through_count())];
    }
    for (int k = kind.n; k >= 0; k -= 2) {
      out << "k=" << k << ": maximal subgroup S_" << k << " x Z";
      if (!diagram_counts.empty()) out << ", " << diagram_counts[static_cast<size_t>(k)] << " diagrams";
      out << "\n";
      if (k == 0) break;
    }
    return kExitOk;
  }
  TwistedElement a = parse_element(opt.element_a);
  TwistedElement b = parse_element(opt.element_b);
  out << "L: " << (l_related(a, b) ? "yes" : "no") << "\n";
  out << "R: " << (r_related(a, b) ? "yes" : "no") << "\n";
  out << "H: " << (h_related(a, b) ? "yes" : "no") << "\n";
  out << "J: " << (j_related(a, b) ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_relations(const Options& opt, std::ostream& out) {
  const MonoidKind kind = MonoidKind::parse(opt.monoid);
  for (const auto& rel : relation_suite(kind.n, kind.signed_twist())) {
    out << rel.str() << "\n";
  }
  if (opt.verify) {
    const RelationReport report = verify_relations(kind);
    if (!report.all_hold()) {
      out << "FAILED " << report.first_failure->instance.label() << ": "
          << format_element(report.first_failure->lhs_value) << " != "
          << format_element(report.first_failure->rhs_value) << "\n";
      return kExitCounterexample;
    }
    out << "all " << report.checked << " relations hold in " << kind.str() << "\n";
  }
  return kExitOk;
}

int run_enumerate(const Options& opt, std::ostream& out) {
  if (opt.brauer_rank < 1 || opt.brauer_rank > 4) {
    throw CLI::ValidationError("--brauer takes a rank between 1 and 4");
  }
  for (const Matching& m : all_matchings(opt.brauer_rank)) {
    out << format_diagram(m) << "\n";
  }
  return kExitOk;
}

int run_render(const Options& opt, std::ostream& out) {
  out << render_element(parse_element(opt.element_a));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic and identity checking for twisted Brauer and partition monoids"};
  app.name("wiremono");
  app.require_subcommand(1);
  Options opt;

  CLI::App* multiply = app.add_subcommand("multiply", "multiply two elements");
  multiply->add_option("a", opt.element_a, "first element, e.g. \"bt:3 [1 2][3 3'][1' 2'] ; s=0\"")
      ->required();
  multiply->add_option("b", opt.element_b, "second element")->required();

  CLI::App* check = app.add_subcommand("check", "search for a counterexample to an identity");
  check->add_option("--monoid", opt.monoid, "monoid kind, e.g. bt:5")->required();
  check->add_option("identity", opt.identity_text, "identity, e.g. \"xyyx = yxxy\"")->required();
  check->add_option("--strategy", opt.strategy, "random or exhaustive");
  check->add_option("--budget", opt.budget, "number of candidate substitutions");
  check->add_option("--seed", opt.seed, "random seed");
  check->add_option("--max-len", opt.max_len, "generator-word length per letter");
  check->add_option("--threads", opt.threads, "worker threads");

  CLI::App* reduce = app.add_subcommand("reduce", "turn a group identity into a monoid identity");
  reduce->add_option("--n", opt.rank, "monoid rank")->required();
  reduce->add_option("identity", opt.identity_text, "identity over letters")->required();
  reduce->add_option("--out", opt.out_path, "write the built identity to a file");

  CLI::App* lift = app.add_subcommand("lift", "lift a symmetric-group counterexample to diagrams");
  lift->add_option("--n", opt.rank, "monoid rank")->required();
  lift->add_option("identity", opt.identity_text, "identity over letters")->required();
  lift->add_option("--witness", opt.witness_text, "permutations, e.g. \"x=(1 2), y=(2 3)\"")->required();

  CLI::App* green = app.add_subcommand("green", "Green's relations of a pair, or a J-class census");
  green->add_option("--monoid", opt.monoid, "monoid kind (pbt:<n>)")->required();
  green->add_flag("--census", opt.census, "print the J-class census instead of classifying");
  green->add_option("a", opt.element_a, "first element");
  green->add_option("b", opt.element_b, "second element");

  CLI::App* relations = app.add_subcommand("relations", "print the defining relations");
  relations->add_option("--monoid", opt.monoid, "monoid kind")->required();
  relations->add_flag("--verify", opt.verify, "evaluate every relation and report");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all Brauer diagrams of small rank");
  enumerate->add_option("--brauer", opt.brauer_rank, "rank (1..4)")->required();

  CLI::App* render = app.add_subcommand("render", "draw an element as ASCII art");
  render->add_option("element", opt.element_a, "element text")->required();

  std::vector<const char*> argv;
  argv.push_back("wiremono");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (multiply->parsed()) return run_multiply(opt, out);
    if (check->parsed()) return run_check(opt, check->count("--max-len") > 0, out);
    if (reduce->parsed()) return run_reduce(opt, out);
    if (lift->parsed()) return run_lift(opt, out);
    if (green->parsed()) return run_green(opt, out);
    if (relations->parsed()) return run_relations(opt, out);
    if (enumerate->parsed()) return run_enumerate(opt, out);
    if (render->parsed()) return run_render(opt, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace wiremono::cli
