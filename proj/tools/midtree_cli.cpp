// midtree: command-line front end for the midtree library.
//
// Exit codes: 0 success / identities hold, 1 an identity fails (or is not
// applicable under --strict), 2 input or usage error, 3 oracle guard
// exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "midtree/midtree.hpp"

namespace {

using namespace midtree;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

// Usage or input problems that map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_limit() {
  if (const char* env = std::getenv("MIDTREE_ORACLE_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("MIDTREE_ORACLE_LIMIT is not a number: ") + env);
    }
  }
  return kDefaultOracleLimit;
}

WeightedDigraph load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_digraph(text);
}

ComplexityKind parse_kind(const std::string& s) {
  return s == "vertex" ? ComplexityKind::VertexWeighted : ComplexityKind::EdgeWeighted;
}

void reject_arrow_labels(const WeightedDigraph& d) {
  for (const auto& v : d.vertices()) {
    if (v.label.find('>') != std::string::npos) {
      throw InputError("vertex name '" + v.label +
                       "' contains '>' (reserved for derived labels; pass --nested to transform a transform output)");
    }
  }
}

std::string tree_line(const WeightedDigraph& d, const SpanningTree& t) {
  std::string line;
  for (std::size_t v = 0; v < t.choice.size(); ++v) {
    if (t.choice[v] == kNoArc) continue;
    const Arc& a = d.arc(t.choice[v]);
    if (!line.empty()) line += ',';
    line += d.vertex(a.tail).label + "->" + d.vertex(a.head).label;
  }
  return line;
}

struct Options {
  std::string file;
  std::string op = "middle";
  std::string out;
  bool nested = false;
  std::string kind = "edge";
  std::string root;
  bool unweighted = false;
  std::string matrix = "edge";
  std::string identity = "all";
  std::vector<std::string> arc;
  bool json = false;
  bool strict = false;
  std::uint64_t limit = 0;
  std::uint64_t seed = 0;
  std::size_t count = 100;
};

int run_transform(const Options& o) {
  const WeightedDigraph d = load(o.file);
  if (!o.nested) reject_arrow_labels(d);
  const WeightedDigraph t = o.op == "line" ? line_digraph(d) : middle_digraph(d);
  const std::string text = serialize_digraph(t);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
  }
  return kExitOk;
}

int run_count(const Options& o) {
  WeightedDigraph d = load(o.file);
  if (o.unweighted) d = d.with_unit_weights();
  const ComplexityKind kind = parse_kind(o.kind);
  if (!o.root.empty()) {
    if (!d.find_vertex(o.root)) throw InputError("unknown root '" + o.root + "'");
    std::cout << to_string(kappa_rooted(d, kind, o.root)) << '\n';
  } else {
    if (d.vertex_count() == 0) throw InputError("digraph has no vertices");
    std::cout << to_string(kappa_total(d, kind)) << '\n';
  }
  return kExitOk;
}

int run_charpoly(const Options& o) {
  const WeightedDigraph d = load(o.file);
  const RationalPolynomial p = char_poly(laplacian(d, parse_kind(o.matrix)));
  std::cout << to_string(p) << '\n';
  return kExitOk;
}

int report_status(const std::vector<IdentityReport>& reports, bool strict) {
  for (const auto& r : reports) {
    if (!r.passes(strict)) return kExitFailed;
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  const WeightedDigraph d = load(o.file);
  if (d.vertex_count() == 0) throw InputError("digraph has no vertices");
  const auto selection = parse_identity_selection(o.identity);
  if (!selection) throw InputError("unknown identity '" + o.identity + "'");

  VerifyOptions vo;
  vo.oracle_limit = o.limit;
  vo.lenient = *selection == IdentitySelection::All;
  if (!o.arc.empty()) {
    const auto e = d.find_arc(o.arc[0], o.arc[1]);
    if (!e) throw InputError("no arc " + o.arc[0] + "->" + o.arc[1]);
    vo.arc = *e;
  }
  const auto reports = verify(d, *selection, vo);
  std::cout << (o.json ? render_json(reports) : render_text(reports));
  return report_status(reports, o.strict);
}

int run_enumerate(const Options& o) {
  const WeightedDigraph d = load(o.file);
  const auto root = d.find_vertex(o.root);
  if (!root) throw InputError("unknown root '" + o.root + "'");
  // Collected first so a guard refusal produces no partial output.
  const auto trees = enumerate_spanning_trees(d, *root, o.limit);
  std::ostringstream out;
  for (const auto& t : trees) out << tree_line(d, t) << '\n';
  out << "count: " << trees.size() << '\n';
  std::cout << out.str();
  return kExitOk;
}

int run_fuzz(const Options& o) {
  DigraphGenerator gen(o.seed);
  VerifyOptions vo;
  vo.oracle_limit = o.limit;
  vo.lenient = true;
  std::size_t total = 0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < o.count; ++i) {
    const WeightedDigraph d = gen.next();
    const auto reports = verify(d, IdentitySelection::All, vo);
    total += reports.size();
    for (const auto& r : reports) {
      if (r.passes(o.strict)) continue;
      ++failures;
      std::cout << "digraph #" << i << ":\n" << serialize_digraph(d) << render_text(r);
    }
  }
  std::cout << "fuzz: seed=" << o.seed << " digraphs=" << o.count << " reports=" << total
            << " failures=" << failures << '\n';
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning-tree complexities of digraphs, their line and middle digraphs"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t limit_default = kDefaultOracleLimit;
  try {
    limit_default = default_limit();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  o.limit = limit_default;

  const std::vector<std::string> kinds{"edge", "vertex"};

  auto* transform = app.add_subcommand("transform", "Write the middle or line digraph");
  transform->add_option("file", o.file, "Input digraph ('-' for stdin)")->required();
  transform->add_option("--op", o.op, "Transform")->check(CLI::IsMember({"middle", "line"}));
  transform->add_option("-o,--out", o.out, "Output file (default stdout)");
  transform->add_flag("--nested", o.nested, "Allow '>' in input names, e.g. to build M(M(D))");

  auto* count = app.add_subcommand("count", "Weighted spanning-tree complexity");
  count->add_option("file", o.file, "Input digraph ('-' for stdin)")->required();
  count->add_option("--kind", o.kind, "Complexity kind")->check(CLI::IsMember(kinds));
  count->add_option("--root", o.root, "Restrict to trees rooted here");
  count->add_flag("--unweighted", o.unweighted, "Force all weights to 1");

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a Laplacian");
  charpoly->add_option("file", o.file, "Input digraph ('-' for stdin)")->required();
  charpoly->add_option("--matrix", o.matrix, "Laplacian")->check(CLI::IsMember(kinds));

  auto* verify_cmd = app.add_subcommand("verify", "Check enumeration identities exactly");
  verify_cmd->add_option("file", o.file, "Input digraph ('-' for stdin)")->required();
  verify_cmd->add_option("--identity", o.identity,
                         "all|block|eq3|eq4|eq5|eq6|levine1|levine2|mtt");
  verify_cmd->add_option("--arc", o.arc, "Fixed arc TAIL HEAD for eq6/levine2")->expected(2);
  verify_cmd->add_flag("--json", o.json, "Emit a JSON array of reports");
  verify_cmd->add_flag("--strict", o.strict, "Count NOT-APPLICABLE as failure");
  verify_cmd->add_option("--limit", o.limit, "Oracle candidate-space limit");

  auto* enumerate = app.add_subcommand("enumerate", "List spanning trees by brute force");
  enumerate->add_option("file", o.file, "Input digraph ('-' for stdin)")->required();
  enumerate->add_option("--root", o.root, "Root vertex")->required();
  enumerate->add_option("--limit", o.limit, "Oracle candidate-space limit");

  auto* fuzz = app.add_subcommand("fuzz", "Verify all identities on seeded random digraphs");
  fuzz->add_option("--seed", o.seed, "Generator seed")->required();
  fuzz->add_option("--count", o.count, "Number of digraphs");
  fuzz->add_flag("--strict", o.strict, "Count NOT-APPLICABLE as failure");
  fuzz->add_option("--limit", o.limit, "Oracle candidate-space limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (transform->parsed()) return run_transform(o);
    if (count->parsed()) return run_count(o);
    if (charpoly->parsed()) return run_charpoly(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (fuzz->parsed()) return run_fuzz(o);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    // Parse errors, precondition failures, unknown labels.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
