#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/certificates.hpp"
#include "gallai/claw_finders.hpp"
#include "gallai/generators.hpp"
#include "gallai/graph.hpp"
#include "gallai/oracle.hpp"
#include "gallai/p5_finders.hpp"
#include "gallai/pattern.hpp"

namespace {

using gallai::ClassLabel;
using gallai::Errc;
using gallai::Graph;
using nlohmann::json;

// Stable exit codes, documented in the README: 2 for anything wrong with
// the input itself, 3..5 for the finder preconditions, 6 for a failed
// verification, 7 for a truncated oracle run.
int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_in_class: return 3;
    case Errc::disconnected: return 4;
    case Errc::structure_violation:
    case Errc::precondition_c5: return 5;
    default: return 2;
  }
}

constexpr int kExitVerifyFailed = 6;
constexpr int kExitTruncated = 7;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream file(path);
  if (!file)
    gallai::raise(Errc::malformed_record, "cannot open input file " + path);
  return read_stream(file);
}

// Batch input: one graph6 record per line; blank lines and lines starting
// with '#' are skipped. An edge-list file holds exactly one graph.
std::vector<Graph> read_graphs(const std::string& path,
                               const std::string& format) {
  std::string text = read_input(path);
  std::vector<Graph> graphs;
  if (format == "edgelist") {
    graphs.push_back(gallai::parse_edge_list(text));
    return graphs;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    graphs.push_back(gallai::parse_graph6(line.substr(start)));
  }
  return graphs;
}

json input_id(const Graph& g) {
  if (g.vertex_count() > 62) return nullptr;
  return gallai::to_graph6(g);
}

ClassLabel resolve_class(const std::string& name) {
  auto label = gallai::class_from_name(name);
  if (!label)
    gallai::raise(Errc::unknown_pattern, "unknown class label " + name);
  return *label;
}

json report_json(const Graph& g, ClassLabel label,
                 const gallai::GallaiResult& result, json oracle,
                 json verified, json ms) {
  return {{"input", input_id(g)},
          {"class", gallai::class_name(label)},
          {"vertex", result.vertex},
          {"branch", gallai::branch_name(result.branch)},
          {"certificate", json::parse(gallai::certificate_json(result.witness))},
          {"oracle", std::move(oracle)},
          {"verified", std::move(verified)},
          {"ms", std::move(ms)}};
}

int run_classify(std::ostream& out, const std::string& file,
                 const std::string& format) {
  static const char* kProbes[] = {"claw", "P5", "triangle", "paw",
                                  "diamond"};
  for (const Graph& g : read_graphs(file, format)) {
    json classes = json::array();
    for (ClassLabel label : gallai::kAllClassLabels)
      if (gallai::in_class(g, label))
        classes.push_back(gallai::class_name(label));
    json patterns;
    for (const char* name : kProbes)
      patterns[name] =
          gallai::find_induced(g, gallai::named_pattern(name)).has_value();
    json line = {{"input", input_id(g)},
                 {"classes", classes},
                 {"patterns", patterns}};
    out << line.dump() << "\n";
  }
  return 0;
}

int run_find(std::ostream& out, const std::string& file,
             const std::string& format, const std::string& class_name,
             bool skip_membership) {
  ClassLabel label = resolve_class(class_name);
  for (const Graph& g : read_graphs(file, format)) {
    auto start = std::chrono::steady_clock::now();
    gallai::GallaiResult result =
        gallai::find_gallai(g, label, skip_membership);
    json ms = {{"find", ms_since(start)}};
    out << report_json(g, label, result, nullptr, nullptr, std::move(ms))
               .dump()
        << "\n";
  }
  return 0;
}

int run_verify(std::ostream& out, const std::string& file,
               const std::string& format, const std::string& class_name,
               uint64_t budget, bool skip_membership) {
  ClassLabel label = resolve_class(class_name);
  bool any_failed = false, any_truncated = false;
  for (const Graph& g : read_graphs(file, format)) {
    auto t_find = std::chrono::steady_clock::now();
    gallai::GallaiResult result =
        gallai::find_gallai(g, label, skip_membership);
    double find_ms = ms_since(t_find);
    auto t_oracle = std::chrono::steady_clock::now();
    gallai::LongestPathReport report =
        gallai::longest_path_report(g, budget);
    bool ok = std::binary_search(report.gallai_set.begin(),
                                 report.gallai_set.end(), result.vertex);
    any_failed |= !ok;
    any_truncated |= report.truncated;
    json ms = {{"find", find_ms}, {"oracle", ms_since(t_oracle)}};
    out << report_json(g, label, result, report.gallai_set, ok,
                       std::move(ms))
               .dump()
        << "\n";
  }
  if (any_failed) return kExitVerifyFailed;
  if (any_truncated) return kExitTruncated;
  return 0;
}

int run_oracle(std::ostream& out, const std::string& file,
               const std::string& format, uint64_t budget) {
  for (const Graph& g : read_graphs(file, format)) {
    auto start = std::chrono::steady_clock::now();
    gallai::LongestPathReport report =
        gallai::longest_path_report(g, budget);
    json paths = json::array();
    for (const gallai::Path& p : report.paths) paths.push_back(p.vertices);
    json line = {{"input", input_id(g)},
                 {"length", report.length},
                 {"path_count", report.path_count},
                 {"paths", paths},
                 {"gallai", report.gallai_set},
                 {"truncated", report.truncated},
                 {"ms", {{"oracle", ms_since(start)}}}};
    out << line.dump() << "\n";
  }
  return 0;
}

int run_gen(std::ostream& out, const std::string& family, int n,
            const std::string& class_name, uint64_t seed, int count) {
  if (family == "petersen") {
    out << gallai::to_graph6(gallai::petersen()) << "\n";
  } else if (family == "walther_b") {
    out << gallai::to_graph6(gallai::walther_b()) << "\n";
  } else if (family == "walther_b_plus") {
    out << gallai::to_graph6(gallai::walther_b_plus()) << "\n";
  } else if (family == "enumerate") {
    gallai::enumerate_connected(
        n, [&](const Graph& g) { out << gallai::to_graph6(g) << "\n"; });
  } else {  // random_class
    ClassLabel label = resolve_class(class_name);
    for (int i = 0; i < count; ++i) {
      auto g = gallai::random_class_graph(label, n, seed + i);
      if (g)
        out << gallai::to_graph6(*g) << "\n";
      else
        out << "# no instance (class=" << class_name << " n=" << n
            << " seed=" << seed + i << ")\n";
    }
  }
  return 0;
}

int run_sweep(std::ostream& out, const std::string& class_name, int nmax) {
  ClassLabel label = resolve_class(class_name);
  if (nmax < 1 || nmax > 9)
    gallai::raise(Errc::unsupported_size, "sweep supports --nmax 1..9");
  auto start = std::chrono::steady_clock::now();
  std::map<std::string, int> branches;
  json failures = json::array();
  int total = 0;
  gallai::sweep_connected(
      nmax, gallai::class_grow_pred(label), [&](const Graph& g) {
        ++total;
        gallai::GallaiResult result = gallai::find_gallai(g, label, true);
        ++branches[gallai::branch_name(result.branch)];
        std::string trouble;
        if (!gallai::validate_certificate(g, result, label))
          trouble = "certificate rejected";
        else if (auto set = gallai::gallai_vertices(g);
                 !std::binary_search(set.begin(), set.end(),
                                     result.vertex))
          trouble = "vertex not in oracle Gallai set";
        if (!trouble.empty())
          failures.push_back(
              {{"input", input_id(g)}, {"reason", trouble}});
      });
  json summary = {{"class", gallai::class_name(label)},
                  {"nmax", nmax},
                  {"graphs", total},
                  {"branches", branches},
                  {"failures", failures},
                  {"ms", ms_since(start)}};
  out << summary.dump() << "\n";
  return failures.empty() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallai vertex finders for (claw,H)-free and (P5,H)-free "
               "graph classes"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string format = "graph6";
  std::string klass;
  std::string out_path;
  std::string family;
  uint64_t budget = gallai::kDefaultPathBudget;
  uint64_t seed = 0;
  int n = 0;
  int count = 1;
  int nmax = 7;
  bool skip_membership = false;

  const std::vector<std::string> class_names = {
      "claw-p3-2p1", "claw-k3-2p1", "claw-2p2-p1", "claw-p2-3p1",
      "p5-triangle", "p5-paw",      "p5-diamond"};

  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file,
                    "input file, '-' for stdin (graph6: one record per "
                    "line, '#' comments allowed)");
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
  };
  auto add_class = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--class", klass, "class label")
                    ->check(CLI::IsMember(class_names));
    if (required) opt->required();
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "class memberships and pattern hits per input graph");
  add_input(classify);

  CLI::App* find = app.add_subcommand(
      "find", "run the class finder and print the certificate report");
  add_input(find);
  add_class(find, true);
  find->add_flag("--skip-membership", skip_membership,
                 "trust the caller that inputs are in class");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the finder and check its vertex against the oracle");
  add_input(verify);
  add_class(verify, true);
  verify->add_flag("--skip-membership", skip_membership,
                   "trust the caller that inputs are in class");
  verify->add_option("--budget", budget, "longest-path enumeration budget");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive longest-path report (lengths, paths, Gallai set)");
  add_input(oracle);
  oracle->add_option("--budget", budget, "longest-path enumeration budget");

  CLI::App* gen =
      app.add_subcommand("gen", "emit named or generated graphs as graph6");
  gen->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember({"petersen", "walther_b", "walther_b_plus",
                             "random_class", "enumerate"}));
  gen->add_option("--n", n, "target order (random_class, enumerate)");
  add_class(gen, false);
  gen->add_option("--seed", seed, "seed for random_class");
  gen->add_option("--count", count, "number of random instances");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "exhaustive finder-vs-oracle check over a whole class");
  add_class(sweep, true);
  sweep->add_option("--nmax", nmax, "largest order to enumerate (<= 9)");

  CLI11_PARSE(app, argc, argv);

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "cannot open output file " << out_path << "\n";
      return 2;
    }
    out = &out_file;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(*out, file, format);
    if (app.got_subcommand(find))
      return run_find(*out, file, format, klass, skip_membership);
    if (app.got_subcommand(verify))
      return run_verify(*out, file, format, klass, budget, skip_membership);
    if (app.got_subcommand(oracle)) return run_oracle(*out, file, format, budget);
    if (app.got_subcommand(gen))
      return run_gen(*out, family, n, klass, seed, count);
    if (app.got_subcommand(sweep)) return run_sweep(*out, klass, nmax);
  } catch (const gallai::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}
