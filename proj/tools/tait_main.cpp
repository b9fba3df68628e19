// tait: command-line front end for Tait counts, reduction-based Euler
// characteristics, the sl3 polynomial and the verification campaigns.
//
// Exit codes: 0 ok, 1 parse/validation error, 2 irreducible graph,
// 3 not bipartite, 4 verification failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "taitmap/catalog.hpp"
#include "taitmap/laurent.hpp"
#include "taitmap/map_io.hpp"
#include "taitmap/reduction.hpp"
#include "taitmap/tait.hpp"
#include "taitmap/verify.hpp"

namespace {

using nlohmann::json;
using namespace taitmap;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIrreducible = 2;
constexpr int kExitNotBipartite = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return value.convert_to<std::int64_t>();
  return value.str();
}

template <class R>
std::string value_text(const R& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

template <class R>
json trace_to_json(const ReductionTrace<R>& trace) {
  json nodes = json::array();
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const auto& node = trace.nodes[i];
    json entry{{"id", i},
               {"depth", node.depth},
               {"edges", node.graph.num_edges()},
               {"multiplier", value_text(node.multiplier)},
               {"value", value_text(node.value)},
               {"children", node.children}};
    if (node.parent != kNoParent) entry["parent"] = node.parent;
    if (node.move) {
      entry["move"] = std::string(to_string(node.move->kind));
      entry["face"] = node.move->face.half_edges;
    } else {
      entry["move"] = "empty";
    }
    nodes.push_back(std::move(entry));
  }
  return nodes;
}

json report_to_json(const verify::Report& report) {
  json properties = json::array();
  for (const auto& p : report.properties) {
    properties.push_back({{"name", p.name},
                          {"trials", p.trials},
                          {"failures", p.failures},
                          {"max_deviation", p.max_deviation},
                          {"passed", p.passed()}});
  }
  json out{{"suite", report.suite}, {"seed", report.seed},      {"trials", report.trials},
           {"tol", report.tol},     {"properties", properties}, {"passed", report.passed()}};
  if (!report.failing_instance.empty()) out["failing_instance"] = report.failing_instance;
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIrreducible: return kExitIrreducible;
    case ErrorKind::kNotBipartite: return kExitNotBipartite;
    default: return kExitInvalid;
  }
}

struct Flags {
  std::string file;
  bool json = false;
  bool trace = false;
  std::optional<std::string> at;
  std::string ring = "euler";
  std::optional<std::uint64_t> shuffle_seed;
  std::string suite;
  std::optional<std::size_t> trials;
  double tol = 1e-9;
  std::uint64_t seed = verify::Options{}.seed;
  std::string family;
  std::optional<std::size_t> param;
};

int cmd_count(const Flags& f) {
  const CombinatorialMap map = parse_map(read_input(f.file), Planarity::kAllowNonPlanar);
  const TaitCount count = count_tait(map);
  if (f.json) {
    std::cout << json{{"count", big_to_json(count)}, {"planar", map.is_planar()}}.dump() << "\n";
  } else {
    std::cout << count << "\n";
  }
  return kExitOk;
}

template <class R>
int print_reduction(const Flags& f, const CombinatorialMap& map, const RelationWeights<R>& weights,
                    bool show_trace) {
  ReduceOptions options;
  options.shuffle_seed = f.shuffle_seed;
  const Reduction<R> reduction = reduce(map, weights, options);
  if (f.json) {
    json out{{"value", value_text(reduction.value)}};
    if (show_trace) out["trace"] = trace_to_json(reduction.trace);
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  if (show_trace) std::cout << format_trace(reduction.trace);
  std::cout << reduction.value << "\n";
  return kExitOk;
}

int cmd_euler(const Flags& f) {
  const CombinatorialMap map = parse_map(read_input(f.file));
  return print_reduction(f, map, euler_weights(), f.trace);
}

int cmd_reduce(const Flags& f) {
  const CombinatorialMap map = parse_map(read_input(f.file));
  if (f.ring == "p3") {
    if (!is_bipartite(map)) throw Error(ErrorKind::kNotBipartite, "P3 is defined for bipartite webs only");
    const RelationWeights<LaurentPoly> weights{quantum_integer(3), quantum_integer(2), LaurentPoly(1)};
    return print_reduction(f, map, weights, true);
  }
  return print_reduction(f, map, euler_weights(), true);
}

int cmd_p3(const Flags& f) {
  const CombinatorialMap map = parse_map(read_input(f.file));
  const LaurentPoly poly = p3(map);
  if (f.at) {
    const Rational value = evaluate(poly, parse_rational(*f.at));
    if (f.json) {
      std::cout << json{{"polynomial", to_string(poly)}, {"at", *f.at}, {"value", value.str()}}.dump() << "\n";
    } else {
      std::cout << value << "\n";
    }
    return kExitOk;
  }
  if (f.json) {
    json terms = json::object();
    for (const auto& [e, c] : poly.terms()) terms[std::to_string(e)] = big_to_json(c);
    std::cout << json{{"polynomial", to_string(poly)}, {"terms", terms}}.dump() << "\n";
  } else {
    std::cout << poly << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Flags& f) {
  std::vector<std::string> suites;
  if (f.suite == "all") {
    suites = verify::suite_names();
  } else {
    suites = {f.suite};
  }
  bool all_passed = true;
  json reports = json::array();
  for (const auto& suite : suites) {
    verify::Options options;
    options.tol = f.tol;
    options.seed = f.seed;
    options.trials = f.trials.value_or(suite == "roundtrip" ? 100 : 1000);
    const verify::Report report = verify::run(suite, options);
    all_passed &= report.passed();
    if (f.json) {
      reports.push_back(report_to_json(report));
    } else {
      std::cout << verify::format_report(report);
    }
  }
  if (f.json) std::cout << (reports.size() == 1 ? reports.front() : reports).dump(2) << "\n";
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_gen(const Flags& f) {
  const CombinatorialMap map = catalog::generate(f.family, f.param);
  if (f.json) {
    std::cout << json{{"family", f.family}, {"graph", serialize_map(map)}, {"edges", map.num_edges()},
                      {"planar", map.is_planar()}}
                     .dump()
              << "\n";
  } else {
    std::cout << serialize_map(map);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tait colourings, reduction-based Euler characteristics and the sl3 polynomial "
               "of planar trivalent graphs"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub, bool takes_file) {
    if (takes_file) sub->add_option("file", f.file, "graph file; '-' or absent reads stdin");
    sub->add_flag("--json", f.json, "machine-readable output");
  };

  auto* count = app.add_subcommand("count", "number of Tait colourings");
  add_common(count, true);

  auto* euler = app.add_subcommand("euler", "Euler characteristic via the reduction relations");
  add_common(euler, true);
  euler->add_flag("--trace", f.trace, "print the reduction tree");
  euler->add_option("--shuffle-seed", f.shuffle_seed, "pick moves at random with this seed");

  auto* p3cmd = app.add_subcommand("p3", "sl3 polynomial of a bipartite graph");
  add_common(p3cmd, true);
  p3cmd->add_option("--at", f.at, "evaluate at a rational q, e.g. 1 or -2/3");

  auto* reduce = app.add_subcommand("reduce", "print the full reduction trace");
  add_common(reduce, true);
  reduce->add_option("--ring", f.ring, "euler (integers) or p3 (Laurent polynomials)")
      ->check(CLI::IsMember({"euler", "p3"}));
  reduce->add_option("--shuffle-seed", f.shuffle_seed, "pick moves at random with this seed");

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  add_common(verify, false);
  std::vector<std::string> suite_choices = verify::suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", f.suite, "theorem1, lemma5, roundtrip, conservation or all")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--trials", f.trials, "random trials (lemma5 default 1000, roundtrip 100)");
  verify->add_option("--tol", f.tol, "numerical tolerance")->capture_default_str();
  verify->add_option("--seed", f.seed, "random seed")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "emit a catalog graph");
  add_common(gen, false);
  gen->add_option("family", f.family, "circle, theta, k4, prism, cube, dodecahedron, petersen")->required();
  gen->add_option("n", f.param, "size parameter for prism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*count) return cmd_count(f);
    if (*euler) return cmd_euler(f);
    if (*p3cmd) return cmd_p3(f);
    if (*reduce) return cmd_reduce(f);
    if (*verify) return cmd_verify(f);
    if (*gen) return cmd_gen(f);
  } catch (const IrreducibleError& e) {
    if (f.json) {
      std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()},
                        {"stuck_graph", serialize_map(e.stuck_graph())}}.dump()
                << "\n";
    } else {
      std::cerr << e.what() << "\nstuck graph:\n" << serialize_map(e.stuck_graph());
    }
    return kExitIrreducible;
  } catch (const Error& e) {
    if (f.json) {
      std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    } else {
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    }
    return exit_code_for(e.kind());
  }
  return kExitInvalid;
}
