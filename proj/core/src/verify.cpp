#include "taitmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "taitmap/catalog.hpp"
#include "taitmap/laurent.hpp"
#include "taitmap/map_io.hpp"
#include "taitmap/su3.hpp"

namespace taitmap::verify {
namespace {

void record(PropertyResult& p, bool ok, double deviation = 0) {
  ++p.trials;
  if (!ok) ++p.failures;
  p.max_deviation = std::max(p.max_deviation, deviation);
}

std::string describe_vector(const su3::Complex3Vector& v) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (int i = 0; i < 3; ++i) out << (i ? " " : "") << v(i).real() << (v(i).imag() < 0 ? "" : "+") << v(i).imag() << "i";
  return out.str();
}

std::string describe_matrix(const su3::UnitaryMatrix3& m) {
  std::ostringstream out;
  for (int r = 0; r < 3; ++r) out << "  [" << describe_vector(m.row(r).transpose()) << "]\n";
  return out.str();
}

}  // namespace

bool Report::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
}

ConservationCheck check_conservation(const ReductionTrace<BigInt>& trace) {
  ConservationCheck check;
  if (trace.nodes.empty()) return check;
  std::vector<TaitCount> counts;
  counts.reserve(trace.nodes.size());
  for (const auto& node : trace.nodes) counts.push_back(count_tait(node.graph));

  const TaitCount& target = counts.front();
  std::map<std::size_t, BigInt> frontier{{0, BigInt(1)}};
  auto gap = [&] {
    BigInt sum = 0;
    for (const auto& [id, coefficient] : frontier) sum += coefficient * counts[id];
    return BigInt(abs(sum - target));
  };
  ++check.frontiers_checked;
  check.worst_gap = gap();
  for (std::size_t id = 0; id < trace.nodes.size(); ++id) {
    const auto& node = trace.nodes[id];
    if (node.children.empty()) continue;
    const BigInt coefficient = frontier.at(id) * node.multiplier;
    frontier.erase(id);
    for (const std::size_t c : node.children) frontier[c] = coefficient;
    ++check.frontiers_checked;
    check.worst_gap = std::max(check.worst_gap, gap());
  }
  return check;
}

Report theorem1(const Options& options) {
  Report report{"theorem1", options.seed, 0, options.tol, {}, {}};
  PropertyResult chi{"chi(M(G)) == |Tait(G)|"};
  PropertyResult p3_at_one{"P3(G)(1) == |Tait(G)|"};
  PropertyResult symmetric{"P3(G)(q) == P3(G)(1/q)"};
  for (const auto& [name, map] : catalog::standard_catalog()) {
    if (!map.is_planar() || !is_bipartite(map)) continue;
    ++report.trials;
    const TaitCount tait = count_tait(map);
    const BigInt euler = euler_characteristic(map);
    const LaurentPoly poly = p3(map);
    const Rational at_one = evaluate(poly, 1);
    record(chi, euler == tait, static_cast<double>(abs(euler - tait)));
    record(p3_at_one, at_one == Rational(tait), static_cast<double>(abs(at_one - Rational(tait))));
    record(symmetric, poly == poly.mirrored());
    if (report.failing_instance.empty() && (euler != tait || at_one != Rational(tait) || poly != poly.mirrored())) {
      report.failing_instance = "# " + name + ": chi=" + euler.str() + " tait=" + tait.str() +
                                " P3=" + to_string(poly) + "\n" + serialize_map(map);
    }
  }
  report.properties = {chi, p3_at_one, symmetric};
  return report;
}

Report lemma5(const Options& options) {
  Report report{"lemma5", options.seed, options.trials, options.tol, {}, {}};
  PropertyResult orthogonal{"orthogonal lines => ST ~ Phi, triple orthogonal"};
  PropertyResult skew{"non-orthogonal lines => ST not ~ Phi"};
  PropertyResult trace{"tr(ST) == 4|<vS,vT>|^2 - 1"};
  su3::Rng rng(options.seed);
  std::uniform_real_distribution<double> overlap_dist(0.1, 1.0);
  for (std::size_t i = 0; i < options.trials; ++i) {
    su3::Complex3Vector u, v;
    const bool make_orthogonal = i % 2 == 0;
    if (make_orthogonal) {
      const su3::UnitaryMatrix3 frame = su3::random_su3(rng);
      u = frame.col(0);
      v = frame.col(1);
    } else {
      // Every 50th skew pair uses S = T.
      const su3::UnitaryMatrix3 frame = su3::random_su3(rng);
      const double c = i % 50 == 1 ? 1.0 : overlap_dist(rng);
      u = frame.col(0);
      v = c * frame.col(0) + std::sqrt(std::max(0.0, 1.0 - c * c)) * frame.col(1);
    }
    const su3::UnitaryMatrix3 s = su3::reflection_from_line(u, su3::kDefaultTol);
    const su3::UnitaryMatrix3 t = su3::reflection_from_line(v, su3::kDefaultTol);
    su3::Lemma5Report r;
    try {
      r = su3::check_lemma5(s, t, options.tol);
    } catch (const Error& e) {
      record(make_orthogonal ? orthogonal : skew, false, 1.0);
      if (report.failing_instance.empty()) {
        report.failing_instance = "pair " + std::to_string(i) + ": " + e.what() + "\nS =\n" + describe_matrix(s) +
                                  "T =\n" + describe_matrix(t);
      }
      continue;
    }
    const bool ok = r.biconditional_holds && r.max_deviation < options.tol;
    record(make_orthogonal ? orthogonal : skew, ok && r.product_conjugate == make_orthogonal,
           r.max_deviation);
    record(trace, r.trace_identity_defect < options.tol, r.trace_identity_defect);
    if (!ok && report.failing_instance.empty()) {
      report.failing_instance = "pair " + std::to_string(i) + "\nS =\n" + describe_matrix(s) + "T =\n" +
                                describe_matrix(t);
    }
  }
  report.properties = {orthogonal, skew, trace};
  return report;
}

Report roundtrip(const Options& options) {
  Report report{"roundtrip", options.seed, options.trials, options.tol, {}, {}};
  PropertyResult sampled{"sampled decoration admissible"};
  PropertyResult relation{"vertex products == I"};
  PropertyResult conjugate{"edge images conjugate to Phi"};
  PropertyResult back{"decoration -> rep -> decoration is identity"};
  PropertyResult phase{"reflection invariant under line phase"};

  const std::vector<std::pair<std::string, CombinatorialMap>> graphs{
      {"theta", catalog::theta()}, {"k4", catalog::k4()}, {"prism(3)", catalog::prism(3)}, {"cube", catalog::cube()}};
  su3::Rng phases(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (std::size_t i = 0; i < options.trials; ++i) {
    const auto& [name, map] = graphs[i % graphs.size()];
    su3::SampleOptions sample_options;
    sample_options.seed = options.seed + 7919 * (i + 1);
    sample_options.max_retries = 10000;
    su3::Sample sample;
    try {
      sample = su3::sample_admissible_decoration(map, sample_options);
    } catch (const Error& e) {
      record(sampled, false, 1.0);
      if (report.failing_instance.empty()) report.failing_instance = "# " + name + ": " + e.what() + "\n" + serialize_map(map);
      continue;
    }
    const su3::Decoration& d = sample.decoration;
    const double defect = su3::admissibility_defect(map, d);
    record(sampled, defect < options.tol, defect);

    su3::Representation rep;
    su3::Decoration recovered;
    try {
      rep = su3::decoration_to_representation(map, d, options.tol);
      recovered = su3::representation_to_decoration(rep, options.tol);
    } catch (const Error& e) {
      record(back, false, 1.0);
      if (report.failing_instance.empty()) report.failing_instance = "# " + name + ": " + e.what() + "\n" + serialize_map(map);
      continue;
    }
    const double vertex_defect = su3::vertex_relation_defect(map, rep);
    record(relation, vertex_defect < options.tol, vertex_defect);

    bool all_conjugate = true;
    double worst_phase = 0;
    for (std::size_t e = 0; e < d.lines.size(); ++e) {
      all_conjugate &= su3::is_conjugate_to_phi(rep.matrices[e], options.tol);
      const su3::Complex3Vector rotated = d.lines[e] * std::polar(1.0, angle(phases));
      worst_phase = std::max(worst_phase, (su3::reflection_from_line(rotated) - rep.matrices[e]).norm());
    }
    record(conjugate, all_conjugate);
    record(phase, worst_phase < su3::kExactTol, worst_phase);

    double worst = 0;
    for (std::size_t e = 0; e < d.lines.size(); ++e) {
      worst = std::max(worst, 1.0 - su3::line_overlap(d.lines[e], recovered.lines[e]));
    }
    record(back, worst <= options.tol, worst);

    const bool ok = defect < options.tol && vertex_defect < options.tol && all_conjugate && worst <= options.tol;
    if (!ok && report.failing_instance.empty()) {
      std::ostringstream out;
      out << "# " << name << " sample " << i << "\n";
      for (std::size_t e = 0; e < d.lines.size(); ++e) out << "line " << e << ": " << describe_vector(d.lines[e]) << "\n";
      report.failing_instance = out.str();
    }
  }
  report.properties = {sampled, relation, conjugate, back, phase};
  return report;
}

Report conservation(const Options& options) {
  Report report{"conservation", options.seed, 0, options.tol, {}, {}};
  PropertyResult frontier{"frontier sum of multiplier * |Tait| == |Tait(root)|"};
  PropertyResult decreasing{"edge count strictly decreases along the trace"};
  for (const auto& [name, map] : catalog::standard_catalog()) {
    if (!map.is_planar() || map.num_edges() > 12) continue;
    Reduction<BigInt> reduction;
    try {
      reduction = reduce(map, euler_weights());
    } catch (const IrreducibleError&) {
      continue;
    }
    ++report.trials;
    const ConservationCheck check = check_conservation(reduction.trace);
    frontier.trials += check.frontiers_checked;
    if (check.worst_gap != 0) ++frontier.failures;
    frontier.max_deviation = std::max(frontier.max_deviation, static_cast<double>(check.worst_gap));

    bool shrinking = true;
    for (const auto& node : reduction.trace.nodes) {
      if (node.parent != kNoParent) {
        shrinking &= node.graph.num_edges() < reduction.trace.nodes[node.parent].graph.num_edges();
      }
    }
    record(decreasing, shrinking);
    if ((check.worst_gap != 0 || !shrinking) && report.failing_instance.empty()) {
      report.failing_instance = "# " + name + "\n" + serialize_map(map);
    }
  }
  report.properties = {frontier, decreasing};
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "lemma5", "roundtrip", "conservation"};
  return names;
}

Report run(std::string_view suite, const Options& options) {
  if (suite == "theorem1") return theorem1(options);
  if (suite == "lemma5") return lemma5(options);
  if (suite == "roundtrip") return roundtrip(options);
  if (suite == "conservation") return conservation(options);
  throw Error(ErrorKind::kDomain, "unknown verification suite '" + std::string(suite) + "'");
}

std::string format_report(const Report& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " seed " << report.seed << " trials " << report.trials << " tol "
      << report.tol << "\n";
  for (const auto& p : report.properties) {
    out << (p.passed() ? "PASS " : "FAIL ") << p.name << ": " << p.trials << " checks, " << p.failures
        << " failures, max deviation " << std::scientific << std::setprecision(3) << p.max_deviation
        << std::defaultfloat << "\n";
  }
  out << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
  if (!report.failing_instance.empty()) out << "failing instance:\n" << report.failing_instance;
  return out.str();
}

}  // namespace taitmap::verify
