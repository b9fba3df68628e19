#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "taitmap/reduction.hpp"

namespace taitmap::verify {

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_deviation = 0;

  bool passed() const { return failures == 0; }
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tol = 0;
  std::vector<PropertyResult> properties;
  /// Serialized first failing instance, empty when everything passed.
  std::string failing_instance;

  bool passed() const;
};

struct Options {
  std::size_t trials = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 20261016;
};

/// chi = |Tait| and P3(1) = |Tait| on every bipartite planar catalog graph,
/// plus q <-> q^-1 symmetry of P3.
Report theorem1(const Options& options);
/// Seeded pairs of order-2 SU(3) elements from orthogonal and from
/// non-orthogonal lines; `trials` pairs in total, alternating constructions.
Report lemma5(const Options& options);
/// Sampled admissible decorations on theta, K4, prism(3) and the cube, pushed
/// through decoration -> representation -> decoration.
Report roundtrip(const Options& options);
/// Frontier sums of Tait counts along every reduction trace of the catalog
/// graphs with at most 12 edges.
Report conservation(const Options& options);

const std::vector<std::string>& suite_names();
/// Throws kDomain for an unknown suite.
Report run(std::string_view suite, const Options& options);

/// Plain text, one line per property.
std::string format_report(const Report& report);

struct ConservationCheck {
  std::size_t frontiers_checked = 0;
  /// Largest |sum - root count| over all frontiers; zero when conserved.
  BigInt worst_gap = 0;
};

/// Walks the trace in node order, replacing each expanded node by its
/// children, and compares sum(coefficient * count_tait(graph)) over the
/// frontier with count_tait(root) after every expansion.
ConservationCheck check_conservation(const ReductionTrace<BigInt>& trace);

}  // namespace taitmap::verify
