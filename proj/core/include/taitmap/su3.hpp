#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "taitmap/planar_map.hpp"

namespace taitmap::su3 {

using Complex3Vector = Eigen::Vector3cd;
using UnitaryMatrix3 = Eigen::Matrix3cd;

/// Acceptance-level tolerance and the one used for algebraically exact
/// constructions.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kExactTol = 1e-12;

/// diag(1, -1, -1).
UnitaryMatrix3 phi();

/// |<u, v>|; equals 1 exactly when u and v span the same line.
double line_overlap(const Complex3Vector& u, const Complex3Vector& v);

/// 2 v v^* - I: the order-2 element of SU(3) whose 1-eigenspace is the line
/// of v. Unchanged by v -> e^{i theta} v.
UnitaryMatrix3 reflection_from_line(const Complex3Vector& v, double tol = kDefaultTol);

/// Throws kNotInSU3 unless M is unitary with determinant one within tol.
void require_su3(const UnitaryMatrix3& m, double tol);

/// Order two and not the identity, within tol; for SU(3) this is exactly
/// conjugacy to phi().
bool is_conjugate_to_phi(const UnitaryMatrix3& m, double tol = kDefaultTol);

/// Unit vector spanning the image of (M + I) / 2, the 1-eigenspace of an
/// order-2 matrix. Throws kEigenspace when M is not conjugate to phi().
Complex3Vector one_eigenvector(const UnitaryMatrix3& m, double tol = kDefaultTol);

struct Lemma5Report {
  double overlap = 0;             // |<v_S, v_T>|
  bool lines_orthogonal = false;  // overlap < tol
  bool product_conjugate = false;
  double product_order_defect = 0;  // ||(ST)^2 - I||
  double trace_identity_defect = 0;  // |tr(ST) - (4 overlap^2 - 1)|
  /// When ST is conjugate to phi: max(|<v_ST, v_S>|, |<v_ST, v_T>|).
  std::optional<double> product_line_overlap;
  bool triple_orthogonal = false;
  bool biconditional_holds = false;
  /// Largest quantity that should vanish for this pair.
  double max_deviation = 0;
};

/// Checks, for S and T conjugate to phi, that ST is conjugate to phi iff
/// their 1-eigenspaces are orthogonal, and that the 1-eigenspace of ST is
/// then orthogonal to both.
Lemma5Report check_lemma5(const UnitaryMatrix3& s, const UnitaryMatrix3& t, double tol = kDefaultTol);

/// A unit representative of a CP^2 point on every edge (free loops last).
struct Decoration {
  std::vector<Complex3Vector> lines;
};

/// Image of each edge meridian; vertex relations are checked numerically.
struct Representation {
  std::vector<UnitaryMatrix3> matrices;
};

/// Largest |<u, v>| over pairs of lines meeting at a vertex (1 at a self-loop),
/// and largest | ||v|| - 1 | over edges.
double admissibility_defect(const CombinatorialMap& map, const Decoration& d);
bool is_admissible(const CombinatorialMap& map, const Decoration& d, double tol = kDefaultTol);

/// Largest ||M_a M_b M_c - I|| over vertices, multiplied in rotation order.
double vertex_relation_defect(const CombinatorialMap& map, const Representation& r);

Representation decoration_to_representation(const CombinatorialMap& map, const Decoration& d,
                                            double tol = kDefaultTol);
Decoration representation_to_decoration(const Representation& r, double tol = kDefaultTol);

using Rng = std::mt19937_64;

Complex3Vector random_unit_vector(Rng& rng);
/// Haar-random element of SU(3).
UnitaryMatrix3 random_su3(Rng& rng);

struct SampleOptions {
  std::size_t max_retries = 1000;
  std::uint64_t seed = 1;
  /// Lines fixed before propagation starts, keyed by edge id.
  std::vector<std::pair<EdgeId, Complex3Vector>> pinned;
  /// Probability of reusing an existing compatible line instead of drawing a
  /// fresh one when an edge has a CP^1 or more of freedom.
  double reuse_probability = 0.5;
};

struct Sample {
  Decoration decoration;
  std::size_t attempts = 0;
};

/// Random admissible decoration by constraint propagation. Vertices are
/// visited breadth-first; at each vertex the unfixed incident edge with the
/// most constraints (fixed lines at both of its ends) is fixed next, to the
/// forced line or to a random line in the orthogonal complement. Restarts
/// when some edge has no admissible line; throws kRetriesExhausted after
/// max_retries attempts.
Sample sample_admissible_decoration(const CombinatorialMap& map, const SampleOptions& options);

}  // namespace taitmap::su3
