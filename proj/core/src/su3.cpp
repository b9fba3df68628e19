#include "taitmap/su3.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <string>

namespace taitmap::su3 {
namespace {

using cd = std::complex<double>;

// Residual below which a vector is treated as lying in a span. Well above
// rounding noise, well below any angle the sampler produces on purpose.
constexpr double kSpanTol = 1e-7;

Complex3Vector gaussian_vector(Rng& rng) {
  std::normal_distribution<double> normal;
  Complex3Vector v;
  for (int i = 0; i < 3; ++i) v(i) = cd(normal(rng), normal(rng));
  return v;
}

cd random_phase(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

/// Orthonormal basis of span(vectors), dropping near-dependent ones.
std::vector<Complex3Vector> orthonormal_span(const std::vector<Complex3Vector>& vectors) {
  std::vector<Complex3Vector> basis;
  for (Complex3Vector v : vectors) {
    for (const auto& b : basis) v -= b * b.dot(v);
    const double n = v.norm();
    if (n > kSpanTol) basis.push_back(v / n);
  }
  return basis;
}

Complex3Vector project_out(Complex3Vector v, const std::vector<Complex3Vector>& basis) {
  for (const auto& b : basis) v -= b * b.dot(v);
  return v;
}

}  // namespace

UnitaryMatrix3 phi() {
  UnitaryMatrix3 m = UnitaryMatrix3::Zero();
  m(0, 0) = 1;
  m(1, 1) = -1;
  m(2, 2) = -1;
  return m;
}

double line_overlap(const Complex3Vector& u, const Complex3Vector& v) { return std::abs(u.dot(v)); }

UnitaryMatrix3 reflection_from_line(const Complex3Vector& v, double tol) {
  if (std::abs(v.norm() - 1.0) > tol) {
    throw Error(ErrorKind::kDomain, "reflection_from_line needs a unit vector (norm " +
                                        std::to_string(v.norm()) + ")");
  }
  return 2.0 * v * v.adjoint() - UnitaryMatrix3::Identity();
}

void require_su3(const UnitaryMatrix3& m, double tol) {
  const double unitarity = (m.adjoint() * m - UnitaryMatrix3::Identity()).norm();
  const double det = std::abs(m.determinant() - 1.0);
  if (unitarity > tol || det > tol) {
    throw Error(ErrorKind::kNotInSU3, "matrix not in SU(3): ||M*M - I|| = " + std::to_string(unitarity) +
                                          ", |det M - 1| = " + std::to_string(det));
  }
}

bool is_conjugate_to_phi(const UnitaryMatrix3& m, double tol) {
  require_su3(m, tol);
  const UnitaryMatrix3 id = UnitaryMatrix3::Identity();
  return (m * m - id).norm() < tol && (m - id).norm() > tol;
}

Complex3Vector one_eigenvector(const UnitaryMatrix3& m, double tol) {
  const UnitaryMatrix3 id = UnitaryMatrix3::Identity();
  if ((m * m - id).norm() >= tol || (m - id).norm() <= tol) {
    throw Error(ErrorKind::kEigenspace, "matrix is not of order two; no 1-eigenline");
  }
  const UnitaryMatrix3 projector = 0.5 * (m + id);
  Eigen::Index best = 0;
  projector.colwise().norm().maxCoeff(&best);
  const Complex3Vector column = projector.col(best);
  return column / column.norm();
}

Lemma5Report check_lemma5(const UnitaryMatrix3& s, const UnitaryMatrix3& t, double tol) {
  if (!is_conjugate_to_phi(s, tol) || !is_conjugate_to_phi(t, tol)) {
    throw Error(ErrorKind::kDomain, "check_lemma5 needs S and T conjugate to phi");
  }
  Lemma5Report report;
  const Complex3Vector vs = one_eigenvector(s, tol);
  const Complex3Vector vt = one_eigenvector(t, tol);
  const UnitaryMatrix3 st = s * t;
  const UnitaryMatrix3 id = UnitaryMatrix3::Identity();

  report.overlap = line_overlap(vs, vt);
  report.lines_orthogonal = report.overlap < tol;
  report.product_conjugate = is_conjugate_to_phi(st, tol);
  report.product_order_defect = (st * st - id).norm();
  report.trace_identity_defect = std::abs(st.trace() - cd(4 * report.overlap * report.overlap - 1, 0));
  report.max_deviation = report.trace_identity_defect;

  if (report.product_conjugate) {
    const Complex3Vector vst = one_eigenvector(st, tol);
    const double worst = std::max(line_overlap(vst, vs), line_overlap(vst, vt));
    report.product_line_overlap = worst;
    report.triple_orthogonal = worst < tol;
    report.max_deviation = std::max({report.max_deviation, report.overlap, report.product_order_defect,
                                     std::abs(st.trace() + 1.0), worst});
  }
  report.biconditional_holds = report.product_conjugate == report.lines_orthogonal &&
                               (!report.product_conjugate || report.triple_orthogonal);
  return report;
}

double admissibility_defect(const CombinatorialMap& map, const Decoration& d) {
  if (d.lines.size() != map.num_edges()) {
    throw Error(ErrorKind::kInadmissible, "decoration has " + std::to_string(d.lines.size()) +
                                              " lines for " + std::to_string(map.num_edges()) + " edges");
  }
  double worst = 0;
  for (const auto& line : d.lines) worst = std::max(worst, std::abs(line.norm() - 1.0));
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    const auto& rot = map.rotation(v);
    for (int i = 0; i < 3; ++i) {
      const EdgeId a = map.edge_of(rot[i]);
      const EdgeId b = map.edge_of(rot[(i + 1) % 3]);
      worst = std::max(worst, a == b ? 1.0 : line_overlap(d.lines[a], d.lines[b]));
    }
  }
  return worst;
}

bool is_admissible(const CombinatorialMap& map, const Decoration& d, double tol) {
  return admissibility_defect(map, d) < tol;
}

double vertex_relation_defect(const CombinatorialMap& map, const Representation& r) {
  double worst = 0;
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    const auto& rot = map.rotation(v);
    const UnitaryMatrix3 product = r.matrices.at(map.edge_of(rot[0])) * r.matrices.at(map.edge_of(rot[1])) *
                                   r.matrices.at(map.edge_of(rot[2]));
    worst = std::max(worst, (product - UnitaryMatrix3::Identity()).norm());
  }
  return worst;
}

Representation decoration_to_representation(const CombinatorialMap& map, const Decoration& d, double tol) {
  const double defect = admissibility_defect(map, d);
  if (defect >= tol) {
    throw Error(ErrorKind::kInadmissible,
                "decoration is not admissible (defect " + std::to_string(defect) + ")");
  }
  Representation r;
  r.matrices.reserve(d.lines.size());
  for (const auto& line : d.lines) r.matrices.push_back(reflection_from_line(line, tol));
  return r;
}

Decoration representation_to_decoration(const Representation& r, double tol) {
  Decoration d;
  d.lines.reserve(r.matrices.size());
  for (const auto& m : r.matrices) d.lines.push_back(one_eigenvector(m, tol));
  return d;
}

Complex3Vector random_unit_vector(Rng& rng) {
  const Complex3Vector v = gaussian_vector(rng);
  return v / v.norm();
}

UnitaryMatrix3 random_su3(Rng& rng) {
  UnitaryMatrix3 g;
  for (int c = 0; c < 3; ++c) g.col(c) = gaussian_vector(rng);
  Eigen::HouseholderQR<UnitaryMatrix3> qr(g);
  UnitaryMatrix3 q = qr.householderQ();
  const UnitaryMatrix3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so Q is Haar distributed, then rotate the
  // determinant onto 1.
  for (int i = 0; i < 3; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  const cd det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / 3.0);
  return q;
}

Sample sample_admissible_decoration(const CombinatorialMap& map, const SampleOptions& options) {
  const std::size_t ne = map.num_map_edges();
  for (EdgeId e = 0; e < ne; ++e) {
    const auto [u, w] = map.edge_endpoints(e);
    if (u == w) {
      throw Error(ErrorKind::kRetriesExhausted, "edge " + std::to_string(e) +
                                                    " is a self-loop; no admissible decoration exists");
    }
  }
  for (const auto& [e, line] : options.pinned) {
    if (e >= map.num_edges() || std::abs(line.norm() - 1.0) > kDefaultTol) {
      throw Error(ErrorKind::kDomain, "pinned line must be a unit vector on an existing edge");
    }
  }

  Rng rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Visit order: breadth-first, starting each component from a vertex that
  // touches a pinned edge when there is one.
  std::vector<VertexId> order;
  {
    std::vector<bool> seen(map.num_vertices(), false);
    std::vector<VertexId> starts;
    for (const auto& [e, line] : options.pinned) {
      if (e < ne) starts.push_back(map.edge_endpoints(e)[0]);
    }
    for (VertexId v = 0; v < map.num_vertices(); ++v) starts.push_back(v);
    for (const VertexId s : starts) {
      if (seen[s]) continue;
      seen[s] = true;
      std::queue<VertexId> queue;
      queue.push(s);
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        order.push_back(v);
        for (const HalfEdgeId h : map.rotation(v)) {
          const VertexId w = map.vertex_of(map.twin(h));
          if (!seen[w]) {
            seen[w] = true;
            queue.push(w);
          }
        }
      }
    }
  }

  for (std::size_t attempt = 1; attempt <= options.max_retries; ++attempt) {
    std::vector<std::optional<Complex3Vector>> lines(map.num_edges());
    for (const auto& [e, line] : options.pinned) lines[e] = line;

    // Fixed lines at v other than those on edge `skip`.
    auto fixed_at = [&](VertexId v, EdgeId skip, std::vector<Complex3Vector>& out) {
      for (const HalfEdgeId h : map.rotation(v)) {
        const EdgeId e = map.edge_of(h);
        if (e != skip && lines[e]) out.push_back(*lines[e]);
      }
    };

    bool conflict = false;
    for (const VertexId v : order) {
      for (;;) {
        EdgeId best = 0;
        std::vector<Complex3Vector> best_basis;
        bool found = false;
        for (const HalfEdgeId h : map.rotation(v)) {
          const EdgeId e = map.edge_of(h);
          if (lines[e]) continue;
          std::vector<Complex3Vector> constraints;
          fixed_at(v, e, constraints);
          fixed_at(map.vertex_of(map.twin(h)), e, constraints);
          auto basis = orthonormal_span(constraints);
          if (!found || basis.size() > best_basis.size()) {
            best = e;
            best_basis = std::move(basis);
            found = true;
          }
        }
        if (!found) break;
        if (best_basis.size() == 3) {
          conflict = true;
          break;
        }

        Complex3Vector chosen;
        if (best_basis.size() == 2) {
          // Eigen conjugates complex cross products, so this is orthogonal to both.
          chosen = best_basis[0].cross(best_basis[1]);
        } else {
          std::vector<Complex3Vector> reusable;
          if (unit(rng) < options.reuse_probability) {
            for (const auto& other : lines) {
              if (!other || project_out(*other, best_basis).norm() < 1.0 - kSpanTol) continue;
              const bool duplicate = std::any_of(reusable.begin(), reusable.end(), [&](const auto& r) {
                return line_overlap(r, *other) > 1.0 - kSpanTol;
              });
              if (!duplicate) reusable.push_back(*other);
            }
          }
          if (!reusable.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, reusable.size() - 1);
            chosen = reusable[pick(rng)];
          } else {
            chosen = project_out(gaussian_vector(rng), best_basis);
          }
        }
        lines[best] = Complex3Vector(chosen.normalized() * random_phase(rng));
      }
      if (conflict) break;
    }
    if (conflict) continue;

    Sample sample;
    sample.attempts = attempt;
    for (auto& line : lines) sample.decoration.lines.push_back(line ? *line : random_unit_vector(rng));
    if (admissibility_defect(map, sample.decoration) < kDefaultTol) return sample;
  }
  throw Error(ErrorKind::kRetriesExhausted,
              "no admissible decoration found in " + std::to_string(options.max_retries) + " attempts");
}

}  // namespace taitmap::su3
