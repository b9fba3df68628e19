#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "taitmap/error.hpp"

namespace taitmap {

using HalfEdgeId = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

/// Whether construction rejects rotation systems that fail the per-component
/// Euler formula. Non-planar maps are only useful to the coloring oracle.
enum class Planarity { kRequire, kAllowNonPlanar };

/// One vertex of the input: its caller-chosen id and the half-edges around
/// it in counterclockwise order. Must list exactly three half-edges.
struct VertexRotation {
  std::uint64_t vertex;
  std::vector<std::uint64_t> half_edges;
};

struct EdgePair {
  std::uint64_t a;
  std::uint64_t b;
};

/// A face is a cycle of the permutation phi = sigma o twin. Half-edge i runs
/// from vertices[i] to vertices[i + 1 mod degree] and lies on edges[i].
struct Face {
  std::vector<HalfEdgeId> half_edges;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t degree() const { return half_edges.size(); }
  bool operator==(const Face&) const = default;
};

/// Trivalent multigraph embedded by a rotation system, plus a count of
/// vertex-free circle components.
///
/// Half-edges are dense indices 0..2E-1. Vertices are numbered by the
/// smallest half-edge in their rotation, edges by their smaller half-edge,
/// faces by their smallest half-edge; free loops come after all other edges
/// in edge numbering. Instances are immutable.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  /// Builds from raw permutations. `twin` must be a fixed-point-free
  /// involution and every cycle of `next_at_vertex` must have length three.
  static CombinatorialMap from_permutations(std::vector<HalfEdgeId> twin,
                                            std::vector<HalfEdgeId> next_at_vertex,
                                            std::size_t free_loops,
                                            Planarity planarity = Planarity::kRequire);

  static CombinatorialMap empty() { return {}; }
  static CombinatorialMap circles(std::size_t count);

  std::size_t num_half_edges() const { return twin_.size(); }
  std::size_t num_vertices() const { return vertex_halves_.size(); }
  /// Edges carrying half-edges; excludes free loops.
  std::size_t num_map_edges() const { return twin_.size() / 2; }
  std::size_t free_loops() const { return free_loops_; }
  /// |E(G)|: every free loop counts as one edge.
  std::size_t num_edges() const { return num_map_edges() + free_loops_; }
  std::size_t num_faces() const { return faces_.size(); }
  bool is_empty() const { return twin_.empty() && free_loops_ == 0; }
  bool is_planar() const { return planar_; }

  HalfEdgeId twin(HalfEdgeId h) const { return twin_[h]; }
  HalfEdgeId next_at_vertex(HalfEdgeId h) const { return sigma_[h]; }
  /// phi(h) = sigma(twin(h)): the next half-edge along h's face.
  HalfEdgeId next_in_face(HalfEdgeId h) const { return sigma_[twin_[h]]; }
  VertexId vertex_of(HalfEdgeId h) const { return vertex_of_[h]; }
  EdgeId edge_of(HalfEdgeId h) const { return edge_of_[h]; }
  FaceId face_of(HalfEdgeId h) const { return face_of_[h]; }

  /// Rotation at v starting from its smallest half-edge.
  const std::array<HalfEdgeId, 3>& rotation(VertexId v) const { return vertex_halves_[v]; }
  /// The two half-edges of a map edge, smaller first.
  std::array<HalfEdgeId, 2> edge_half_edges(EdgeId e) const;
  std::array<VertexId, 2> edge_endpoints(EdgeId e) const;
  bool is_free_loop(EdgeId e) const { return e >= num_map_edges(); }

  std::span<const Face> faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }

  const std::vector<HalfEdgeId>& twin_table() const { return twin_; }
  const std::vector<HalfEdgeId>& rotation_table() const { return sigma_; }

  bool operator==(const CombinatorialMap& other) const {
    return twin_ == other.twin_ && sigma_ == other.sigma_ && free_loops_ == other.free_loops_;
  }

 private:
  std::vector<HalfEdgeId> twin_;
  std::vector<HalfEdgeId> sigma_;
  std::vector<VertexId> vertex_of_;
  std::vector<EdgeId> edge_of_;
  std::vector<FaceId> face_of_;
  std::vector<std::array<HalfEdgeId, 2>> edge_halves_;
  std::vector<std::array<HalfEdgeId, 3>> vertex_halves_;
  std::vector<Face> faces_;
  std::size_t free_loops_ = 0;
  bool planar_ = true;
};

/// Validating constructor from caller ids. Vertex and half-edge ids may be any
/// distinct non-negative integers; they are relabelled densely in sorted order.
CombinatorialMap build_map(std::span<const VertexRotation> vertex_rotations,
                           std::span<const EdgePair> edge_pairs,
                           std::size_t free_loops,
                           Planarity planarity = Planarity::kRequire);

std::span<const Face> faces(const CombinatorialMap& map);

bool is_bipartite(const CombinatorialMap& map);

/// Number of connected components that contain at least one vertex.
std::size_t count_vertex_components(const CombinatorialMap& map);

/// Copies of a then b; b's half-edges are shifted past a's.
CombinatorialMap disjoint_union(const CombinatorialMap& a, const CombinatorialMap& b);

/// Renames half-edges by `perm` (old id -> new id) and rebuilds. Used to check
/// that derived quantities do not depend on labelling.
CombinatorialMap relabel(const CombinatorialMap& map, std::span<const HalfEdgeId> perm);

}  // namespace taitmap
