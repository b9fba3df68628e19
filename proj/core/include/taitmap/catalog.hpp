#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taitmap/planar_map.hpp"

namespace taitmap::catalog {

CombinatorialMap circle();
CombinatorialMap theta();
CombinatorialMap k4();
/// n-gonal prism with its standard planar rotation. prism(2) is the
/// six-edge multigraph made of two digons joined by two rungs.
CombinatorialMap prism(std::size_t n);
CombinatorialMap cube();
CombinatorialMap dodecahedron();
/// Built with its usual pentagon/pentagram drawing; the rotation is not
/// planar, so the map is only meaningful to the coloring oracle.
CombinatorialMap petersen();

/// Simple graph from a straight-line drawing: rotations are the neighbours
/// sorted by angle, counterclockwise.
CombinatorialMap from_drawing(const std::vector<std::pair<double, double>>& points,
                              const std::vector<std::pair<VertexId, VertexId>>& edges,
                              Planarity planarity = Planarity::kRequire);

/// Family lookup for the command line: circle, theta, k4, prism <n>, cube,
/// dodecahedron, petersen.
CombinatorialMap generate(std::string_view family, std::optional<std::size_t> param = std::nullopt);

const std::vector<std::string>& family_names();

struct Entry {
  std::string name;
  CombinatorialMap map;
};

/// Every fixed family member used by the verification campaigns.
std::vector<Entry> standard_catalog();

/// Replaces edge e by a path through a new digon (three more edges).
/// Preserves planarity and bipartiteness.
CombinatorialMap insert_bigon(const CombinatorialMap& map, EdgeId e);

/// Subdivides the edges under face positions i and j and joins the two new
/// vertices by a chord drawn inside the face.
CombinatorialMap add_chord(const CombinatorialMap& map, FaceId face, std::size_t i, std::size_t j);

/// Two parallel chords across the face, between the edges at positions i and
/// j, enclosing a new square. Preserves bipartiteness when the face degree
/// and j - i are both even.
CombinatorialMap add_ladder(const CombinatorialMap& map, FaceId face, std::size_t i, std::size_t j);

/// Connected planar trivalent map with at least `min_edges` edges grown from
/// theta by random bigon insertions and chords. With `bipartite`, chords are
/// replaced by parity-preserving ladders.
CombinatorialMap random_planar_cubic(std::uint64_t seed, std::size_t min_edges, bool bipartite);

}  // namespace taitmap::catalog
