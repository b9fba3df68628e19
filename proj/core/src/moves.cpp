#include "taitmap/moves.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace taitmap {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kFreeLoop: return "loop";
    case MoveKind::kBigon: return "bigon";
    case MoveKind::kTriangle: return "triangle";
    case MoveKind::kSquare: return "square";
  }
  return "?";
}

namespace {

constexpr HalfEdgeId kDropped = std::numeric_limits<HalfEdgeId>::max();

template <class T>
bool all_distinct(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

/// Throws unless `face` is a current face of `map` of the expected shape.
void require_face(const CombinatorialMap& map, const Face& face, std::size_t degree, MoveKind kind) {
  const bool known = !face.half_edges.empty() && face.half_edges.front() < map.num_half_edges() &&
                     map.face(map.face_of(face.half_edges.front())) == face;
  if (!known || !is_simple_face(face, degree)) {
    throw Error(ErrorKind::kInvalidMove, "face is not a " + std::string(to_string(kind)) + " of this map");
  }
}

/// Outer half-edge at the vertex where face half-edge h starts.
HalfEdgeId outer_at(const CombinatorialMap& map, HalfEdgeId h) { return map.next_at_vertex(h); }

/// Keeps the flagged half-edges, renumbering them in increasing order.
CombinatorialMap compact(const std::vector<bool>& keep, const std::vector<HalfEdgeId>& twin,
                         const std::vector<HalfEdgeId>& sigma, std::size_t free_loops) {
  std::vector<HalfEdgeId> index(keep.size(), kDropped);
  HalfEdgeId next = 0;
  for (HalfEdgeId h = 0; h < keep.size(); ++h) {
    if (keep[h]) index[h] = next++;
  }
  std::vector<HalfEdgeId> new_twin(next), new_sigma(next);
  for (HalfEdgeId h = 0; h < keep.size(); ++h) {
    if (!keep[h]) continue;
    new_twin[index[h]] = index[twin[h]];
    new_sigma[index[h]] = index[sigma[h]];
  }
  return CombinatorialMap::from_permutations(std::move(new_twin), std::move(new_sigma), free_loops);
}

/// Deletes the face's vertices and reconnects their outer half-edges along
/// `joins`. A chain of joins and old edges that ends at surviving half-edges
/// becomes one edge; a chain that closes up becomes a free loop.
CombinatorialMap remove_and_join(const CombinatorialMap& map, const Face& face,
                                 const std::vector<std::pair<HalfEdgeId, HalfEdgeId>>& joins) {
  std::vector<bool> removed_vertex(map.num_vertices(), false);
  for (const VertexId v : face.vertices) removed_vertex[v] = true;

  std::unordered_map<HalfEdgeId, HalfEdgeId> partner;
  for (const auto& [a, b] : joins) {
    partner[a] = b;
    partner[b] = a;
  }

  std::vector<bool> keep(map.num_half_edges());
  for (HalfEdgeId h = 0; h < keep.size(); ++h) keep[h] = !removed_vertex[map.vertex_of(h)];

  std::vector<HalfEdgeId> twin = map.twin_table();
  std::unordered_map<HalfEdgeId, bool> visited;
  for (HalfEdgeId h = 0; h < keep.size(); ++h) {
    if (!keep[h] || keep[map.twin(h)]) continue;
    HalfEdgeId cur = map.twin(h);
    for (;;) {
      const HalfEdgeId p = partner.at(cur);
      visited[cur] = visited[p] = true;
      const HalfEdgeId next = map.twin(p);
      if (keep[next]) {
        twin[h] = next;
        break;
      }
      cur = next;
    }
  }

  std::size_t loops = map.free_loops();
  for (const auto& [start, unused] : partner) {
    if (visited[start]) continue;
    ++loops;
    HalfEdgeId cur = start;
    do {
      const HalfEdgeId p = partner.at(cur);
      visited[cur] = visited[p] = true;
      cur = map.twin(p);
    } while (cur != start);
  }
  return compact(keep, twin, map.rotation_table(), loops);
}

}  // namespace

bool is_simple_face(const Face& face, std::size_t degree) {
  return face.degree() == degree && all_distinct(face.vertices) && all_distinct(face.edges);
}

std::vector<Move> available_moves(const CombinatorialMap& map) {
  std::vector<Move> moves;
  if (map.free_loops() > 0) moves.push_back({MoveKind::kFreeLoop, {}, 0});
  const std::pair<MoveKind, std::size_t> shapes[] = {
      {MoveKind::kBigon, 2}, {MoveKind::kTriangle, 3}, {MoveKind::kSquare, 4}};
  for (const auto& [kind, degree] : shapes) {
    for (const Face& face : map.faces()) {
      if (is_simple_face(face, degree)) moves.push_back({kind, face, 0});
    }
  }
  return moves;
}

std::optional<Move> find_move(const CombinatorialMap& map) {
  if (map.free_loops() > 0) return Move{MoveKind::kFreeLoop, {}, 0};
  for (const auto& [kind, degree] : {std::pair{MoveKind::kBigon, 2}, std::pair{MoveKind::kTriangle, 3},
                                     std::pair{MoveKind::kSquare, 4}}) {
    for (const Face& face : map.faces()) {
      if (is_simple_face(face, static_cast<std::size_t>(degree))) return Move{kind, face, 0};
    }
  }
  return std::nullopt;
}

CombinatorialMap apply_loop(const CombinatorialMap& map, std::size_t loop_index) {
  if (loop_index >= map.free_loops()) {
    throw Error(ErrorKind::kNoFreeLoop, "no free loop with index " + std::to_string(loop_index));
  }
  return CombinatorialMap::from_permutations(map.twin_table(), map.rotation_table(), map.free_loops() - 1);
}

CombinatorialMap apply_bigon(const CombinatorialMap& map, const Face& face) {
  require_face(map, face, 2, MoveKind::kBigon);
  const HalfEdgeId a = outer_at(map, face.half_edges[0]);
  const HalfEdgeId b = outer_at(map, face.half_edges[1]);
  return remove_and_join(map, face, {{a, b}});
}

CombinatorialMap apply_triangle(const CombinatorialMap& map, const Face& face) {
  require_face(map, face, 3, MoveKind::kTriangle);
  std::array<HalfEdgeId, 3> outer{};
  for (int i = 0; i < 3; ++i) outer[i] = outer_at(map, face.half_edges[i]);

  std::vector<bool> keep(map.num_half_edges(), true);
  for (int i = 0; i < 3; ++i) {
    keep[face.half_edges[i]] = false;
    keep[map.twin(face.half_edges[i])] = false;
  }
  // Contracting the three face edges one at a time leaves the outer
  // half-edges in the reverse of face order.
  std::vector<HalfEdgeId> sigma = map.rotation_table();
  sigma[outer[0]] = outer[2];
  sigma[outer[2]] = outer[1];
  sigma[outer[1]] = outer[0];
  return compact(keep, map.twin_table(), sigma, map.free_loops());
}

std::pair<CombinatorialMap, CombinatorialMap> apply_square(const CombinatorialMap& map, const Face& face) {
  require_face(map, face, 4, MoveKind::kSquare);
  std::array<HalfEdgeId, 4> o{};
  for (int i = 0; i < 4; ++i) o[i] = outer_at(map, face.half_edges[i]);
  return {remove_and_join(map, face, {{o[0], o[1]}, {o[2], o[3]}}),
          remove_and_join(map, face, {{o[1], o[2]}, {o[3], o[0]}})};
}

std::vector<CombinatorialMap> apply_move(const CombinatorialMap& map, const Move& move) {
  switch (move.kind) {
    case MoveKind::kFreeLoop: return {apply_loop(map, move.loop_index)};
    case MoveKind::kBigon: return {apply_bigon(map, move.face)};
    case MoveKind::kTriangle: return {apply_triangle(map, move.face)};
    case MoveKind::kSquare: {
      auto [first, second] = apply_square(map, move.face);
      return {std::move(first), std::move(second)};
    }
  }
  throw Error(ErrorKind::kInvalidMove, "unknown move");
}

}  // namespace taitmap
