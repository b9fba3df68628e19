#include "taitmap/planar_map.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace taitmap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kDuplicateId: return "duplicate id";
    case ErrorKind::kNonTrivalent: return "non-trivalent vertex";
    case ErrorKind::kDuplicateHalfEdge: return "duplicate half-edge";
    case ErrorKind::kUnmatchedHalfEdge: return "unmatched half-edge";
    case ErrorKind::kUnknownHalfEdge: return "unknown half-edge";
    case ErrorKind::kFixedPointTwin: return "half-edge paired with itself";
    case ErrorKind::kNonPlanar: return "non-planar rotation system";
    case ErrorKind::kInvalidMove: return "invalid move";
    case ErrorKind::kNoFreeLoop: return "no free loop";
    case ErrorKind::kIrreducible: return "irreducible";
    case ErrorKind::kNotBipartite: return "not bipartite";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kNotInSU3: return "not in SU(3)";
    case ErrorKind::kInadmissible: return "inadmissible decoration";
    case ErrorKind::kEigenspace: return "eigenspace extraction failed";
    case ErrorKind::kRetriesExhausted: return "retries exhausted";
    case ErrorKind::kUnknownFamily: return "unknown family";
  }
  return "error";
}

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

CombinatorialMap CombinatorialMap::from_permutations(std::vector<HalfEdgeId> twin,
                                                     std::vector<HalfEdgeId> next_at_vertex,
                                                     std::size_t free_loops,
                                                     Planarity planarity) {
  const std::size_t n = twin.size();
  if (next_at_vertex.size() != n) {
    throw Error(ErrorKind::kUnmatchedHalfEdge, "twin and rotation tables differ in size");
  }
  for (HalfEdgeId h = 0; h < n; ++h) {
    const HalfEdgeId t = twin[h];
    if (t >= n) {
      throw Error(ErrorKind::kUnknownHalfEdge,
                  "half-edge " + std::to_string(h) + " paired with unknown " + std::to_string(t));
    }
    if (t == h) {
      throw Error(ErrorKind::kFixedPointTwin, "half-edge " + std::to_string(h) + " paired with itself");
    }
    if (twin[t] != h) {
      throw Error(ErrorKind::kDuplicateHalfEdge,
                  "half-edge " + std::to_string(t) + " paired more than once");
    }
  }
  {
    std::vector<bool> hit(n, false);
    for (HalfEdgeId h = 0; h < n; ++h) {
      const HalfEdgeId s = next_at_vertex[h];
      if (s >= n || hit[s]) {
        throw Error(ErrorKind::kDuplicateHalfEdge, "rotation table is not a permutation");
      }
      hit[s] = true;
    }
  }

  CombinatorialMap map;
  map.free_loops_ = free_loops;

  map.vertex_of_.assign(n, kUnset);
  for (HalfEdgeId h = 0; h < n; ++h) {
    if (map.vertex_of_[h] != kUnset) continue;
    const auto v = static_cast<VertexId>(map.vertex_halves_.size());
    std::array<HalfEdgeId, 3> rot{};
    std::size_t len = 0;
    HalfEdgeId cur = h;
    do {
      if (len == 3) {
        throw Error(ErrorKind::kNonTrivalent,
                    "vertex at half-edge " + std::to_string(h) + " has degree > 3");
      }
      rot[len++] = cur;
      map.vertex_of_[cur] = v;
      cur = next_at_vertex[cur];
    } while (cur != h);
    if (len != 3) {
      throw Error(ErrorKind::kNonTrivalent, "vertex at half-edge " + std::to_string(h) +
                                                " has degree " + std::to_string(len));
    }
    map.vertex_halves_.push_back(rot);
  }

  map.edge_of_.assign(n, kUnset);
  EdgeId next_edge = 0;
  for (HalfEdgeId h = 0; h < n; ++h) {
    if (h < twin[h]) {
      map.edge_of_[h] = next_edge;
      map.edge_of_[twin[h]] = next_edge;
      map.edge_halves_.push_back({h, twin[h]});
      ++next_edge;
    }
  }

  map.twin_ = std::move(twin);
  map.sigma_ = std::move(next_at_vertex);

  map.face_of_.assign(n, kUnset);
  for (HalfEdgeId h = 0; h < n; ++h) {
    if (map.face_of_[h] != kUnset) continue;
    const auto f = static_cast<FaceId>(map.faces_.size());
    Face face;
    HalfEdgeId cur = h;
    do {
      map.face_of_[cur] = f;
      face.half_edges.push_back(cur);
      face.vertices.push_back(map.vertex_of_[cur]);
      face.edges.push_back(map.edge_of_[cur]);
      cur = map.next_in_face(cur);
    } while (cur != h);
    map.faces_.push_back(std::move(face));
  }

  // Euler formula per connected component.
  const std::size_t nv = map.num_vertices();
  DisjointSets sets(nv);
  for (HalfEdgeId h = 0; h < n; ++h) sets.unite(map.vertex_of_[h], map.vertex_of_[map.twin_[h]]);
  std::map<std::size_t, long long> euler;
  for (VertexId v = 0; v < nv; ++v) euler[sets.find(v)] += 1;
  for (HalfEdgeId h = 0; h < n; ++h) {
    if (h < map.twin_[h]) euler[sets.find(map.vertex_of_[h])] -= 1;
  }
  for (const Face& face : map.faces_) euler[sets.find(face.vertices.front())] += 1;
  map.planar_ = std::all_of(euler.begin(), euler.end(), [](const auto& kv) { return kv.second == 2; });
  if (!map.planar_ && planarity == Planarity::kRequire) {
    for (const auto& [root, chi] : euler) {
      if (chi != 2) {
        throw Error(ErrorKind::kNonPlanar, "component at vertex " + std::to_string(root) +
                                               " has V - E + F = " + std::to_string(chi) +
                                               " (expected 2)");
      }
    }
  }
  return map;
}

CombinatorialMap CombinatorialMap::circles(std::size_t count) {
  CombinatorialMap map;
  map.free_loops_ = count;
  return map;
}

std::array<HalfEdgeId, 2> CombinatorialMap::edge_half_edges(EdgeId e) const {
  if (e >= edge_halves_.size()) {
    throw Error(ErrorKind::kUnknownHalfEdge, "edge " + std::to_string(e) + " has no half-edges");
  }
  return edge_halves_[e];
}

std::array<VertexId, 2> CombinatorialMap::edge_endpoints(EdgeId e) const {
  const auto [a, b] = edge_half_edges(e);
  return {vertex_of_[a], vertex_of_[b]};
}

CombinatorialMap build_map(std::span<const VertexRotation> vertex_rotations,
                           std::span<const EdgePair> edge_pairs,
                           std::size_t free_loops,
                           Planarity planarity) {
  std::map<std::uint64_t, std::size_t> vertex_ids;
  std::map<std::uint64_t, std::uint64_t> next_of;  // caller half-edge -> caller half-edge
  for (const VertexRotation& rot : vertex_rotations) {
    if (!vertex_ids.emplace(rot.vertex, vertex_ids.size()).second) {
      throw Error(ErrorKind::kDuplicateId, "duplicate vertex id " + std::to_string(rot.vertex));
    }
    if (rot.half_edges.size() != 3) {
      throw Error(ErrorKind::kNonTrivalent, "vertex " + std::to_string(rot.vertex) + " has degree " +
                                                std::to_string(rot.half_edges.size()));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const std::uint64_t h = rot.half_edges[i];
      if (!next_of.emplace(h, rot.half_edges[(i + 1) % 3]).second) {
        throw Error(ErrorKind::kDuplicateHalfEdge,
                    "half-edge " + std::to_string(h) + " appears twice in rotations");
      }
    }
  }

  std::map<std::uint64_t, HalfEdgeId> dense;
  for (const auto& [h, next] : next_of) dense.emplace(h, static_cast<HalfEdgeId>(dense.size()));

  const std::size_t n = dense.size();
  std::vector<HalfEdgeId> twin(n, kUnset);
  for (const EdgePair& pair : edge_pairs) {
    for (const std::uint64_t h : {pair.a, pair.b}) {
      if (!dense.contains(h)) {
        throw Error(ErrorKind::kUnknownHalfEdge,
                    "half-edge " + std::to_string(h) + " is not in any vertex rotation");
      }
    }
    if (pair.a == pair.b) {
      throw Error(ErrorKind::kFixedPointTwin, "half-edge " + std::to_string(pair.a) + " paired with itself");
    }
    const HalfEdgeId a = dense.at(pair.a);
    const HalfEdgeId b = dense.at(pair.b);
    for (const auto& [h, caller] : {std::pair{a, pair.a}, std::pair{b, pair.b}}) {
      if (twin[h] != kUnset) {
        throw Error(ErrorKind::kDuplicateHalfEdge,
                    "half-edge " + std::to_string(caller) + " appears in two edges");
      }
    }
    twin[a] = b;
    twin[b] = a;
  }
  for (const auto& [caller, h] : dense) {
    if (twin[h] == kUnset) {
      throw Error(ErrorKind::kUnmatchedHalfEdge, "unmatched half-edge " + std::to_string(caller));
    }
  }

  std::vector<HalfEdgeId> sigma(n);
  for (const auto& [caller, h] : dense) sigma[h] = dense.at(next_of.at(caller));
  return CombinatorialMap::from_permutations(std::move(twin), std::move(sigma), free_loops, planarity);
}

std::span<const Face> faces(const CombinatorialMap& map) { return map.faces(); }

bool is_bipartite(const CombinatorialMap& map) {
  const std::size_t nv = map.num_vertices();
  std::vector<std::vector<VertexId>> adjacent(nv);
  for (HalfEdgeId h = 0; h < map.num_half_edges(); ++h) {
    adjacent[map.vertex_of(h)].push_back(map.vertex_of(map.twin(h)));
  }
  std::vector<int> side(nv, -1);
  for (VertexId start = 0; start < nv; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (const VertexId w : adjacent[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t count_vertex_components(const CombinatorialMap& map) {
  DisjointSets sets(map.num_vertices());
  for (HalfEdgeId h = 0; h < map.num_half_edges(); ++h) {
    sets.unite(map.vertex_of(h), map.vertex_of(map.twin(h)));
  }
  std::size_t count = 0;
  for (VertexId v = 0; v < map.num_vertices(); ++v) count += sets.find(v) == v;
  return count;
}

CombinatorialMap disjoint_union(const CombinatorialMap& a, const CombinatorialMap& b) {
  const auto shift = static_cast<HalfEdgeId>(a.num_half_edges());
  std::vector<HalfEdgeId> twin = a.twin_table();
  std::vector<HalfEdgeId> sigma = a.rotation_table();
  for (HalfEdgeId h = 0; h < b.num_half_edges(); ++h) {
    twin.push_back(b.twin(h) + shift);
    sigma.push_back(b.next_at_vertex(h) + shift);
  }
  const Planarity planarity =
      a.is_planar() && b.is_planar() ? Planarity::kRequire : Planarity::kAllowNonPlanar;
  return CombinatorialMap::from_permutations(std::move(twin), std::move(sigma),
                                             a.free_loops() + b.free_loops(), planarity);
}

CombinatorialMap relabel(const CombinatorialMap& map, std::span<const HalfEdgeId> perm) {
  const std::size_t n = map.num_half_edges();
  if (perm.size() != n) throw Error(ErrorKind::kDomain, "relabel: permutation has wrong size");
  std::vector<HalfEdgeId> twin(n), sigma(n);
  for (HalfEdgeId h = 0; h < n; ++h) {
    twin[perm[h]] = perm[map.twin(h)];
    sigma[perm[h]] = perm[map.next_at_vertex(h)];
  }
  return CombinatorialMap::from_permutations(
      std::move(twin), std::move(sigma), map.free_loops(),
      map.is_planar() ? Planarity::kRequire : Planarity::kAllowNonPlanar);
}

}  // namespace taitmap
