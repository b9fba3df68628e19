#include "taitmap/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace taitmap::catalog {

CombinatorialMap circle() { return CombinatorialMap::circles(1); }

CombinatorialMap theta() {
  const std::vector<VertexRotation> rotations{{0, {0, 1, 2}}, {1, {5, 4, 3}}};
  const std::vector<EdgePair> pairs{{0, 3}, {1, 4}, {2, 5}};
  return build_map(rotations, pairs, 0);
}

CombinatorialMap k4() {
  const double r = 1.0;
  std::vector<std::pair<double, double>> points{{0.0, 0.0}};
  for (int i = 0; i < 3; ++i) {
    const double a = std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3;
    points.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return from_drawing(points, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

namespace {

CombinatorialMap digon_prism() {
  // t0 (-1,1) and t1 (1,1) share edges p (upper arc) and q (lower arc);
  // b0 (-1,-1) and b1 (1,-1) share r (upper arc) and s (lower arc);
  // rungs t0-b0 and t1-b1.
  const std::vector<VertexRotation> rotations{
      {0, {0, 1, 2}},    // t0: rung, q, p
      {1, {3, 4, 5}},    // t1: p, q, rung
      {2, {6, 7, 8}},    // b0: r, rung, s
      {3, {9, 10, 11}},  // b1: rung, r, s
  };
  const std::vector<EdgePair> pairs{{2, 3}, {1, 4}, {0, 7}, {5, 9}, {6, 10}, {8, 11}};
  return build_map(rotations, pairs, 0);
}

}  // namespace

CombinatorialMap prism(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::kUnknownFamily, "prism needs n >= 2");
  if (n == 2) return digon_prism();
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto nn = static_cast<VertexId>(n);
  for (VertexId i = 0; i < nn; ++i) {
    const double a = 2 * std::numbers::pi * i / static_cast<double>(n);
    points.emplace_back(2.0 * std::cos(a), 2.0 * std::sin(a));
  }
  for (VertexId i = 0; i < nn; ++i) {
    const double a = 2 * std::numbers::pi * i / static_cast<double>(n);
    points.emplace_back(std::cos(a), std::sin(a));
  }
  for (VertexId i = 0; i < nn; ++i) {
    edges.emplace_back(i, (i + 1) % nn);
    edges.emplace_back(nn + i, nn + (i + 1) % nn);
    edges.emplace_back(i, nn + i);
  }
  return from_drawing(points, edges);
}

CombinatorialMap cube() { return prism(4); }

CombinatorialMap dodecahedron() {
  // Outer pentagon a_i, a ten-cycle c_j with c_{2i} joined to a_i, inner
  // pentagon d_i joined to c_{2i+1}.
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto polar = [](double r, double deg) {
    const double a = deg * std::numbers::pi / 180.0;
    return std::pair{r * std::cos(a), r * std::sin(a)};
  };
  for (int i = 0; i < 5; ++i) points.push_back(polar(4.0, 72.0 * i));         // a: 0..4
  for (int j = 0; j < 10; ++j) points.push_back(polar(j % 2 == 0 ? 3.0 : 2.5, 36.0 * j));  // c: 5..14
  for (int i = 0; i < 5; ++i) points.push_back(polar(1.0, 72.0 * i + 36.0));  // d: 15..19
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + 2 * i);
    edges.emplace_back(5 + 2 * i + 1, 15 + i);
    edges.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  for (VertexId j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);
  return from_drawing(points, edges);
}

CombinatorialMap petersen() {
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int ring = 0; ring < 2; ++ring) {
    const double r = ring == 0 ? 2.0 : 1.0;
    for (int i = 0; i < 5; ++i) {
      const double a = std::numbers::pi / 2 + 2 * std::numbers::pi * i / 5;
      points.emplace_back(r * std::cos(a), r * std::sin(a));
    }
  }
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_drawing(points, edges, Planarity::kAllowNonPlanar);
}

CombinatorialMap from_drawing(const std::vector<std::pair<double, double>>& points,
                              const std::vector<std::pair<VertexId, VertexId>>& edges,
                              Planarity planarity) {
  // Half-edge 2k sits at edges[k].first, 2k+1 at edges[k].second.
  std::vector<std::vector<std::uint64_t>> around(points.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    around.at(edges[k].first).push_back(2 * k);
    around.at(edges[k].second).push_back(2 * k + 1);
  }
  auto angle = [&](std::uint64_t h) {
    const auto& [u, w] = edges[h / 2];
    const VertexId from = h % 2 == 0 ? u : w;
    const VertexId to = h % 2 == 0 ? w : u;
    return std::atan2(points[to].second - points[from].second, points[to].first - points[from].first);
  };
  std::vector<VertexRotation> rotations;
  for (std::size_t v = 0; v < points.size(); ++v) {
    std::sort(around[v].begin(), around[v].end(),
              [&](std::uint64_t a, std::uint64_t b) { return angle(a) < angle(b); });
    rotations.push_back({v, around[v]});
  }
  std::vector<EdgePair> pairs;
  for (std::size_t k = 0; k < edges.size(); ++k) pairs.push_back({2 * k, 2 * k + 1});
  return build_map(rotations, pairs, 0, planarity);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"circle", "theta", "k4", "prism", "cube",
                                              "dodecahedron", "petersen"};
  return names;
}

CombinatorialMap generate(std::string_view family, std::optional<std::size_t> param) {
  if (family == "prism") {
    if (!param) throw Error(ErrorKind::kUnknownFamily, "prism needs a size, e.g. 'prism 4'");
    return prism(*param);
  }
  if (param) {
    throw Error(ErrorKind::kUnknownFamily, "family '" + std::string(family) + "' takes no parameter");
  }
  if (family == "circle") return circle();
  if (family == "theta") return theta();
  if (family == "k4") return k4();
  if (family == "cube") return cube();
  if (family == "dodecahedron") return dodecahedron();
  if (family == "petersen") return petersen();
  throw Error(ErrorKind::kUnknownFamily, "unknown family '" + std::string(family) + "'");
}

std::vector<Entry> standard_catalog() {
  std::vector<Entry> out{
      {"circle", circle()},         {"theta", theta()},       {"k4", k4()},
      {"prism(2)", prism(2)},       {"prism(3)", prism(3)},   {"cube", cube()},
      {"prism(5)", prism(5)},       {"prism(6)", prism(6)},   {"prism(8)", prism(8)},
      {"dodecahedron", dodecahedron()},
      {"petersen", petersen()},
      {"theta+circle", disjoint_union(theta(), circle())},
      {"theta+theta", disjoint_union(theta(), theta())},
      {"cube+prism(2)", disjoint_union(cube(), prism(2))},
      {"circle+circle", CombinatorialMap::circles(2)},
  };
  // A hexagonal prism with a digon inserted on a rung, and on a hexagon edge.
  const CombinatorialMap hex = prism(6);
  out.push_back({"prism(6)+bigon(rung)", insert_bigon(hex, hex.edge_of(hex.rotation(0)[0]))});
  out.push_back({"prism(6)+bigon(2)", insert_bigon(hex, 2)});
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    out.push_back({"random-bipartite-" + std::to_string(seed),
                   random_planar_cubic(seed, 6 + 3 * (seed % 3), true)});
  }
  for (std::uint64_t seed = 7; seed <= 8; ++seed) {
    out.push_back({"random-bipartite-" + std::to_string(seed), random_planar_cubic(seed, 24, true)});
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    out.push_back({"random-planar-" + std::to_string(seed), random_planar_cubic(100 + seed, 9 + 3 * (seed % 2), false)});
  }
  return out;
}

CombinatorialMap insert_bigon(const CombinatorialMap& map, EdgeId e) {
  if (e >= map.num_map_edges()) throw Error(ErrorKind::kDomain, "insert_bigon: no such map edge");
  const auto [h, t] = map.edge_half_edges(e);
  std::vector<HalfEdgeId> twin = map.twin_table();
  std::vector<HalfEdgeId> sigma = map.rotation_table();
  const auto base = static_cast<HalfEdgeId>(twin.size());
  const HalfEdgeId x0 = base, x1 = base + 1, x2 = base + 2;
  const HalfEdgeId y0 = base + 3, y1 = base + 4, y2 = base + 5;
  twin.resize(base + 6);
  sigma.resize(base + 6);
  twin[h] = x0, twin[x0] = h;
  twin[t] = y0, twin[y0] = t;
  twin[x1] = y1, twin[y1] = x1;
  twin[x2] = y2, twin[y2] = x2;
  sigma[x0] = x1, sigma[x1] = x2, sigma[x2] = x0;
  sigma[y0] = y2, sigma[y2] = y1, sigma[y1] = y0;
  return CombinatorialMap::from_permutations(std::move(twin), std::move(sigma), map.free_loops());
}

CombinatorialMap add_chord(const CombinatorialMap& map, FaceId face, std::size_t i, std::size_t j) {
  const Face& f = map.face(face);
  if (i >= f.degree() || j >= f.degree() || f.edges[i] == f.edges[j]) {
    throw Error(ErrorKind::kDomain, "add_chord: positions must lie on distinct edges of the face");
  }
  std::vector<HalfEdgeId> twin = map.twin_table();
  std::vector<HalfEdgeId> sigma = map.rotation_table();
  auto base = static_cast<HalfEdgeId>(twin.size());
  twin.resize(base + 6);
  sigma.resize(base + 6);
  // Each new vertex: a1 continues h, a2 continues twin(h), a3 is the chord
  // end, placed so the chord enters h's face.
  std::array<HalfEdgeId, 2> chord_ends{};
  for (int k = 0; k < 2; ++k) {
    const HalfEdgeId h = f.half_edges[k == 0 ? i : j];
    const HalfEdgeId t = map.twin(h);
    const HalfEdgeId a1 = base, a2 = base + 1, a3 = base + 2;
    base += 3;
    twin[h] = a1, twin[a1] = h;
    twin[t] = a2, twin[a2] = t;
    sigma[a1] = a3, sigma[a3] = a2, sigma[a2] = a1;
    chord_ends[k] = a3;
  }
  twin[chord_ends[0]] = chord_ends[1];
  twin[chord_ends[1]] = chord_ends[0];
  return CombinatorialMap::from_permutations(std::move(twin), std::move(sigma), map.free_loops());
}

CombinatorialMap add_ladder(const CombinatorialMap& map, FaceId face, std::size_t i, std::size_t j) {
  const HalfEdgeId h = map.face(face).half_edges.at(i);
  const auto base = static_cast<HalfEdgeId>(map.num_half_edges());
  const CombinatorialMap once = add_chord(map, face, i, j);
  // In `once`, h is followed along its face by the chord (base + 2) and then
  // by the half-edge leaving the far chord end (base + 4).
  const FaceId split = once.face_of(h);
  const auto& around = once.face(split).half_edges;
  const auto pos = [&](HalfEdgeId x) {
    return static_cast<std::size_t>(std::find(around.begin(), around.end(), x) - around.begin());
  };
  return add_chord(once, split, pos(h), pos(base + 4));
}

CombinatorialMap random_planar_cubic(std::uint64_t seed, std::size_t min_edges, bool bipartite) {
  std::mt19937_64 rng(seed);
  CombinatorialMap map = theta();
  while (map.num_edges() < min_edges) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) {
      std::uniform_int_distribution<EdgeId> pick(0, static_cast<EdgeId>(map.num_map_edges() - 1));
      map = insert_bigon(map, pick(rng));
      continue;
    }
    // Candidate chords: pairs of positions on distinct edges of one face.
    struct Chord { FaceId face; std::size_t i, j; };
    std::vector<Chord> chords;
    for (FaceId fid = 0; fid < map.num_faces(); ++fid) {
      const Face& f = map.face(fid);
      for (std::size_t i = 0; i < f.degree(); ++i) {
        for (std::size_t j = i + 1; j < f.degree(); ++j) {
          if (f.edges[i] == f.edges[j]) continue;
          if (bipartite && (j - i) % 2 != 0) continue;
          chords.push_back({fid, i, j});
        }
      }
    }
    if (chords.empty()) {
      std::uniform_int_distribution<EdgeId> pick(0, static_cast<EdgeId>(map.num_map_edges() - 1));
      map = insert_bigon(map, pick(rng));
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, chords.size() - 1);
    const Chord c = chords[pick(rng)];
    map = bipartite ? add_ladder(map, c.face, c.i, c.j) : add_chord(map, c.face, c.i, c.j);
    if (bipartite && !is_bipartite(map)) throw Error(ErrorKind::kDomain, "ladder broke bipartiteness");
  }
  return map;
}

}  // namespace taitmap::catalog
