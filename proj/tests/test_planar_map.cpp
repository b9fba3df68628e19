#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "taitmap/catalog.hpp"
#include "taitmap/error.hpp"
#include "taitmap/planar_map.hpp"

using namespace taitmap;

namespace {

std::vector<std::size_t> degrees(const CombinatorialMap& map) {
  std::vector<std::size_t> out;
  for (const Face& f : map.faces()) out.push_back(f.degree());
  return out;
}

std::vector<std::size_t> sorted_degrees(const CombinatorialMap& map) {
  auto d = degrees(map);
  std::sort(d.begin(), d.end());
  return d;
}

ErrorKind build_error(const std::vector<VertexRotation>& v, const std::vector<EdgePair>& e) {
  try {
    build_map(v, e, 0);
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected build_map to throw");
  return ErrorKind::kParse;
}

// Components whose V - E + F differs from 2, counted from the raw tables.
std::size_t euler_failures(const CombinatorialMap& map) {
  std::size_t bad = 0;
  const std::size_t n = map.num_half_edges();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (comp[h] >= 0) continue;
    std::vector<std::size_t> stack{h};
    comp[h] = nc;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const std::size_t y : {static_cast<std::size_t>(map.twin(x)), static_cast<std::size_t>(map.next_at_vertex(x))}) {
        if (comp[y] < 0) {
          comp[y] = nc;
          stack.push_back(y);
        }
      }
    }
    ++nc;
  }
  for (int c = 0; c < nc; ++c) {
    long halves = 0;
    long faces = 0;
    for (std::size_t h = 0; h < n; ++h) halves += comp[h] == c;
    for (const Face& f : map.faces()) faces += comp[f.half_edges.front()] == c;
    const long v = halves / 3;
    const long e = halves / 2;
    bad += (v - e + faces) != 2;
  }
  return bad;
}

}  // namespace

TEST_CASE("theta has three digon faces traced by sigma after twin") {
  const auto g = fixture::theta();
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 3);
  CHECK(g.num_faces() == 3);
  CHECK(degrees(g) == std::vector<std::size_t>{2, 2, 2});
  CHECK(g.face(0).half_edges == std::vector<HalfEdgeId>{0, 5});
  CHECK(g.face(1).half_edges == std::vector<HalfEdgeId>{1, 3});
  CHECK(g.face(2).half_edges == std::vector<HalfEdgeId>{2, 4});
  CHECK(g.face(0).vertices == std::vector<VertexId>{0, 1});
  CHECK(g == catalog::theta());
}

TEST_CASE("face degrees of the standard polyhedra") {
  CHECK(sorted_degrees(catalog::k4()) == std::vector<std::size_t>(4, 3));
  CHECK(sorted_degrees(catalog::cube()) == std::vector<std::size_t>(6, 4));
  CHECK(sorted_degrees(catalog::dodecahedron()) == std::vector<std::size_t>(12, 5));
  CHECK(sorted_degrees(catalog::prism(3)) == std::vector<std::size_t>{3, 3, 4, 4, 4});
  CHECK(sorted_degrees(catalog::prism(2)) == std::vector<std::size_t>{2, 2, 4, 4});
}

TEST_CASE("single free loop") {
  const auto u = build_map(std::vector<VertexRotation>{}, std::vector<EdgePair>{}, 1);
  CHECK(u.free_loops() == 1);
  CHECK(u.num_edges() == 1);
  CHECK(u.num_vertices() == 0);
  CHECK(u.num_faces() == 0);
  CHECK(u == catalog::circle());
  CHECK(u == CombinatorialMap::circles(1));
}

TEST_CASE("build_map reports each validation failure distinctly") {
  using V = std::vector<VertexRotation>;
  using E = std::vector<EdgePair>;
  CHECK(build_error(V{{0, {0, 1, 2}}}, E{{0, 1}}) == ErrorKind::kUnmatchedHalfEdge);
  CHECK(build_error(V{{0, {0, 1}}, {1, {2, 3}}}, E{{0, 2}, {1, 3}}) == ErrorKind::kNonTrivalent);
  CHECK(build_error(V{{0, {0, 1, 2}}, {1, {2, 4, 3}}}, E{{0, 3}, {1, 4}, {2, 2}}) == ErrorKind::kDuplicateHalfEdge);
  CHECK(build_error(V{{0, {0, 1, 2}}, {0, {5, 4, 3}}}, E{{0, 3}, {1, 4}, {2, 5}}) == ErrorKind::kDuplicateId);
  CHECK(build_error(V{{0, {0, 1, 2}}, {1, {5, 4, 3}}}, E{{0, 3}, {1, 4}, {2, 5}, {0, 4}}) == ErrorKind::kDuplicateHalfEdge);
  CHECK(build_error(V{{0, {0, 1, 2}}, {1, {5, 4, 3}}}, E{{0, 3}, {1, 4}, {2, 9}}) == ErrorKind::kUnknownHalfEdge);
  CHECK(build_error(V{{0, {0, 1, 2}}, {1, {3, 4, 5}}}, E{{0, 3}, {1, 4}, {2, 5}}) == ErrorKind::kNonPlanar);
}

TEST_CASE("non-planar rotations are accepted only on request") {
  const std::vector<VertexRotation> v{{0, {0, 1, 2}}, {1, {3, 4, 5}}};
  const std::vector<EdgePair> e{{0, 3}, {1, 4}, {2, 5}};
  const auto g = build_map(v, e, 0, Planarity::kAllowNonPlanar);
  CHECK_FALSE(g.is_planar());
  CHECK(g.num_faces() == 1);
  CHECK_FALSE(catalog::petersen().is_planar());
}

TEST_CASE("caller ids are relabelled densely in sorted order") {
  const std::vector<VertexRotation> v{{70, {10, 11, 12}}, {30, {15, 14, 13}}};
  const std::vector<EdgePair> e{{10, 13}, {11, 14}, {12, 15}};
  CHECK(build_map(v, e, 0) == fixture::theta());
}

TEST_CASE("self-loops are structurally valid") {
  const auto g = fixture::dumbbell();
  CHECK(g.num_edges() == 3);
  CHECK(sorted_degrees(g) == std::vector<std::size_t>{1, 1, 4});
}

TEST_CASE("is_bipartite examples") {
  CHECK(is_bipartite(fixture::theta()));
  CHECK_FALSE(is_bipartite(catalog::k4()));
  CHECK(is_bipartite(catalog::circle()));
  CHECK(is_bipartite(CombinatorialMap::empty()));
  CHECK_FALSE(is_bipartite(fixture::dumbbell()));
}

TEST_CASE("disjoint_union examples") {
  const auto u = catalog::circle();
  CHECK(disjoint_union(u, u).free_loops() == 2);
  const auto tu = disjoint_union(fixture::theta(), u);
  CHECK(tu.num_vertices() == 2);
  CHECK(tu.num_edges() == 4);
  CHECK(disjoint_union(CombinatorialMap::empty(), catalog::cube()) == catalog::cube());
  const auto tt = disjoint_union(catalog::k4(), catalog::cube());
  CHECK(tt.num_vertices() == 12);
  CHECK(tt.num_faces() == 10);
  CHECK(count_vertex_components(tt) == 2);
}

TEST_CASE("catalog invariants") {
  for (const auto& [name, g] : catalog::standard_catalog()) {
    CAPTURE(name);
    const auto& twin = g.twin_table();
    const auto& sigma = g.rotation_table();
    for (HalfEdgeId h = 0; h < twin.size(); ++h) {
      CHECK(twin[twin[h]] == h);
      CHECK(twin[h] != h);
      CHECK(sigma[sigma[sigma[h]]] == h);
      CHECK(sigma[h] != h);
    }
    // Faces partition the half-edges and agree with the raw orbit oracle.
    std::vector<std::vector<HalfEdgeId>> mine;
    std::size_t total = 0;
    for (const Face& f : g.faces()) {
      auto s = f.half_edges;
      total += s.size();
      std::sort(s.begin(), s.end());
      mine.push_back(s);
      CHECK(f.half_edges.front() == s.front());
      for (std::size_t i = 0; i < f.degree(); ++i) {
        CHECK(g.vertex_of(f.half_edges[i]) == f.vertices[i]);
        CHECK(g.edge_of(f.half_edges[i]) == f.edges[i]);
        CHECK(g.next_in_face(f.half_edges[i]) == f.half_edges[(i + 1) % f.degree()]);
      }
    }
    CHECK(total == g.num_half_edges());
    CHECK(mine == oracle::face_orbits(g));
    if (g.is_planar()) CHECK(euler_failures(g) == 0);
    CHECK(is_bipartite(g) == !oracle::has_odd_closed_walk(g));
  }
}

TEST_CASE("faces are invariant under relabelling") {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : catalog::standard_catalog()) {
    CAPTURE(name);
    std::vector<HalfEdgeId> perm(g.num_half_edges());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    CHECK(sorted_degrees(h) == sorted_degrees(g));
    // Canonical reordering: map each relabelled face back through the inverse.
    std::vector<HalfEdgeId> inverse(perm.size());
    for (HalfEdgeId i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
    std::vector<std::vector<HalfEdgeId>> back;
    for (const Face& f : h.faces()) {
      std::vector<HalfEdgeId> s;
      for (const HalfEdgeId x : f.half_edges) s.push_back(inverse[x]);
      std::sort(s.begin(), s.end());
      back.push_back(s);
    }
    std::sort(back.begin(), back.end());
    CHECK(back == oracle::face_orbits(g));
    CHECK(relabel(h, inverse) == g);
    CHECK(is_bipartite(h) == is_bipartite(g));
  }
}

TEST_CASE("random planar growth keeps maps valid") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CAPTURE(seed);
    const auto g = catalog::random_planar_cubic(seed, 18, seed % 2 == 0);
    CHECK(g.is_planar());
    CHECK(g.num_edges() >= 18);
    CHECK(euler_failures(g) == 0);
    CHECK(is_bipartite(g) == !oracle::has_odd_closed_walk(g));
    if (seed % 2 == 0) CHECK(is_bipartite(g));
  }
}
