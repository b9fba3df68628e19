#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "taitmap/catalog.hpp"
#include "taitmap/error.hpp"
#include "taitmap/moves.hpp"
#include "taitmap/tait.hpp"

using namespace taitmap;

namespace {

std::vector<std::size_t> sorted_degrees(const CombinatorialMap& map) {
  std::vector<std::size_t> out;
  for (const Face& f : map.faces()) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

const Face& first_face_of_degree(const CombinatorialMap& map, std::size_t degree) {
  for (const Face& f : map.faces()) {
    if (f.degree() == degree) return f;
  }
  FAIL("no face of degree " << degree);
  return map.face(0);
}

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kDomain;
}

}  // namespace

TEST_CASE("find_move examples") {
  const auto theta = fixture::theta();
  const auto m = find_move(theta);
  REQUIRE(m);
  CHECK(m->kind == MoveKind::kBigon);
  CHECK(m->face == theta.face(0));

  CHECK_FALSE(find_move(catalog::dodecahedron()));
  CHECK_FALSE(find_move(CombinatorialMap::empty()));

  const auto ut = disjoint_union(catalog::circle(), theta);
  REQUIRE(find_move(ut));
  CHECK(find_move(ut)->kind == MoveKind::kFreeLoop);

  REQUIRE(find_move(catalog::k4()));
  CHECK(find_move(catalog::k4())->kind == MoveKind::kTriangle);
  REQUIRE(find_move(catalog::cube()));
  CHECK(find_move(catalog::cube())->kind == MoveKind::kSquare);
  CHECK(find_move(catalog::cube())->face == catalog::cube().face(0));
}

TEST_CASE("available_moves is ordered by kind then face") {
  const auto g = disjoint_union(CombinatorialMap::circles(3), catalog::prism(3));
  const auto moves = available_moves(g);
  REQUIRE(moves.size() == 1 + 2 + 3);
  CHECK(moves[0].kind == MoveKind::kFreeLoop);
  CHECK(moves[1].kind == MoveKind::kTriangle);
  CHECK(moves[2].kind == MoveKind::kTriangle);
  CHECK(moves[1].face.half_edges.front() < moves[2].face.half_edges.front());
  for (std::size_t i = 3; i < moves.size(); ++i) CHECK(moves[i].kind == MoveKind::kSquare);
}

TEST_CASE("faces with repeated vertices or edges are not matched") {
  // The dumbbell's faces are two monogons and a degenerate square.
  CHECK(available_moves(fixture::dumbbell()).empty());
  CHECK_FALSE(is_simple_face(fixture::dumbbell().face(0), 4));
  CHECK(is_simple_face(catalog::cube().face(0), 4));
  CHECK_FALSE(is_simple_face(catalog::cube().face(0), 3));
}

TEST_CASE("apply_loop") {
  CHECK(apply_loop(catalog::circle(), 0).is_empty());
  CHECK(apply_loop(CombinatorialMap::circles(2), 1) == catalog::circle());
  const auto tu = disjoint_union(fixture::theta(), catalog::circle());
  CHECK(apply_loop(tu, 0) == fixture::theta());
  CHECK(error_of([] { apply_loop(fixture::theta(), 0); }) == ErrorKind::kNoFreeLoop);
  CHECK(error_of([] { apply_loop(catalog::circle(), 1); }) == ErrorKind::kNoFreeLoop);
}

TEST_CASE("apply_bigon") {
  const auto theta = fixture::theta();
  CHECK(apply_bigon(theta, theta.face(0)) == catalog::circle());
  CHECK(apply_bigon(theta, theta.face(2)) == catalog::circle());

  const auto p2 = catalog::prism(2);
  const auto child = apply_bigon(p2, first_face_of_degree(p2, 2));
  CHECK(child.num_edges() == 3);
  CHECK(child.free_loops() == 0);
  CHECK(sorted_degrees(child) == std::vector<std::size_t>{2, 2, 2});

  for (EdgeId e = 0; e < catalog::cube().num_map_edges(); e += 5) {
    const auto g = catalog::insert_bigon(catalog::cube(), e);
    CHECK(g.num_edges() == 15);
    CHECK(is_bipartite(g));
    const auto reduced = apply_bigon(g, first_face_of_degree(g, 2));
    CHECK(reduced.num_edges() == 12);
    CHECK(reduced.is_planar());
    CHECK(sorted_degrees(reduced) == std::vector<std::size_t>(6, 4));
    CHECK(2 * count_tait(reduced) == count_tait(g));
  }

  const auto prism = catalog::prism(3);
  for (const Face& f : prism.faces()) {
    CHECK(error_of([&] { apply_bigon(prism, f); }) == ErrorKind::kInvalidMove);
  }
}

TEST_CASE("apply_triangle") {
  const auto k4 = catalog::k4();
  for (const Face& f : k4.faces()) {
    const auto g = apply_triangle(k4, f);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 3);
    CHECK(sorted_degrees(g) == std::vector<std::size_t>{2, 2, 2});
  }

  const auto prism = catalog::prism(3);
  const auto g = apply_triangle(prism, first_face_of_degree(prism, 3));
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 6);
  CHECK(sorted_degrees(g) == std::vector<std::size_t>(4, 3));
  CHECK(count_tait(g) == count_tait(prism));

  const auto theta = fixture::theta();
  CHECK(error_of([&] { apply_triangle(theta, theta.face(0)); }) == ErrorKind::kInvalidMove);
}

TEST_CASE("apply_triangle keeps the cyclic order of the outer edges") {
  // A reversed rotation at the new vertex would fail the Euler check.
  const auto g = catalog::random_planar_cubic(3, 24, false);
  for (const Move& m : available_moves(g)) {
    if (m.kind != MoveKind::kTriangle) continue;
    const auto child = apply_triangle(g, m.face);
    CHECK(child.is_planar());
    CHECK(child.num_edges() + 3 == g.num_edges());
    CHECK(count_tait(child) == count_tait(g));
  }
}

TEST_CASE("apply_square on the cube") {
  const auto cube = catalog::cube();
  for (const Face& f : cube.faces()) {
    const auto [g1, g2] = apply_square(cube, f);
    for (const auto* child : {&g1, &g2}) {
      CHECK(child->is_planar());
      CHECK(child->num_vertices() == 4);
      CHECK(child->num_edges() == 6);
      CHECK(child->free_loops() == 0);
      CHECK(sorted_degrees(*child) == std::vector<std::size_t>{2, 2, 4, 4});
    }
    CHECK(count_tait(g1) + count_tait(g2) == count_tait(cube));
  }
}

TEST_CASE("apply_square where outer edges coincide yields free loops") {
  // In the digon prism the four outer ends of a square pair up along the two
  // digons, so one child closes two circles and the other closes one.
  const auto p2 = catalog::prism(2);
  const Face& square = first_face_of_degree(p2, 4);
  REQUIRE(is_simple_face(square, 4));
  const auto [g1, g2] = apply_square(p2, square);
  const auto two = CombinatorialMap::circles(2);
  const auto one = CombinatorialMap::circles(1);
  CHECK(((g1 == two && g2 == one) || (g1 == one && g2 == two)));
  CHECK(count_tait(g1) + count_tait(g2) == count_tait(p2));
}

TEST_CASE("apply_square errors and apply_move dispatch") {
  const auto k4 = catalog::k4();
  CHECK(error_of([&] { apply_square(k4, k4.face(0)); }) == ErrorKind::kInvalidMove);
  const auto cube = catalog::cube();
  CHECK(error_of([&] { apply_square(cube, fixture::theta().face(0)); }) == ErrorKind::kInvalidMove);

  const auto m = find_move(cube);
  REQUIRE(m);
  CHECK(apply_move(cube, *m).size() == 2);
  CHECK(apply_move(fixture::theta(), *find_move(fixture::theta())).size() == 1);
}

TEST_CASE("every move strictly lowers the edge count") {
  for (const auto& [name, g] : catalog::standard_catalog()) {
    if (!g.is_planar()) continue;
    CAPTURE(name);
    for (const Move& m : available_moves(g)) {
      for (const auto& child : apply_move(g, m)) {
        CHECK(child.num_edges() < g.num_edges());
        CHECK(child.is_planar());
      }
    }
  }
}
