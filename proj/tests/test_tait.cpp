#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "taitmap/catalog.hpp"
#include "taitmap/tait.hpp"

using namespace taitmap;

TEST_CASE("count_tait examples") {
  CHECK(count_tait(catalog::circle()) == 3);
  CHECK(count_tait(fixture::theta()) == 6);
  CHECK(count_tait(catalog::k4()) == 6);
  CHECK(count_tait(catalog::petersen()) == 0);
  CHECK(count_tait(CombinatorialMap::empty()) == 1);
  CHECK(count_tait(fixture::dumbbell()) == 0);
  CHECK(count_tait(CombinatorialMap::circles(4)) == 81);
}

TEST_CASE("count_tait agrees with exhaustive search") {
  for (const auto& [name, g] : catalog::standard_catalog()) {
    if (g.num_map_edges() > 12) continue;
    CAPTURE(name);
    CHECK(count_tait(g) == oracle::brute_force_tait(g));
  }
  CHECK(count_tait(catalog::petersen()) == oracle::brute_force_tait(catalog::petersen()));
}

TEST_CASE("larger counts") {
  CHECK(count_tait(catalog::dodecahedron()) == 60);
  CHECK(count_tait(catalog::prism(8)) == 264);
  CHECK(count_tait(catalog::prism(6)) == 72);
}

TEST_CASE("enumerate_tait on theta lists the six permutations") {
  const auto all = enumerate_tait(fixture::theta(), 10);
  const std::vector<TaitColoring> expected{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  CHECK(all == expected);
}

TEST_CASE("enumerate_tait truncation and empty results") {
  CHECK(enumerate_tait(catalog::circle(), 2) == std::vector<TaitColoring>{{1}, {2}});
  CHECK(enumerate_tait(fixture::dumbbell(), 10).empty());
  CHECK(enumerate_tait(catalog::petersen(), 10).empty());
  CHECK(enumerate_tait(catalog::cube(), 0).empty());
}

TEST_CASE("enumerated colourings pass an independent vertex check") {
  for (const auto& [name, g] : catalog::standard_catalog()) {
    CAPTURE(name);
    const auto all = enumerate_tait(g, 500);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    if (count_tait(g) <= 500) CHECK(BigInt(all.size()) == count_tait(g));
    for (const auto& c : all) {
      REQUIRE(c.size() == g.num_edges());
      CHECK(is_tait_coloring(g, c));
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& r = g.rotation(v);
        const int a = c[g.edge_of(r[0])];
        const int b = c[g.edge_of(r[1])];
        const int d = c[g.edge_of(r[2])];
        CHECK(a + b + d == 6);
        CHECK(a * b * d == 6);
      }
    }
  }
}

TEST_CASE("is_tait_coloring rejects bad vectors") {
  const auto g = fixture::theta();
  CHECK_FALSE(is_tait_coloring(g, {1, 1, 2}));
  CHECK_FALSE(is_tait_coloring(g, {0, 1, 2}));
  CHECK_FALSE(is_tait_coloring(g, {1, 2, 4}));
  CHECK_FALSE(is_tait_coloring(g, {1, 2}));
}

TEST_CASE("count_tait is multiplicative over disjoint unions") {
  const auto corpus = catalog::standard_catalog();
  for (std::size_t i = 0; i < corpus.size(); i += 2) {
    for (std::size_t j = 1; j < corpus.size(); j += 3) {
      const auto& a = corpus[i].map;
      const auto& b = corpus[j].map;
      if (a.num_edges() + b.num_edges() > 40) continue;
      CAPTURE(corpus[i].name);
      CAPTURE(corpus[j].name);
      CHECK(count_tait(disjoint_union(a, b)) == count_tait(a) * count_tait(b));
    }
  }
}

TEST_CASE("count_tait is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (const auto& [name, g] : catalog::standard_catalog()) {
    CAPTURE(name);
    for (int k = 0; k < 3; ++k) {
      std::vector<HalfEdgeId> perm(g.num_half_edges());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(count_tait(relabel(g, perm)) == count_tait(g));
    }
  }
}
