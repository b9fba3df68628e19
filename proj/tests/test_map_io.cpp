#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "taitmap/catalog.hpp"
#include "taitmap/error.hpp"
#include "taitmap/map_io.hpp"

using namespace taitmap;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_map(text);
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected parse_map to throw on: " << text);
  return ErrorKind::kDomain;
}

}  // namespace

TEST_CASE("parse theta with comments and blank lines") {
  const auto g = parse_map(
      "# theta\n"
      "vertex 0: 0 1 2\n"
      "\n"
      "vertex 1: 5 4 3   # second\n"
      "edge 0: 0 3\n"
      "edge 1: 1 4\n"
      "edge 2: 2 5\n");
  CHECK(g == fixture::theta());
}

TEST_CASE("serialize is canonical") {
  CHECK(serialize_map(catalog::circle()) == "loops 1\n");
  CHECK(serialize_map(CombinatorialMap::empty()).empty());
  CHECK(serialize_map(fixture::theta()) ==
        "vertex 0: 0 1 2\n"
        "vertex 1: 3 5 4\n"
        "edge 0: 0 3\n"
        "edge 1: 1 4\n"
        "edge 2: 2 5\n");
}

TEST_CASE("parse rejects malformed input") {
  CHECK(parse_error("vertex 0: 0 1 x\n") == ErrorKind::kParse);
  CHECK(parse_error("vertex -1: 0 1 2\n") == ErrorKind::kParse);
  CHECK(parse_error("vertex 0: 0 1\nedge 0: 0 1\n") == ErrorKind::kNonTrivalent);
  CHECK(parse_error("vertex 0: 0 1 2\nvertex 0: 3 4 5\nedge 0: 0 3\nedge 1: 1 4\nedge 2: 2 5\n") ==
        ErrorKind::kDuplicateId);
  CHECK(parse_error("vertex 0: 0 1 2\nvertex 1: 5 4 3\nedge 0: 0 3\nedge 0: 1 4\nedge 2: 2 5\n") ==
        ErrorKind::kDuplicateId);
  CHECK(parse_error("loops 1\nloops 2\n") == ErrorKind::kDuplicateId);
  CHECK(parse_error("face 0: 1 2\n") == ErrorKind::kParse);
  CHECK(parse_error("edge 0: 1 2 3\n") == ErrorKind::kParse);
  CHECK(parse_error("vertex 0 0 1 2\n") == ErrorKind::kParse);
  CHECK(parse_error("vertex 0: 0 1 2\nedge 0: 0 1\n") == ErrorKind::kUnmatchedHalfEdge);
  CHECK(parse_error("vertex 0: 0 1 2\nvertex 1: 3 4 5\nedge 0: 0 3\nedge 1: 1 4\nedge 2: 2 5\n") ==
        ErrorKind::kNonPlanar);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_map("# header\nvertex 0: 0 1 2\nvertex 1: a 4 3\n");
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("non-planar input needs the explicit flag") {
  const std::string petersen = serialize_map(catalog::petersen());
  CHECK(parse_error(petersen) == ErrorKind::kNonPlanar);
  CHECK(parse_map(petersen, Planarity::kAllowNonPlanar) == catalog::petersen());
}

TEST_CASE("round trip over the catalog") {
  for (const auto& [name, g] : catalog::standard_catalog()) {
    CAPTURE(name);
    const auto planarity = g.is_planar() ? Planarity::kRequire : Planarity::kAllowNonPlanar;
    const std::string text = serialize_map(g);
    const auto back = parse_map(text, planarity);
    CHECK(back == g);
    CHECK(serialize_map(back) == text);
  }
}
