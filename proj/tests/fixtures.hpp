#pragma once

#include <vector>

#include "taitmap/planar_map.hpp"

namespace fixture {

using taitmap::build_map;
using taitmap::CombinatorialMap;
using taitmap::EdgePair;
using taitmap::Planarity;
using taitmap::VertexRotation;

inline CombinatorialMap theta() {
  const std::vector<VertexRotation> v{{0, {0, 1, 2}}, {1, {5, 4, 3}}};
  const std::vector<EdgePair> e{{0, 3}, {1, 4}, {2, 5}};
  return build_map(v, e, 0);
}

/// Two vertices each carrying a self-loop, joined by a bridge.
inline CombinatorialMap dumbbell() {
  const std::vector<VertexRotation> v{{0, {0, 1, 2}}, {1, {3, 4, 5}}};
  const std::vector<EdgePair> e{{0, 1}, {2, 3}, {4, 5}};
  return build_map(v, e, 0);
}

}  // namespace fixture
