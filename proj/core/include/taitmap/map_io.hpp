#pragma once

#include <string>
#include <string_view>

#include "taitmap/planar_map.hpp"

namespace taitmap {

// Line-based graph format:
//
//   # comment
//   vertex <vid>: <h1> <h2> <h3>     counterclockwise rotation
//   edge <eid>: <ha> <hb>
//   loops <n>                        free circle components, default 0
//
// Ids are non-negative decimal integers. Errors carry the offending line.

CombinatorialMap parse_map(std::string_view text, Planarity planarity = Planarity::kRequire);

/// Canonical form: vertices and edges in id order, each rotation starting at
/// its smallest half-edge, `loops` only when nonzero.
std::string serialize_map(const CombinatorialMap& map);

}  // namespace taitmap
