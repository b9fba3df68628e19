#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "taitmap/planar_map.hpp"

namespace taitmap {

using BigInt = boost::multiprecision::cpp_int;
using TaitCount = BigInt;

/// Colour in {1, 2, 3} for every edge, indexed by EdgeId (free loops last).
using TaitColoring = std::vector<std::uint8_t>;

/// Exact number of Tait colourings by backtracking. Rotation data is ignored,
/// so non-planar maps are accepted. Each free loop contributes a factor 3.
TaitCount count_tait(const CombinatorialMap& map);

/// First `limit` colourings in lexicographic order of the colour vector.
std::vector<TaitColoring> enumerate_tait(const CombinatorialMap& map, std::size_t limit);

/// True iff every vertex sees three distinct colours and all colours are in
/// {1, 2, 3}.
bool is_tait_coloring(const CombinatorialMap& map, const TaitColoring& coloring);

}  // namespace taitmap
