#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "taitmap/planar_map.hpp"

namespace taitmap {

/// Square is the only branching move.
enum class MoveKind { kFreeLoop, kBigon, kTriangle, kSquare };

std::string_view to_string(MoveKind kind);

struct Move {
  MoveKind kind;
  /// The face being collapsed; empty for kFreeLoop.
  Face face;
  std::size_t loop_index = 0;
};

/// True iff `face` has the given degree with pairwise distinct vertices and
/// pairwise distinct edges. Only such faces are matched by the moves.
bool is_simple_face(const Face& face, std::size_t degree);

/// Every applicable move, ordered FreeLoop, Bigon, Triangle, Square and then
/// by face id. Free loops are interchangeable, so at most one is listed.
std::vector<Move> available_moves(const CombinatorialMap& map);

/// The first entry of available_moves(), if any.
std::optional<Move> find_move(const CombinatorialMap& map);

CombinatorialMap apply_loop(const CombinatorialMap& map, std::size_t loop_index);

/// Removes the digon's two vertices and two edges and joins the outer edges
/// into one; if both outer ends are the same edge the result gains a free loop.
CombinatorialMap apply_bigon(const CombinatorialMap& map, const Face& face);

/// Replaces the triangle by one vertex carrying the three outer edges.
CombinatorialMap apply_triangle(const CombinatorialMap& map, const Face& face);

/// With outer edges a, b, c, d in face order, the first child joins (a,b) and
/// (c,d), the second joins (b,c) and (d,a).
std::pair<CombinatorialMap, CombinatorialMap> apply_square(const CombinatorialMap& map, const Face& face);

/// Children of `map` under `move`: one graph, or two for a square.
std::vector<CombinatorialMap> apply_move(const CombinatorialMap& map, const Move& move);

}  // namespace taitmap
