#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "taitmap/moves.hpp"
#include "taitmap/tait.hpp"

namespace taitmap {

template <class R>
concept CommutativeRing = std::copyable<R> && std::constructible_from<R, int> && requires(R a, R b) {
  { a + b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

/// Factors applied by the non-branching moves. Both square children are
/// weighted by one.
template <CommutativeRing R>
struct RelationWeights {
  R loop;
  R bigon;
  R triangle{1};
};

/// Weights for the Euler characteristic: circle 3, digon 2, triangle 1.
inline RelationWeights<BigInt> euler_weights() { return {BigInt(3), BigInt(2), BigInt(1)}; }

class IrreducibleError : public Error {
 public:
  explicit IrreducibleError(CombinatorialMap stuck)
      : Error(ErrorKind::kIrreducible,
              "irreducible: no free loop, bigon, triangle or square face (" +
                  std::to_string(stuck.num_edges()) + " edges remain)"),
        stuck_(std::move(stuck)) {}

  const CombinatorialMap& stuck_graph() const { return stuck_; }

 private:
  CombinatorialMap stuck_;
};

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

template <CommutativeRing R>
struct TraceNode {
  std::size_t parent = kNoParent;
  std::size_t depth = 0;
  CombinatorialMap graph;
  /// Absent on leaves (empty graphs).
  std::optional<Move> move;
  /// Weight of the applied move; one on leaves and squares.
  R multiplier{1};
  std::vector<std::size_t> children;
  /// multiplier * (sum of child values), or one on a leaf.
  R value{1};
};

/// Nodes in preorder; node 0 is the root and every child index exceeds its
/// parent's.
template <CommutativeRing R>
struct ReductionTrace {
  std::vector<TraceNode<R>> nodes;

  const TraceNode<R>& root() const { return nodes.front(); }
};

template <CommutativeRing R>
struct Reduction {
  R value;
  ReductionTrace<R> trace;
};

struct ReduceOptions {
  /// When set, each step picks uniformly among all applicable moves instead
  /// of the fixed priority order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Reduces `map` to empty graphs, multiplying by the move weights along each
/// branch and summing over square branches. Throws IrreducibleError when some
/// branch admits no move, and kNonPlanar for non-planar input.
template <CommutativeRing R>
Reduction<R> reduce(const CombinatorialMap& map, const RelationWeights<R>& weights,
                    const ReduceOptions& options = {}) {
  if (!map.is_planar()) throw Error(ErrorKind::kNonPlanar, "reduction needs a planar rotation system");
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  ReductionTrace<R> trace;
  trace.nodes.push_back(TraceNode<R>{kNoParent, 0, map, std::nullopt, R(1), {}, R(1)});

  std::vector<std::size_t> pending{0};
  while (!pending.empty()) {
    const std::size_t id = pending.back();
    pending.pop_back();
    if (trace.nodes[id].graph.is_empty()) continue;

    std::optional<Move> move;
    if (rng) {
      auto moves = available_moves(trace.nodes[id].graph);
      if (!moves.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        move = std::move(moves[pick(*rng)]);
      }
    } else {
      move = find_move(trace.nodes[id].graph);
    }
    if (!move) throw IrreducibleError(trace.nodes[id].graph);

    std::vector<CombinatorialMap> children = apply_move(trace.nodes[id].graph, *move);
    switch (move->kind) {
      case MoveKind::kFreeLoop: trace.nodes[id].multiplier = weights.loop; break;
      case MoveKind::kBigon: trace.nodes[id].multiplier = weights.bigon; break;
      case MoveKind::kTriangle: trace.nodes[id].multiplier = weights.triangle; break;
      case MoveKind::kSquare: trace.nodes[id].multiplier = R(1); break;
    }
    trace.nodes[id].move = std::move(move);

    const std::size_t depth = trace.nodes[id].depth + 1;
    // Push in reverse so the first child is expanded first (preorder ids).
    std::vector<std::size_t> ids;
    for (auto& child : children) {
      ids.push_back(trace.nodes.size());
      trace.nodes[id].children.push_back(trace.nodes.size());
      trace.nodes.push_back(TraceNode<R>{id, depth, std::move(child), std::nullopt, R(1), {}, R(1)});
    }
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) pending.push_back(*it);
  }

  for (std::size_t i = trace.nodes.size(); i-- > 0;) {
    TraceNode<R>& node = trace.nodes[i];
    if (node.children.empty()) continue;
    R sum(0);
    for (const std::size_t c : node.children) sum = sum + trace.nodes[c].value;
    node.value = node.multiplier * sum;
  }
  R value = trace.root().value;
  return {std::move(value), std::move(trace)};
}

/// chi(M(G)) through the reduction relations.
BigInt euler_characteristic(const CombinatorialMap& map);

/// One line per node: indentation, depth, move, face half-edges, multiplier.
/// Leaves print as `<depth> empty 1`.
template <CommutativeRing R>
std::string format_trace(const ReductionTrace<R>& trace) {
  std::ostringstream out;
  auto emit = [&](auto&& self, std::size_t id) -> void {
    const TraceNode<R>& node = trace.nodes[id];
    out << std::string(2 * node.depth, ' ') << node.depth << ' ';
    if (!node.move) {
      out << "empty 1\n";
      return;
    }
    out << to_string(node.move->kind) << ' ';
    if (node.move->kind == MoveKind::kFreeLoop) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < node.move->face.half_edges.size(); ++i) {
        out << (i ? "," : "") << node.move->face.half_edges[i];
      }
    }
    out << ' ' << node.multiplier << '\n';
    for (const std::size_t c : node.children) self(self, c);
  };
  if (!trace.nodes.empty()) emit(emit, 0);
  return out.str();
}

}  // namespace taitmap
