#include "taitmap/tait.hpp"

#include <array>
#include <queue>

namespace taitmap {
namespace {

struct EdgeGraph {
  std::vector<std::array<VertexId, 2>> ends;
  std::vector<std::array<EdgeId, 3>> incident;  // per vertex
  bool has_self_loop = false;
};

EdgeGraph edge_graph(const CombinatorialMap& map) {
  EdgeGraph g;
  g.ends.resize(map.num_map_edges());
  g.incident.resize(map.num_vertices());
  for (EdgeId e = 0; e < map.num_map_edges(); ++e) {
    g.ends[e] = map.edge_endpoints(e);
    g.has_self_loop |= g.ends[e][0] == g.ends[e][1];
  }
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    const auto& rot = map.rotation(v);
    for (int i = 0; i < 3; ++i) g.incident[v][i] = map.edge_of(rot[i]);
  }
  return g;
}

/// Colours are 1..3; 0 means unassigned. Returns a bitmask of colours still
/// allowed on edge e.
unsigned allowed_colors(const EdgeGraph& g, const std::vector<std::uint8_t>& color, EdgeId e) {
  unsigned mask = 0b1110;
  for (const VertexId v : g.ends[e]) {
    for (const EdgeId other : g.incident[v]) {
      if (other != e && color[other] != 0) mask &= ~(1u << color[other]);
    }
  }
  return mask;
}

std::uint64_t count_in_order(const EdgeGraph& g, const std::vector<EdgeId>& order, std::size_t depth,
                             std::vector<std::uint8_t>& color) {
  if (depth == order.size()) return 1;
  const EdgeId e = order[depth];
  const unsigned mask = allowed_colors(g, color, e);
  std::uint64_t total = 0;
  for (std::uint8_t c = 1; c <= 3; ++c) {
    if (!(mask & (1u << c))) continue;
    color[e] = c;
    total += count_in_order(g, order, depth + 1, color);
  }
  color[e] = 0;
  return total;
}

}  // namespace

TaitCount count_tait(const CombinatorialMap& map) {
  TaitCount total = 1;
  for (std::size_t i = 0; i < map.free_loops(); ++i) total *= 3;
  if (map.num_map_edges() == 0) return total;

  const EdgeGraph g = edge_graph(map);
  if (g.has_self_loop) return 0;

  // One BFS order over the edge-adjacency graph per connected component; the
  // components are counted separately and multiplied.
  const std::size_t ne = map.num_map_edges();
  std::vector<bool> seen(ne, false);
  std::vector<std::uint8_t> color(ne, 0);
  for (EdgeId start = 0; start < ne; ++start) {
    if (seen[start]) continue;
    std::vector<EdgeId> order;
    std::queue<EdgeId> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop();
      order.push_back(e);
      for (const VertexId v : g.ends[e]) {
        for (const EdgeId next : g.incident[v]) {
          if (!seen[next]) {
            seen[next] = true;
            queue.push(next);
          }
        }
      }
    }
    const std::uint64_t component = count_in_order(g, order, 0, color);
    if (component == 0) return 0;
    total *= component;
  }
  return total;
}

std::vector<TaitColoring> enumerate_tait(const CombinatorialMap& map, std::size_t limit) {
  std::vector<TaitColoring> out;
  if (limit == 0) return out;
  const EdgeGraph g = edge_graph(map);
  if (g.has_self_loop) return out;

  const std::size_t ne = map.num_map_edges();
  const std::size_t total_edges = map.num_edges();
  std::vector<std::uint8_t> color(total_edges, 0);

  // Depth-first in edge-id order yields lexicographic output.
  auto recurse = [&](auto&& self, std::size_t e) -> void {
    if (out.size() >= limit) return;
    if (e == total_edges) {
      out.push_back(color);
      return;
    }
    const unsigned mask = e < ne ? allowed_colors(g, color, static_cast<EdgeId>(e)) : 0b1110u;
    for (std::uint8_t c = 1; c <= 3 && out.size() < limit; ++c) {
      if (!(mask & (1u << c))) continue;
      color[e] = c;
      self(self, e + 1);
    }
    color[e] = 0;
  };
  recurse(recurse, 0);
  return out;
}

bool is_tait_coloring(const CombinatorialMap& map, const TaitColoring& coloring) {
  if (coloring.size() != map.num_edges()) return false;
  for (const std::uint8_t c : coloring) {
    if (c < 1 || c > 3) return false;
  }
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    const auto& rot = map.rotation(v);
    const std::uint8_t a = coloring[map.edge_of(rot[0])];
    const std::uint8_t b = coloring[map.edge_of(rot[1])];
    const std::uint8_t c = coloring[map.edge_of(rot[2])];
    if (a == b || b == c || a == c) return false;
  }
  return true;
}

}  // namespace taitmap
