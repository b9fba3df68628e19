#include "taitmap/map_io.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace taitmap {
namespace {

[[noreturn]] void fail(ErrorKind kind, std::size_t line_no, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorKind::kParse, line_no, "expected non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

CombinatorialMap parse_map(std::string_view text, Planarity planarity) {
  std::vector<VertexRotation> rotations;
  std::vector<EdgePair> pairs;
  std::set<std::uint64_t> vertex_ids, edge_ids;
  std::optional<std::size_t> loops;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view head = line, body;
    const std::size_t colon = line.find(':');
    if (colon != std::string_view::npos) {
      head = line.substr(0, colon);
      body = line.substr(colon + 1);
    }
    const auto head_tokens = split_ws(head);
    if (head_tokens.empty()) {
      if (!split_ws(body).empty() || colon != std::string_view::npos) fail(ErrorKind::kParse, line_no, "missing keyword");
      continue;
    }
    const std::string_view keyword = head_tokens[0];

    if (keyword == "loops") {
      if (colon != std::string_view::npos || head_tokens.size() != 2) {
        fail(ErrorKind::kParse, line_no, "expected 'loops <n>'");
      }
      if (loops) fail(ErrorKind::kDuplicateId, line_no, "repeated 'loops' line");
      loops = parse_id(head_tokens[1], line_no);
      continue;
    }
    if (keyword != "vertex" && keyword != "edge") {
      fail(ErrorKind::kParse, line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
    if (colon == std::string_view::npos || head_tokens.size() != 2) {
      fail(ErrorKind::kParse, line_no, "expected '" + std::string(keyword) + " <id>: ...'");
    }
    const std::uint64_t id = parse_id(head_tokens[1], line_no);
    std::vector<std::uint64_t> halves;
    for (const auto token : split_ws(body)) halves.push_back(parse_id(token, line_no));

    if (keyword == "vertex") {
      if (!vertex_ids.insert(id).second) fail(ErrorKind::kDuplicateId, line_no, "duplicate vertex id " + std::to_string(id));
      if (halves.size() != 3) {
        fail(ErrorKind::kNonTrivalent, line_no,
             "vertex " + std::to_string(id) + " has degree " + std::to_string(halves.size()));
      }
      rotations.push_back({id, std::move(halves)});
    } else {
      if (!edge_ids.insert(id).second) fail(ErrorKind::kDuplicateId, line_no, "duplicate edge id " + std::to_string(id));
      if (halves.size() != 2) fail(ErrorKind::kParse, line_no, "edge needs exactly two half-edges");
      pairs.push_back({halves[0], halves[1]});
    }
  }
  return build_map(rotations, pairs, loops.value_or(0), planarity);
}

std::string serialize_map(const CombinatorialMap& map) {
  std::ostringstream out;
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    const auto& rot = map.rotation(v);
    out << "vertex " << v << ": " << rot[0] << ' ' << rot[1] << ' ' << rot[2] << '\n';
  }
  for (EdgeId e = 0; e < map.num_map_edges(); ++e) {
    const auto [a, b] = map.edge_half_edges(e);
    out << "edge " << e << ": " << a << ' ' << b << '\n';
  }
  if (map.free_loops() > 0) out << "loops " << map.free_loops() << '\n';
  return out.str();
}

}  // namespace taitmap
