#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arborsplit/scene.hpp"

namespace arborsplit {

enum class NodeKind { base, components, cut, four_cycle, extend, main_case };

std::string_view to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(std::string_view s);

/// One step of a derivation: the scene it solved, the reduction applied,
/// and the resulting coloring (restricted to the scene's vertices).
struct TraceNode {
  NodeKind kind = NodeKind::base;
  std::string label;  // sub-case: cut-vertex/chord, s=t=2/s=1, A..D
  std::vector<VertexId> vertices;  // sorted
  std::vector<VertexId> p;
  std::vector<Color> delta;
  std::vector<VertexId> q;  // sorted
  std::vector<VertexId> separator;  // H (path) or the 4-cycle
  bool separator_is_cycle = false;
  std::optional<VertexId> anchor;
  std::vector<VertexId> removed;  // vertices colored 1 by this step
  std::string guarantee;          // glue level: "partial" or "full"
  Coloring coloring;
  std::vector<TraceNode> children;
};

std::size_t node_count(const TraceNode& t);
std::size_t depth(const TraceNode& t);

}  // namespace arborsplit
