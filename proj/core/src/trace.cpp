#include "arborsplit/trace.hpp"

#include <algorithm>
#include <array>

namespace arborsplit {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 6> kKinds{{
    {NodeKind::base, "base"},
    {NodeKind::components, "components"},
    {NodeKind::cut, "cut"},
    {NodeKind::four_cycle, "four_cycle"},
    {NodeKind::extend, "extend"},
    {NodeKind::main_case, "main_case"},
}};

}  // namespace

std::string_view to_string(NodeKind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kKinds) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

std::size_t node_count(const TraceNode& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

std::size_t depth(const TraceNode& t) {
  std::size_t d = 0;
  for (const auto& c : t.children) d = std::max(d, depth(c));
  return d + 1;
}

}  // namespace arborsplit
