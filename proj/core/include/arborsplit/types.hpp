#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arborsplit {

/// Index into a graph's label table. All subgraphs carved out of one graph
/// share the table, so a VertexId names the same vertex across a derivation.
/// Identifier order is VertexId order.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using LabelTable = std::shared_ptr<const std::vector<std::string>>;

enum class Color : std::uint8_t { unset = 0, one = 1, two = 2 };

inline Color other(Color c) { return c == Color::one ? Color::two : Color::one; }

inline int to_int(Color c) { return static_cast<int>(c); }

/// Rotation system is inconsistent or references unknown vertices.
class MalformedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace arborsplit
