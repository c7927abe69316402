#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "arborsplit/scene.hpp"

namespace arborsplit {

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const PlaneGraph& g);

/// Cut vertices of g, sorted.
std::vector<VertexId> articulation_points(const PlaneGraph& g);

/// A separation of a connected graph along a cut vertex, or along a chord of
/// the outer cycle. G1 contains P. Cut vertices are tried before chords.
std::optional<SplitSpec> find_cut(const PlaneGraph& g, std::span<const VertexId> p);

struct FourCycle {
  std::vector<VertexId> cycle;     // in cycle order, smallest id first
  std::vector<VertexId> interior;  // sorted, nonempty
};

/// First 4-cycle (canonical enumeration order) that does not bound a face.
std::optional<FourCycle> find_separating_4cycle(const PlaneGraph& g);

/// The outer cycle, when it has length four and encloses internal vertices.
std::optional<FourCycle> outer_four_cycle(const PlaneGraph& g);

struct ExtensionConfig {
  VertexId x = kNoVertex;  // internal
  VertexId s = kNoVertex;  // boundary neighbour in Q
  VertexId t = kNoVertex;  // boundary neighbour not adjacent to s
};

/// Internal vertex with two non-adjacent boundary neighbours s, t where
/// s is in Q. Among candidates for t, the one farthest from s along the
/// outer cycle wins (ties by id). Requires an induced outer cycle.
std::optional<ExtensionConfig> find_extension_config(const PlaneGraph& g, std::span<const VertexId> q);

/// Split of a graph with a simple outer cycle along the path s-x-t, where s
/// and t lie on the outer cycle and x is internal. G1 is the side holding P;
/// when both sides do, the side of the forward arc from s wins.
SplitSpec split_through(const PlaneGraph& g, std::span<const VertexId> p, const ExtensionConfig& cfg);

enum class MainCase { a, b, c, d };

std::string_view to_string(MainCase c);

/// Consecutive outer-cycle vertices r, s, x, z, t.
struct MainQuad {
  MainCase label = MainCase::a;
  VertexId r = kNoVertex;
  VertexId s = kNoVertex;
  VertexId x = kNoVertex;
  VertexId z = kNoVertex;
  VertexId t = kNoVertex;
};

class NoCaseApplies : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scans x over the outer cycle minus P and Q in id order and returns the
/// first position where case A, B, C or D applies (preferred in that order).
/// For C and D, x must not be adjacent to a vertex precolored 1.
MainQuad choose_main_quad(const Scene& s);

}  // namespace arborsplit
