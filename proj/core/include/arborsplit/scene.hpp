#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arborsplit/plane_graph.hpp"

namespace arborsplit {

/// Total or partial map from vertices to {1, 2}, indexed over a label table.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t universe) : colors_(universe, Color::unset) {}

  std::size_t universe_size() const { return colors_.size(); }
  Color operator[](VertexId v) const { return v < colors_.size() ? colors_[v] : Color::unset; }
  void set(VertexId v, Color c) { colors_.at(v) = c; }

  /// Every vertex of g carries a color.
  bool covers(const PlaneGraph& g) const;
  std::vector<VertexId> colored_vertices() const;
  Coloring restricted_to(std::span<const VertexId> vs) const;

  /// Copies the colors of `other` into this coloring. Returns the first vertex
  /// where the two disagree, if any (nothing is written in that case).
  std::optional<VertexId> merge(const Coloring& other);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

enum class SceneViolation {
  unknown_vertex,
  p_not_consecutive,
  q_not_independent,
  q_meets_p,
  q_off_boundary,
  triangle_found,
  delta_domain_mismatch,
};

std::string_view to_string(SceneViolation v);

class SceneError : public std::invalid_argument {
 public:
  SceneError(SceneViolation kind, const std::string& detail);
  SceneViolation kind() const { return kind_; }

 private:
  SceneViolation kind_;
};

/// A scene (G, P, Q, delta): P is a path of consecutive outer-boundary
/// vertices listed in boundary order, delta[i] is the precolor of P[i], Q is
/// an independent set of boundary vertices outside P that must receive 2.
/// |P| <= 2 is not required here; the decomposer enforces it at its entry.
class Scene {
 public:
  const PlaneGraph& graph() const { return graph_; }
  std::span<const VertexId> precolored() const { return p_; }
  std::span<const Color> precolors() const { return delta_; }
  std::span<const VertexId> forced_two() const { return q_; }  // sorted

  std::optional<Color> precolor(VertexId v) const;
  bool in_p(VertexId v) const;
  bool in_q(VertexId v) const;

  /// Number of P vertices precolored 1, and the last such vertex.
  std::pair<std::size_t, VertexId> precolored_ones() const;

  friend Scene make_scene(PlaneGraph g, std::vector<VertexId> p, std::vector<VertexId> q,
                          std::vector<Color> delta);

 private:
  PlaneGraph graph_;
  std::vector<VertexId> p_;
  std::vector<Color> delta_;
  std::vector<VertexId> q_;
};

/// Validates and builds a scene; throws SceneError naming the violated rule.
Scene make_scene(PlaneGraph g, std::vector<VertexId> p, std::vector<VertexId> q,
                 std::vector<Color> delta);

/// Scene (g, empty, empty, empty).
Scene empty_scene(PlaneGraph g);

/// delta on P and 2 on Q.
Coloring forced_assignments(const Scene& s);

/// P appears as a contiguous run (either direction) of one outer walk.
bool consecutive_on_boundary(const PlaneGraph& g, std::span<const VertexId> p);

/// Decomposition of G into induced subgraphs G1, G2 overlapping in H.
struct SplitSpec {
  std::vector<VertexId> g1;  // sorted
  std::vector<VertexId> g2;  // sorted
  std::vector<VertexId> h;   // path or cycle order
  bool h_is_cycle = false;
  std::optional<VertexId> q;  // anchor for the monochromatic-overlap condition
};

/// Checks the structural hypotheses of a split against g and P; returns an
/// explanation of the first violation, or nothing.
std::optional<std::string> split_violation(const PlaneGraph& g, std::span<const VertexId> p,
                                           const SplitSpec& split);

}  // namespace arborsplit
