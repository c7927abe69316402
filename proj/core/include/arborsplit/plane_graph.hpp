#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arborsplit/types.hpp"

namespace arborsplit {

struct Dart {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// One closed boundary walk produced by face tracing. An isolated vertex
/// yields the one-element walk [v].
struct FaceWalk {
  std::vector<VertexId> walk;
  bool is_outer = false;
};

/// Outer boundary summary.
struct OuterBoundary {
  std::vector<VertexId> walk;  // concatenated per-component outer walks
  bool simple = false;         // connected and the walk is a cycle of length >= 3
  bool induced = false;        // simple and chordless
};

/// The two sides of a simple cycle, as vertex sets not meeting the cycle.
/// `left` holds the side that the faces of the forward darts c[i] -> c[i+1]
/// open onto.
struct CycleSides {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

/// Immutable plane graph: a clockwise rotation system over a shared label
/// table plus one designated outer walk per connected component.
///
/// Face tracing: arriving at v along (u, v), the walk continues along
/// (v, w) where w follows u in rotation(v), cyclically. Every dart lies on
/// exactly one traced walk. All components are assumed to lie in the
/// unbounded region; nesting one component inside a bounded face of another
/// is not representable.
class PlaneGraph {
 public:
  using Rotation = std::vector<std::vector<VertexId>>;

  PlaneGraph();

  /// `rotation` is indexed by VertexId over the whole label table; entries for
  /// ids not listed in `vertices` must be empty. `outer_walks` holds one
  /// walk per component (in any component order); each must match a traced
  /// face cyclically, in either direction.
  static PlaneGraph from_outer_walks(LabelTable labels, std::vector<VertexId> vertices,
                                     Rotation rotation,
                                     const std::vector<std::vector<VertexId>>& outer_walks);

  /// Like from_outer_walks, but each component's outer face is the traced
  /// face containing one of `outer_darts`. Components without a designated
  /// dart (including isolated vertices) fall back to their longest walk.
  static PlaneGraph from_outer_darts(LabelTable labels, std::vector<VertexId> vertices,
                                     Rotation rotation, std::span<const Dart> outer_darts);

  /// Builds a fresh label table from names; rotations are given by name.
  static PlaneGraph from_names(const std::vector<std::string>& names,
                               const std::vector<std::vector<std::string>>& rotation,
                               const std::vector<std::string>& outer_face);

  const LabelTable& labels() const { return labels_; }
  std::size_t universe_size() const { return rotation_.size(); }
  const std::string& name(VertexId v) const { return (*labels_)[v]; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;  // throws std::out_of_range

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return vertices_.empty(); }
  bool contains(VertexId v) const { return v < present_.size() && present_[v]; }

  std::span<const VertexId> rotation(VertexId v) const { return rotation_[v]; }
  std::size_t degree(VertexId v) const { return rotation_[v].size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Neighbour following `u` in rotation(v), cyclically.
  VertexId successor(VertexId v, VertexId u) const;

  const std::vector<FaceWalk>& faces() const { return faces_; }
  std::size_t face_of(Dart d) const;

  /// One outer walk per component, ordered by the component's smallest id.
  const std::vector<std::vector<VertexId>>& outer_walks() const { return outer_walks_; }
  /// Concatenation of outer_walks(); equals the single walk when connected.
  std::vector<VertexId> outer_face() const;

  bool on_outer_face(VertexId v) const { return on_outer_[v] != 0; }
  /// Edge incident with the outer face (at least one of its darts is outer).
  bool is_boundary_edge(VertexId u, VertexId v) const;
  /// Neighbours of v joined to it by boundary edges.
  std::vector<VertexId> boundary_neighbors(VertexId v) const;

  std::size_t component_count() const { return outer_walks_.size(); }

  /// Subgraph induced by `keep`, rotations inherited. Faces merged by the
  /// deletion keep track of whether they absorbed the old outer face; the
  /// new outer walk of each component is the traced face lying in that
  /// merged region. Throws std::invalid_argument when keep is empty.
  PlaneGraph induced_subgraph(std::span<const VertexId> keep) const;
  PlaneGraph without(std::span<const VertexId> drop) const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b);

 private:
  struct DartIndex {
    std::vector<std::vector<std::uint32_t>> face;     // face id per (v, i)
    std::vector<std::vector<std::uint32_t>> reverse;  // index of v in rotation(rotation[v][i])
  };

  static PlaneGraph build(LabelTable labels, std::vector<VertexId> vertices, Rotation rotation);
  void trace();
  void finalize_outer(const std::vector<std::size_t>& outer_face_ids);
  std::size_t index_in_rotation(VertexId v, VertexId u) const;

  LabelTable labels_;
  std::vector<VertexId> vertices_;
  std::vector<char> present_;
  Rotation rotation_;
  std::size_t edge_count_ = 0;
  DartIndex darts_;
  std::vector<FaceWalk> faces_;
  std::vector<std::size_t> isolated_face_;  // face id for isolated vertices, by VertexId
  std::vector<std::vector<VertexId>> outer_walks_;
  std::vector<char> on_outer_;
};

std::vector<FaceWalk> trace_faces(const PlaneGraph& g);

bool is_triangle_free(const PlaneGraph& g);

/// A triangle as three ids, if any (smallest ids first).
std::optional<std::array<VertexId, 3>> find_triangle(const PlaneGraph& g);

OuterBoundary outer_cycle(const PlaneGraph& g);

std::vector<VertexId> internal_vertices(const PlaneGraph& g);

PlaneGraph induced_subgraph(const PlaneGraph& g, std::span<const VertexId> keep);

/// Splits the vertices off a simple cycle into its two sides using only the
/// rotation system. Throws std::invalid_argument if `cycle` is not a cycle
/// of g, MalformedGraph if the sides overlap.
CycleSides sides_of_cycle(const PlaneGraph& g, std::span<const VertexId> cycle);

/// Of the two sides of `cycle`, the one not containing the outer face.
std::vector<VertexId> cycle_interior(const PlaneGraph& g, std::span<const VertexId> cycle);

/// Subgraph drawn in the closed disk bounded by `cycle` (the side away from
/// the outer face), whose outer walk is the cycle itself.
PlaneGraph disk_subgraph(const PlaneGraph& g, std::span<const VertexId> cycle);

}  // namespace arborsplit
