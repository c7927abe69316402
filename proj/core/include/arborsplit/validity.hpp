#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arborsplit/scene.hpp"

namespace arborsplit {

enum class Clause { forced, g1, g2, g3, g4 };

std::string_view to_string(Clause c);

/// Outcome of one clause. Witness shapes:
///   forced: the offending vertex
///   g1:     a closed monochromatic cycle, or [v, four class-1 neighbours...]
///   g2:     the edge [v, u]
///   g3:     the monochromatic path from u to w
///   g4:     [v, its class-1 neighbours...]
struct CheckReport {
  Clause clause = Clause::forced;
  bool pass = true;
  std::string message;
  std::vector<VertexId> witness;
};

struct ValidityReport {
  std::vector<CheckReport> checks;  // forced, g1, g2, g3, g4

  bool valid() const;
  const CheckReport* first_failure() const;
};

CheckReport check_forced(const Scene& s, const Coloring& c);
CheckReport check_g1(const Scene& s, const Coloring& c);
CheckReport check_g2(const Scene& s, const Coloring& c);
CheckReport check_g3(const Scene& s, const Coloring& c);
CheckReport check_g4(const Scene& s, const Coloring& c);
ValidityReport check_valid(const Scene& s, const Coloring& c);

/// Monochromatic path between u and w in g, if one exists.
std::optional<std::vector<VertexId>> mono_path(const PlaneGraph& g, const Coloring& c, VertexId u,
                                               VertexId w);

/// Throws std::invalid_argument when u == w.
bool mono_path_exists(const Scene& s, const Coloring& c, VertexId u, VertexId w);

/// Class 1 induces a forest of maximum degree at most three and class 2
/// induces a forest.
bool is_forest_partition(const PlaneGraph& g, const Coloring& c);

/// Precomputed validity test for one scene, for callers that test many
/// colorings of the same scene. Colorings are given over local indices:
/// position i colours vertices()[i].
class Validator {
 public:
  explicit Validator(const Scene& s);

  std::span<const VertexId> vertices() const { return vertices_; }
  /// Forced color per local index (unset for free vertices).
  std::span<const Color> forced() const { return forced_; }

  bool is_valid(std::span<const Color> local) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Color> forced_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> not_one_;        // G2 targets
  std::vector<std::uint32_t> degree_capped_;  // G4 targets
  std::vector<std::pair<std::uint32_t, std::uint32_t>> separated_;  // G3 pairs
  mutable std::vector<std::uint32_t> parent_;
  mutable std::vector<std::uint8_t> degree_;
};

}  // namespace arborsplit
