#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "arborsplit/oracle.hpp"
#include "arborsplit/scene.hpp"
#include "arborsplit/structure.hpp"
#include "arborsplit/trace.hpp"

namespace arborsplit {

struct DecomposeOptions {
  std::size_t base_n = 8;  // scenes with at most max(base_n, 2) vertices go to the oracle
  bool defensive_checks = true;
  std::size_t oracle_cap = kDefaultOracleCap;
};

/// Defaults, with base_n taken from ARBORSPLIT_BASE_N when set.
/// Throws std::invalid_argument on a malformed value.
DecomposeOptions options_from_env();

/// A reduction produced something the argument says cannot happen: an
/// invalid derived scene, a coloring failing its defensive check, no
/// applicable case, or an unsolvable base scene. Carries the derivation
/// built so far.
class CertifiedFailure : public std::runtime_error {
 public:
  explicit CertifiedFailure(const std::string& what) : std::runtime_error(what) {}
  const TraceNode& trace() const { return trace_; }
  void set_trace(TraceNode t) { trace_ = std::move(t); }

 private:
  TraceNode trace_;
};

enum class Guarantee { partial, full };

std::string_view to_string(Guarantee g);

struct GlueResult {
  Coloring coloring;
  Guarantee guarantee = Guarantee::partial;
  std::optional<VertexId> anchor;  // q witnessing the full guarantee
};

/// q on H and on the outer face of s's graph such that H - q is
/// monochromatic under c1 (or empty). Only defined for a path H.
std::optional<VertexId> star_anchor(const Scene& s, const SplitSpec& split, const Coloring& c1);

/// Union of c1 (on G1) and c2 (on G2). Throws std::invalid_argument when the
/// split is malformed or the colorings disagree on H. The guarantee is full
/// exactly when star_anchor finds an anchor.
GlueResult glue(const Scene& s, const SplitSpec& split, const Coloring& c1, const Coloring& c2);

struct Decomposition {
  Coloring coloring;
  TraceNode trace;
};

/// Valid coloring of a scene with |P| <= 2. Throws std::invalid_argument
/// when |P| > 2 and CertifiedFailure when a defensive check trips.
Decomposition color_scene(const Scene& s, const DecomposeOptions& opt = {});

/// color_scene on (g, empty, empty, empty). Throws SceneError when g has a
/// triangle.
Decomposition decompose(const PlaneGraph& g, const DecomposeOptions& opt = {});

/// Rebuilds every scene of the trace from `root`, re-solves the leaves with
/// the oracle, recombines, and re-certifies each node. Throws
/// CertifiedFailure when a node fails or disagrees with its recorded
/// coloring.
Coloring replay(const PlaneGraph& root, const TraceNode& trace, const DecomposeOptions& opt = {});

}  // namespace arborsplit
