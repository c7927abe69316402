#include "arborsplit/scene.hpp"

#include <algorithm>

namespace arborsplit {

bool Coloring::covers(const PlaneGraph& g) const {
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [&](VertexId v) { return (*this)[v] != Color::unset; });
}

std::vector<VertexId> Coloring::colored_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < colors_.size(); ++v) {
    if (colors_[v] != Color::unset) out.push_back(v);
  }
  return out;
}

Coloring Coloring::restricted_to(std::span<const VertexId> vs) const {
  Coloring out(colors_.size());
  for (VertexId v : vs) out.colors_.at(v) = (*this)[v];
  return out;
}

std::optional<VertexId> Coloring::merge(const Coloring& other) {
  if (other.colors_.size() > colors_.size()) colors_.resize(other.colors_.size(), Color::unset);
  for (VertexId v = 0; v < other.colors_.size(); ++v) {
    const Color c = other.colors_[v];
    if (c != Color::unset && colors_[v] != Color::unset && colors_[v] != c) return v;
  }
  for (VertexId v = 0; v < other.colors_.size(); ++v) {
    if (other.colors_[v] != Color::unset) colors_[v] = other.colors_[v];
  }
  return std::nullopt;
}

std::string_view to_string(SceneViolation v) {
  switch (v) {
    case SceneViolation::unknown_vertex: return "unknown-vertex";
    case SceneViolation::p_not_consecutive: return "P-not-consecutive";
    case SceneViolation::q_not_independent: return "Q-not-independent";
    case SceneViolation::q_meets_p: return "Q-meets-P";
    case SceneViolation::q_off_boundary: return "Q-off-boundary";
    case SceneViolation::triangle_found: return "triangle-found";
    case SceneViolation::delta_domain_mismatch: return "delta-domain-mismatch";
  }
  return "?";
}

SceneError::SceneError(SceneViolation kind, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

std::optional<Color> Scene::precolor(VertexId v) const {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] == v) return delta_[i];
  }
  return std::nullopt;
}

bool Scene::in_p(VertexId v) const { return std::find(p_.begin(), p_.end(), v) != p_.end(); }

bool Scene::in_q(VertexId v) const { return std::binary_search(q_.begin(), q_.end(), v); }

std::pair<std::size_t, VertexId> Scene::precolored_ones() const {
  std::size_t n = 0;
  VertexId last = kNoVertex;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (delta_[i] == Color::one) {
      ++n;
      last = p_[i];
    }
  }
  return {n, last};
}

bool consecutive_on_boundary(const PlaneGraph& g, std::span<const VertexId> p) {
  if (p.empty()) return true;
  auto sorted = std::vector<VertexId>(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (p.size() == 1) return g.contains(p[0]) && g.on_outer_face(p[0]);
  for (const auto& w : g.outer_walks()) {
    const std::size_t m = w.size();
    if (p.size() > m) continue;
    for (std::size_t i = 0; i < m; ++i) {
      bool fwd = true;
      bool bwd = true;
      for (std::size_t k = 0; k < p.size() && (fwd || bwd); ++k) {
        fwd = fwd && p[k] == w[(i + k) % m];
        bwd = bwd && p[k] == w[(i + m - k % m) % m];
      }
      if (fwd || bwd) return true;
    }
  }
  return false;
}

Scene make_scene(PlaneGraph g, std::vector<VertexId> p, std::vector<VertexId> q,
                 std::vector<Color> delta) {
  for (VertexId v : p) {
    if (!g.contains(v)) throw SceneError(SceneViolation::unknown_vertex, "P vertex not in graph");
  }
  for (VertexId v : q) {
    if (!g.contains(v)) throw SceneError(SceneViolation::unknown_vertex, "Q vertex not in graph");
  }
  if (delta.size() != p.size()) {
    throw SceneError(SceneViolation::delta_domain_mismatch, "delta must color exactly the vertices of P");
  }
  for (Color c : delta) {
    if (c != Color::one && c != Color::two) {
      throw SceneError(SceneViolation::delta_domain_mismatch, "delta values must be 1 or 2");
    }
  }
  if (auto t = find_triangle(g)) {
    throw SceneError(SceneViolation::triangle_found,
                     g.name((*t)[0]) + "," + g.name((*t)[1]) + "," + g.name((*t)[2]));
  }
  if (!consecutive_on_boundary(g, p)) {
    throw SceneError(SceneViolation::p_not_consecutive, "P is not a run of the outer boundary");
  }
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  for (VertexId v : q) {
    if (std::find(p.begin(), p.end(), v) != p.end()) throw SceneError(SceneViolation::q_meets_p, g.name(v));
    if (!g.on_outer_face(v)) throw SceneError(SceneViolation::q_off_boundary, g.name(v));
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (VertexId w : g.rotation(q[i])) {
      if (std::binary_search(q.begin(), q.end(), w)) {
        throw SceneError(SceneViolation::q_not_independent, g.name(q[i]) + "-" + g.name(w));
      }
    }
  }
  Scene s;
  s.graph_ = std::move(g);
  s.p_ = std::move(p);
  s.delta_ = std::move(delta);
  s.q_ = std::move(q);
  return s;
}

Scene empty_scene(PlaneGraph g) { return make_scene(std::move(g), {}, {}, {}); }

Coloring forced_assignments(const Scene& s) {
  Coloring c(s.graph().universe_size());
  for (std::size_t i = 0; i < s.precolored().size(); ++i) c.set(s.precolored()[i], s.precolors()[i]);
  for (VertexId v : s.forced_two()) c.set(v, Color::two);
  return c;
}

std::optional<std::string> split_violation(const PlaneGraph& g, std::span<const VertexId> p,
                                           const SplitSpec& split) {
  std::vector<char> in1(g.universe_size(), 0), in2(g.universe_size(), 0), inh(g.universe_size(), 0);
  for (VertexId v : split.g1) {
    if (!g.contains(v)) return "G1 names a vertex outside G";
    in1[v] = 1;
  }
  for (VertexId v : split.g2) {
    if (!g.contains(v)) return "G2 names a vertex outside G";
    in2[v] = 1;
  }
  for (VertexId v : split.h) {
    if (!g.contains(v) || inh[v]) return "H is not a list of distinct vertices of G";
    inh[v] = 1;
  }
  if (split.h.empty()) return "H is empty";
  for (VertexId v : g.vertices()) {
    if (!in1[v] && !in2[v]) return "G1 and G2 do not cover " + g.name(v);
    if ((in1[v] && in2[v]) != (inh[v] != 0)) return "G1 and G2 do not intersect exactly in H at " + g.name(v);
    if (in1[v] && !inh[v]) {
      for (VertexId w : g.rotation(v)) {
        if (in2[w] && !inh[w]) return "edge between G1 - H and G2 - H";
      }
    }
  }
  for (VertexId v : p) {
    if (!in1[v]) return "P is not contained in G1";
  }
  // H must induce the path (or cycle) in the listed order.
  const std::size_t m = split.h.size();
  if (split.h_is_cycle && m < 3) return "cycle H needs three vertices";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool consecutive = j == i + 1 || (split.h_is_cycle && i == 0 && j == m - 1);
      if (g.adjacent(split.h[i], split.h[j]) != consecutive) return "H does not induce a path or cycle";
    }
  }
  if (split.q && !inh[*split.q]) return "anchor q is not on H";
  return std::nullopt;
}

}  // namespace arborsplit
