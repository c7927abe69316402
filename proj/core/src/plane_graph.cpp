#include "arborsplit/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "union_find.hpp"

namespace arborsplit {

namespace {

constexpr std::uint32_t kUnsetFace = std::numeric_limits<std::uint32_t>::max();

// Rotates a closed walk so it starts at the lexicographically smallest dart.
std::vector<VertexId> canonical_start(const std::vector<VertexId>& walk) {
  if (walk.size() < 2) return walk;
  const std::size_t m = walk.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < m; ++i) {
    const auto cand = std::pair{walk[i], walk[(i + 1) % m]};
    const auto cur = std::pair{walk[best], walk[(best + 1) % m]};
    if (cand < cur) best = i;
  }
  std::vector<VertexId> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(walk[(best + i) % m]);
  return out;
}

bool cyclic_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t m = a.size();
  for (std::size_t shift = 0; shift < m; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = a[i] == b[(i + shift) % m];
    if (ok) return true;
  }
  return false;
}

// Component index per vertex (kNoVertex for absent ids), numbered by smallest member.
std::vector<VertexId> component_ids(const PlaneGraph& g, std::size_t* count) {
  std::vector<VertexId> comp(g.universe_size(), kNoVertex);
  VertexId next = 0;
  std::vector<VertexId> stack;
  for (VertexId s : g.vertices()) {
    if (comp[s] != kNoVertex) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.rotation(v)) {
        if (comp[w] == kNoVertex) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace

PlaneGraph::PlaneGraph() : labels_(std::make_shared<const std::vector<std::string>>()) {}

PlaneGraph PlaneGraph::build(LabelTable labels, std::vector<VertexId> vertices, Rotation rotation) {
  if (!labels) throw MalformedGraph("missing label table");
  const std::size_t universe = labels->size();
  if (rotation.size() != universe) throw MalformedGraph("rotation table size differs from label table");

  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw MalformedGraph("repeated vertex");
  }

  PlaneGraph g;
  g.labels_ = std::move(labels);
  g.present_.assign(universe, 0);
  for (VertexId v : vertices) {
    if (v >= universe) throw MalformedGraph("vertex id out of range");
    g.present_[v] = 1;
  }
  for (VertexId v = 0; v < universe; ++v) {
    if (!g.present_[v] && !rotation[v].empty()) {
      throw MalformedGraph("rotation given for absent vertex " + (*g.labels_)[v]);
    }
  }

  std::size_t darts = 0;
  g.darts_.reverse.assign(universe, {});
  for (VertexId v : vertices) {
    const auto& rot = rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const VertexId u = rot[i];
      if (u >= universe || !g.present_[u]) {
        throw MalformedGraph("vertex " + (*g.labels_)[v] + " lists an unknown neighbour");
      }
      if (u == v) throw MalformedGraph("loop at " + (*g.labels_)[v]);
      if (std::find(rot.begin() + static_cast<std::ptrdiff_t>(i) + 1, rot.end(), u) != rot.end()) {
        throw MalformedGraph("repeated neighbour " + (*g.labels_)[u] + " in rotation of " + (*g.labels_)[v]);
      }
      const auto& back = rotation[u];
      const auto it = std::find(back.begin(), back.end(), v);
      if (it == back.end()) {
        throw MalformedGraph("rotation asymmetry: " + (*g.labels_)[u] + " in rotation of " +
                             (*g.labels_)[v] + " but not conversely");
      }
      g.darts_.reverse[v].push_back(static_cast<std::uint32_t>(it - back.begin()));
    }
    darts += rot.size();
  }
  g.edge_count_ = darts / 2;
  g.vertices_ = std::move(vertices);
  g.rotation_ = std::move(rotation);
  g.on_outer_.assign(universe, 0);
  g.trace();
  return g;
}

void PlaneGraph::trace() {
  const std::size_t universe = rotation_.size();
  darts_.face.assign(universe, {});
  isolated_face_.assign(universe, kUnsetFace);
  faces_.clear();
  for (VertexId v : vertices_) darts_.face[v].assign(rotation_[v].size(), kUnsetFace);

  for (VertexId v : vertices_) {
    if (rotation_[v].empty()) {
      isolated_face_[v] = faces_.size();
      faces_.push_back(FaceWalk{{v}, false});
      continue;
    }
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      if (darts_.face[v][i] != kUnsetFace) continue;
      const auto id = static_cast<std::uint32_t>(faces_.size());
      FaceWalk face;
      VertexId cur = v;
      std::size_t idx = i;
      do {
        face.walk.push_back(cur);
        darts_.face[cur][idx] = id;
        const VertexId next = rotation_[cur][idx];
        const std::size_t back = darts_.reverse[cur][idx];
        idx = (back + 1) % rotation_[next].size();
        cur = next;
      } while (!(cur == v && idx == i));
      faces_.push_back(std::move(face));
    }
  }
}

void PlaneGraph::finalize_outer(const std::vector<std::size_t>& outer_face_ids) {
  // outer_face_ids is indexed by component (smallest-id order).
  outer_walks_.clear();
  std::fill(on_outer_.begin(), on_outer_.end(), 0);
  for (std::size_t f : outer_face_ids) {
    faces_[f].is_outer = true;
    for (VertexId v : faces_[f].walk) on_outer_[v] = 1;
  }
  for (std::size_t f : outer_face_ids) outer_walks_.push_back(faces_[f].walk);
}

PlaneGraph PlaneGraph::from_outer_walks(LabelTable labels, std::vector<VertexId> vertices,
                                        Rotation rotation,
                                        const std::vector<std::vector<VertexId>>& outer_walks) {
  PlaneGraph g = build(std::move(labels), std::move(vertices), std::move(rotation));
  std::size_t ncomp = 0;
  const auto comp = component_ids(g, &ncomp);
  std::vector<std::size_t> chosen(ncomp, kUnsetFace);
  std::vector<std::vector<VertexId>> stored(ncomp);

  for (const auto& walk : outer_walks) {
    if (walk.empty()) throw MalformedGraph("empty outer walk");
    for (VertexId v : walk) {
      if (!g.contains(v)) throw MalformedGraph("outer walk names an unknown vertex");
    }
    std::size_t face = kUnsetFace;
    std::vector<VertexId> as_stored;
    if (walk.size() == 1) {
      if (g.degree(walk[0]) != 0) throw MalformedGraph("one-vertex outer walk at a non-isolated vertex");
      face = g.isolated_face_[walk[0]];
      as_stored = walk;
    } else {
      if (!g.adjacent(walk[0], walk[1])) throw MalformedGraph("outer walk steps along a non-edge");
      const std::size_t fwd = g.face_of({walk[0], walk[1]});
      if (cyclic_equal(g.faces_[fwd].walk, walk)) {
        face = fwd;
        as_stored = walk;
      } else {
        std::vector<VertexId> rev{walk[0]};
        rev.insert(rev.end(), walk.rbegin(), walk.rend() - 1);
        if (g.adjacent(rev[0], rev[1])) {
          const std::size_t bwd = g.face_of({rev[0], rev[1]});
          if (cyclic_equal(g.faces_[bwd].walk, rev)) {
            face = bwd;
            as_stored = rev;
          }
        }
      }
      if (face == kUnsetFace) throw MalformedGraph("outer walk is not a traced face walk");
    }
    const VertexId c = comp[walk[0]];
    if (chosen[c] != kUnsetFace) throw MalformedGraph("two outer walks given for one component");
    chosen[c] = face;
    stored[c] = std::move(as_stored);
  }
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (chosen[c] == kUnsetFace) throw MalformedGraph("component without an outer walk");
  }
  g.finalize_outer(chosen);
  g.outer_walks_ = std::move(stored);
  return g;
}

PlaneGraph PlaneGraph::from_outer_darts(LabelTable labels, std::vector<VertexId> vertices,
                                        Rotation rotation, std::span<const Dart> outer_darts) {
  PlaneGraph g = build(std::move(labels), std::move(vertices), std::move(rotation));
  std::size_t ncomp = 0;
  const auto comp = component_ids(g, &ncomp);
  std::vector<std::size_t> chosen(ncomp, kUnsetFace);
  for (const Dart& d : outer_darts) {
    if (!g.contains(d.from) || !g.adjacent(d.from, d.to)) throw MalformedGraph("outer dart is not an edge");
    const std::size_t f = g.face_of(d);
    auto& slot = chosen[comp[d.from]];
    if (slot != kUnsetFace && slot != f) throw MalformedGraph("outer darts lie on different faces");
    slot = f;
  }
  for (std::size_t f = 0; f < g.faces_.size(); ++f) {
    const VertexId c = comp[g.faces_[f].walk.front()];
    bool designated = false;
    for (const Dart& d : outer_darts) designated = designated || comp[d.from] == c;
    if (designated) continue;
    if (chosen[c] == kUnsetFace || g.faces_[f].walk.size() > g.faces_[chosen[c]].walk.size()) chosen[c] = f;
  }
  g.finalize_outer(chosen);
  for (auto& w : g.outer_walks_) w = canonical_start(w);
  return g;
}

PlaneGraph PlaneGraph::from_names(const std::vector<std::string>& names,
                                  const std::vector<std::vector<std::string>>& rotation,
                                  const std::vector<std::string>& outer_face) {
  std::unordered_map<std::string, VertexId> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<VertexId>(i)).second) {
      throw MalformedGraph("duplicate vertex identifier " + names[i]);
    }
  }
  if (rotation.size() != names.size()) throw MalformedGraph("rotation count differs from vertex count");
  auto lookup = [&](const std::string& n) {
    const auto it = index.find(n);
    if (it == index.end()) throw MalformedGraph("unknown vertex " + n);
    return it->second;
  };
  Rotation rot(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (const auto& n : rotation[i]) rot[i].push_back(lookup(n));
  }
  std::vector<VertexId> verts(names.size());
  std::iota(verts.begin(), verts.end(), VertexId{0});
  auto labels = std::make_shared<const std::vector<std::string>>(names);

  // Split the concatenated outer face into per-component runs.
  PlaneGraph probe = build(labels, verts, rot);
  std::size_t ncomp = 0;
  const auto comp = component_ids(probe, &ncomp);
  std::vector<std::vector<VertexId>> walks;
  for (const auto& n : outer_face) {
    const VertexId v = lookup(n);
    if (walks.empty() || comp[walks.back().front()] != comp[v]) walks.push_back({});
    walks.back().push_back(v);
  }
  return from_outer_walks(std::move(labels), std::move(verts), std::move(rot), walks);
}

std::optional<VertexId> PlaneGraph::find(std::string_view name) const {
  for (VertexId v = 0; v < labels_->size(); ++v) {
    if ((*labels_)[v] == name && contains(v)) return v;
  }
  return std::nullopt;
}

VertexId PlaneGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::out_of_range("no vertex named " + std::string(name));
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = rotation_[u].size() <= rotation_[v].size() ? rotation_[u] : rotation_[v];
  const VertexId other = &a == &rotation_[u] ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

std::size_t PlaneGraph::index_in_rotation(VertexId v, VertexId u) const {
  const auto& rot = rotation_[v];
  const auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end()) throw std::invalid_argument("not an edge: " + name(v) + "-" + name(u));
  return static_cast<std::size_t>(it - rot.begin());
}

VertexId PlaneGraph::successor(VertexId v, VertexId u) const {
  const std::size_t i = index_in_rotation(v, u);
  return rotation_[v][(i + 1) % rotation_[v].size()];
}

std::size_t PlaneGraph::face_of(Dart d) const {
  return darts_.face[d.from][index_in_rotation(d.from, d.to)];
}

std::vector<VertexId> PlaneGraph::outer_face() const {
  std::vector<VertexId> out;
  for (const auto& w : outer_walks_) out.insert(out.end(), w.begin(), w.end());
  return out;
}

bool PlaneGraph::is_boundary_edge(VertexId u, VertexId v) const {
  if (!adjacent(u, v)) return false;
  return faces_[face_of({u, v})].is_outer || faces_[face_of({v, u})].is_outer;
}

std::vector<VertexId> PlaneGraph::boundary_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  if (!contains(v)) return out;
  for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
    const VertexId u = rotation_[v][i];
    const bool outer = faces_[darts_.face[v][i]].is_outer ||
                       faces_[darts_.face[u][darts_.reverse[v][i]]].is_outer;
    if (outer) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlaneGraph PlaneGraph::induced_subgraph(std::span<const VertexId> keep_in) const {
  std::vector<VertexId> keep(keep_in.begin(), keep_in.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<char> kept(universe_size(), 0);
  for (VertexId v : keep) {
    if (!contains(v)) throw std::invalid_argument("induced_subgraph: vertex not in graph");
    kept[v] = 1;
  }

  Rotation rot(universe_size());
  for (VertexId v : keep) {
    for (VertexId u : rotation_[v]) {
      if (kept[u]) rot[v].push_back(u);
    }
  }

  // Old faces that become one region once the deleted vertices are gone.
  detail::UnionFind merged(faces_.size() + 1);
  const auto outer_class = static_cast<std::uint32_t>(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].is_outer) merged.unite(static_cast<std::uint32_t>(f), outer_class);
  }
  for (VertexId d : vertices_) {
    if (kept[d] || rotation_[d].empty()) continue;
    const std::uint32_t first = darts_.face[d][0];
    for (std::uint32_t f : darts_.face[d]) merged.unite(first, f);
  }

  PlaneGraph g = build(labels_, keep, std::move(rot));
  std::size_t ncomp = 0;
  const auto comp = component_ids(g, &ncomp);
  std::vector<std::size_t> chosen(ncomp, kUnsetFace);
  const std::uint32_t outer_root = merged.find(outer_class);
  for (std::size_t f = 0; f < g.faces_.size(); ++f) {
    const auto& walk = g.faces_[f].walk;
    std::uint32_t old_face;
    if (walk.size() == 1) {
      const VertexId v = walk[0];
      old_face = rotation_[v].empty() ? static_cast<std::uint32_t>(isolated_face_[v]) : darts_.face[v][0];
    } else {
      old_face = static_cast<std::uint32_t>(face_of({walk[0], walk[1]}));
    }
    auto& slot = chosen[comp[walk[0]]];
    if (merged.find(old_face) == outer_root && slot == kUnsetFace) slot = f;
  }
  for (std::size_t f = 0; f < g.faces_.size(); ++f) {
    // Component not touching the old outer region; fall back to its longest walk.
    auto& slot = chosen[comp[g.faces_[f].walk[0]]];
    if (slot == kUnsetFace) slot = f;
  }
  g.finalize_outer(chosen);
  for (auto& w : g.outer_walks_) w = canonical_start(w);
  return g;
}

PlaneGraph PlaneGraph::without(std::span<const VertexId> drop) const {
  std::vector<char> gone(universe_size(), 0);
  for (VertexId v : drop) {
    if (v < gone.size()) gone[v] = 1;
  }
  std::vector<VertexId> keep;
  for (VertexId v : vertices_) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(keep);
}

bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.outer_walks_ != b.outer_walks_) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const VertexId v = a.vertices_[i];
    if (v != b.vertices_[i] || a.name(v) != b.name(v)) return false;
    if (a.rotation_[v] != b.rotation_[v]) return false;
  }
  return true;
}

std::vector<FaceWalk> trace_faces(const PlaneGraph& g) { return g.faces(); }

std::optional<std::array<VertexId, 3>> find_triangle(const PlaneGraph& g) {
  std::vector<char> mark(g.universe_size(), 0);
  for (VertexId u : g.vertices()) {
    for (VertexId w : g.rotation(u)) mark[w] = 1;
    for (VertexId v : g.rotation(u)) {
      if (v <= u) continue;
      for (VertexId w : g.rotation(v)) {
        if (w > v && mark[w]) return std::array<VertexId, 3>{u, v, w};
      }
    }
    for (VertexId w : g.rotation(u)) mark[w] = 0;
  }
  return std::nullopt;
}

bool is_triangle_free(const PlaneGraph& g) { return !find_triangle(g).has_value(); }

OuterBoundary outer_cycle(const PlaneGraph& g) {
  OuterBoundary out;
  out.walk = g.outer_face();
  if (g.component_count() != 1 || out.walk.size() < 3) return out;
  auto sorted = out.walk;
  std::sort(sorted.begin(), sorted.end());
  out.simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!out.simple) return out;
  out.induced = true;
  const std::size_t m = out.walk.size();
  for (std::size_t i = 0; i < m && out.induced; ++i) {
    for (std::size_t j = i + 2; j < m && out.induced; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (g.adjacent(out.walk[i], out.walk[j])) out.induced = false;
    }
  }
  return out;
}

std::vector<VertexId> internal_vertices(const PlaneGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (!g.on_outer_face(v)) out.push_back(v);
  }
  return out;
}

PlaneGraph induced_subgraph(const PlaneGraph& g, std::span<const VertexId> keep) {
  return g.induced_subgraph(keep);
}

CycleSides sides_of_cycle(const PlaneGraph& g, std::span<const VertexId> cycle) {
  const std::size_t m = cycle.size();
  if (m < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<char> on_cycle(g.universe_size(), 0);
  for (VertexId v : cycle) {
    if (!g.contains(v)) throw std::invalid_argument("cycle vertex not in graph");
    if (on_cycle[v]) throw std::invalid_argument("cycle repeats a vertex");
    on_cycle[v] = 1;
  }
  // side: 0 unknown, 1 left, 2 right
  std::vector<char> side(g.universe_size(), 0);
  std::deque<VertexId> queue;
  auto seed = [&](VertexId u, char s) {
    if (on_cycle[u]) return;
    if (side[u] != 0 && side[u] != s) throw MalformedGraph("cycle sides overlap");
    if (side[u] == 0) {
      side[u] = s;
      queue.push_back(u);
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId c = cycle[i];
    const VertexId prev = cycle[(i + m - 1) % m];
    const VertexId next = cycle[(i + 1) % m];
    if (!g.adjacent(c, next)) throw std::invalid_argument("cycle steps along a non-edge");
    const auto rot = g.rotation(c);
    const std::size_t d = rot.size();
    const auto ip = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), prev) - rot.begin());
    const auto in = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), next) - rot.begin());
    for (std::size_t k = (ip + 1) % d; k != in; k = (k + 1) % d) seed(rot[k], 1);
    for (std::size_t k = (in + 1) % d; k != ip; k = (k + 1) % d) seed(rot[k], 2);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.rotation(v)) seed(w, side[v]);
  }
  CycleSides out;
  for (VertexId v : g.vertices()) {
    if (side[v] == 1) out.left.push_back(v);
    if (side[v] == 2) out.right.push_back(v);
  }
  return out;
}

std::vector<VertexId> cycle_interior(const PlaneGraph& g, std::span<const VertexId> cycle) {
  CycleSides sides = sides_of_cycle(g, cycle);
  auto touches_outer = [&](const std::vector<VertexId>& vs) {
    return std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return g.on_outer_face(v); });
  };
  if (touches_outer(sides.left)) return sides.right;
  if (touches_outer(sides.right)) return sides.left;
  const std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % m];
    if (g.faces()[g.face_of({a, b})].is_outer) return sides.right;
    if (g.faces()[g.face_of({b, a})].is_outer) return sides.left;
  }
  throw std::invalid_argument("cannot tell which side of the cycle holds the outer face");
}

PlaneGraph disk_subgraph(const PlaneGraph& g, std::span<const VertexId> cycle) {
  std::vector<VertexId> keep = cycle_interior(g, cycle);
  keep.insert(keep.end(), cycle.begin(), cycle.end());
  return g.induced_subgraph(keep);
}

}  // namespace arborsplit
