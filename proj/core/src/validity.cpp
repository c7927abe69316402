#include "arborsplit/validity.hpp"

#include <algorithm>
#include <deque>

#include "union_find.hpp"

namespace arborsplit {

namespace {

CheckReport pass(Clause clause) { return CheckReport{clause, true, {}, {}}; }

CheckReport fail(Clause clause, std::string message, std::vector<VertexId> witness) {
  return CheckReport{clause, false, std::move(message), std::move(witness)};
}

std::vector<VertexId> class_neighbors(const PlaneGraph& g, const Coloring& c, VertexId v, Color col) {
  std::vector<VertexId> out;
  for (VertexId w : g.rotation(v)) {
    if (c[w] == col) out.push_back(w);
  }
  return out;
}

// First monochromatic cycle of color `col`, closed (first vertex not repeated).
std::optional<std::vector<VertexId>> find_class_cycle(const PlaneGraph& g, const Coloring& c, Color col) {
  detail::UnionFind uf(g.universe_size());
  std::vector<std::vector<VertexId>> forest(g.universe_size());
  for (VertexId u : g.vertices()) {
    if (c[u] != col) continue;
    for (VertexId v : g.rotation(u)) {
      if (v <= u || c[v] != col) continue;
      if (uf.unite(u, v)) {
        forest[u].push_back(v);
        forest[v].push_back(u);
        continue;
      }
      // u and v already joined in the forest: recover that path.
      std::vector<VertexId> parent(g.universe_size(), kNoVertex);
      std::deque<VertexId> queue{u};
      parent[u] = u;
      while (!queue.empty() && parent[v] == kNoVertex) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : forest[x]) {
          if (parent[y] == kNoVertex) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      std::vector<VertexId> cycle;
      for (VertexId x = v; x != u; x = parent[x]) cycle.push_back(x);
      cycle.push_back(u);
      return cycle;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::forced: return "forced";
    case Clause::g1: return "G1";
    case Clause::g2: return "G2";
    case Clause::g3: return "G3";
    case Clause::g4: return "G4";
  }
  return "?";
}

bool ValidityReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.pass; });
}

const CheckReport* ValidityReport::first_failure() const {
  for (const auto& r : checks) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

CheckReport check_forced(const Scene& s, const Coloring& c) {
  const auto& g = s.graph();
  for (VertexId v : g.vertices()) {
    if (c[v] != Color::one && c[v] != Color::two) return fail(Clause::forced, "coloring is not total", {v});
  }
  for (std::size_t i = 0; i < s.precolored().size(); ++i) {
    const VertexId v = s.precolored()[i];
    if (c[v] != s.precolors()[i]) return fail(Clause::forced, "coloring disagrees with delta", {v});
  }
  for (VertexId v : s.forced_two()) {
    if (c[v] != Color::two) return fail(Clause::forced, "Q vertex not colored 2", {v});
  }
  return pass(Clause::forced);
}

CheckReport check_g1(const Scene& s, const Coloring& c) {
  const auto& g = s.graph();
  for (VertexId v : g.vertices()) {
    if (c[v] != Color::one) continue;
    auto nb = class_neighbors(g, c, v, Color::one);
    if (nb.size() > 3) {
      nb.insert(nb.begin(), v);
      return fail(Clause::g1, "class-1 vertex of degree above three", std::move(nb));
    }
  }
  for (Color col : {Color::one, Color::two}) {
    if (auto cycle = find_class_cycle(g, c, col)) {
      return fail(Clause::g1, "class-" + std::to_string(to_int(col)) + " cycle", std::move(*cycle));
    }
  }
  return pass(Clause::g1);
}

CheckReport check_g2(const Scene& s, const Coloring& c) {
  const auto& g = s.graph();
  for (std::size_t i = 0; i < s.precolored().size(); ++i) {
    if (s.precolors()[i] != Color::one) continue;
    const VertexId v = s.precolored()[i];
    for (VertexId u : g.rotation(v)) {
      if (!s.in_p(u) && c[u] == Color::one) {
        return fail(Clause::g2, "neighbour of a 1-precolored vertex colored 1", {v, u});
      }
    }
  }
  return pass(Clause::g2);
}

CheckReport check_g3(const Scene& s, const Coloring& c) {
  const auto [ones, v] = s.precolored_ones();
  if (ones != 1) return pass(Clause::g3);
  const auto& g = s.graph();
  std::vector<VertexId> qn;
  for (VertexId u : g.rotation(v)) {
    if (s.in_q(u)) qn.push_back(u);
  }
  std::sort(qn.begin(), qn.end());
  const auto kn = g.boundary_neighbors(v);
  for (VertexId u : qn) {
    for (VertexId w : kn) {
      if (w == u) continue;
      if (auto path = mono_path(g, c, u, w)) {
        return fail(Clause::g3, "monochromatic path between Q-neighbour and boundary neighbour",
                    std::move(*path));
      }
    }
  }
  return pass(Clause::g3);
}

CheckReport check_g4(const Scene& s, const Coloring& c) {
  const auto& g = s.graph();
  for (VertexId v : g.vertices()) {
    if (!g.on_outer_face(v) || s.in_p(v) || c[v] != Color::one) continue;
    auto nb = class_neighbors(g, c, v, Color::one);
    if (nb.size() > 2) {
      nb.insert(nb.begin(), v);
      return fail(Clause::g4, "boundary vertex with three class-1 neighbours", std::move(nb));
    }
  }
  return pass(Clause::g4);
}

ValidityReport check_valid(const Scene& s, const Coloring& c) {
  ValidityReport r;
  r.checks.push_back(check_forced(s, c));
  if (!r.checks.back().pass && r.checks.back().message == "coloring is not total") return r;
  r.checks.push_back(check_g1(s, c));
  r.checks.push_back(check_g2(s, c));
  r.checks.push_back(check_g3(s, c));
  r.checks.push_back(check_g4(s, c));
  return r;
}

std::optional<std::vector<VertexId>> mono_path(const PlaneGraph& g, const Coloring& c, VertexId u,
                                               VertexId w) {
  if (!g.contains(u) || !g.contains(w)) return std::nullopt;
  const Color col = c[u];
  if (col == Color::unset || c[w] != col) return std::nullopt;
  std::vector<VertexId> parent(g.universe_size(), kNoVertex);
  std::deque<VertexId> queue{u};
  parent[u] = u;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (VertexId y : g.rotation(x)) {
      if (c[y] == col && parent[y] == kNoVertex) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[w] == kNoVertex) return std::nullopt;
  std::vector<VertexId> path;
  for (VertexId x = w; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

bool mono_path_exists(const Scene& s, const Coloring& c, VertexId u, VertexId w) {
  if (u == w) throw std::invalid_argument("mono_path_exists: endpoints coincide");
  return mono_path(s.graph(), c, u, w).has_value();
}

bool is_forest_partition(const PlaneGraph& g, const Coloring& c) {
  const auto s = empty_scene(g);
  return check_forced(s, c).pass && check_g1(s, c).pass;
}

Validator::Validator(const Scene& s) {
  const auto& g = s.graph();
  vertices_.assign(g.vertices().begin(), g.vertices().end());
  const std::size_t n = vertices_.size();
  std::vector<std::uint32_t> local(g.universe_size(), 0);
  for (std::uint32_t i = 0; i < n; ++i) local[vertices_[i]] = i;

  forced_.assign(n, Color::unset);
  for (std::size_t i = 0; i < s.precolored().size(); ++i) forced_[local[s.precolored()[i]]] = s.precolors()[i];
  for (VertexId v : s.forced_two()) forced_[local[v]] = Color::two;

  adj_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (VertexId w : g.rotation(vertices_[i])) {
      adj_[i].push_back(local[w]);
      if (vertices_[i] < w) edges_.emplace_back(i, local[w]);
    }
  }
  for (std::size_t i = 0; i < s.precolored().size(); ++i) {
    if (s.precolors()[i] != Color::one) continue;
    for (VertexId u : g.rotation(s.precolored()[i])) {
      if (!s.in_p(u)) not_one_.push_back(local[u]);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (g.on_outer_face(vertices_[i]) && !s.in_p(vertices_[i])) degree_capped_.push_back(i);
  }
  const auto [ones, v] = s.precolored_ones();
  if (ones == 1) {
    const auto kn = g.boundary_neighbors(v);
    for (VertexId u : g.rotation(v)) {
      if (!s.in_q(u)) continue;
      for (VertexId w : kn) {
        if (w != u) separated_.emplace_back(local[u], local[w]);
      }
    }
  }
  parent_.resize(n);
  degree_.resize(n);
}

bool Validator::is_valid(std::span<const Color> col) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (col[i] == Color::unset) return false;
    if (forced_[i] != Color::unset && forced_[i] != col[i]) return false;
  }
  for (std::uint32_t u : not_one_) {
    if (col[u] == Color::one) return false;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    parent_[i] = i;
    degree_[i] = 0;
  }
  auto find = [this](std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  };
  for (const auto& [a, b] : edges_) {
    if (col[a] != col[b]) continue;
    if (col[a] == Color::one && (++degree_[a] > 3 || ++degree_[b] > 3)) return false;
    const std::uint32_t ra = find(a);
    const std::uint32_t rb = find(b);
    if (ra == rb) return false;
    parent_[ra] = rb;
  }
  for (std::uint32_t v : degree_capped_) {
    if (col[v] == Color::one && degree_[v] > 2) return false;
  }
  for (const auto& [u, w] : separated_) {
    if (col[u] == col[w] && find(u) == find(w)) return false;
  }
  return true;
}

}  // namespace arborsplit
