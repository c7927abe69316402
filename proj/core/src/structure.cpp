#include "arborsplit/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace arborsplit {

namespace {

std::vector<VertexId> bfs_component(const PlaneGraph& g, VertexId start, const std::vector<char>& blocked,
                                    std::vector<char>& seen) {
  std::vector<VertexId> out{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexId w : g.rotation(out[i])) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> sorted_union(std::vector<VertexId> a, std::span<const VertexId> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<VertexId> complement_with(const PlaneGraph& g, const std::vector<char>& drop) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (!drop[v]) out.push_back(v);
  }
  return out;
}

std::optional<SplitSpec> cut_at_vertex(const PlaneGraph& g, std::span<const VertexId> p, VertexId w) {
  std::vector<char> blocked(g.universe_size(), 0);
  std::vector<char> seen(g.universe_size(), 0);
  blocked[w] = 1;
  std::vector<std::vector<VertexId>> parts;
  for (VertexId v : g.vertices()) {
    if (v != w && !seen[v]) parts.push_back(bfs_component(g, v, blocked, seen));
  }
  if (parts.size() < 2) return std::nullopt;
  for (const auto& part : parts) {
    const bool meets_p = std::any_of(p.begin(), p.end(), [&](VertexId v) {
      return std::binary_search(part.begin(), part.end(), v);
    });
    if (meets_p) continue;
    // w must stay on the outer face of G2: either it is already there, or
    // the deleted side carries some outer vertex.
    bool ok = g.on_outer_face(w);
    if (!ok) {
      for (VertexId v : g.vertices()) {
        if (v != w && g.on_outer_face(v) && !std::binary_search(part.begin(), part.end(), v)) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;
    SplitSpec split;
    std::vector<char> in_part(g.universe_size(), 0);
    for (VertexId v : part) in_part[v] = 1;
    split.g1 = complement_with(g, in_part);
    split.g2 = sorted_union(part, std::span<const VertexId>(&w, 1));
    split.h = {w};
    split.q = w;
    return split;
  }
  return std::nullopt;
}

std::optional<SplitSpec> cut_at_chord(const PlaneGraph& g, std::span<const VertexId> p) {
  const auto& walks = g.outer_walks();
  if (walks.size() != 1) return std::nullopt;
  const auto& k = walks.front();
  const std::size_t m = k.size();
  if (m < 4) return std::nullopt;
  std::vector<std::size_t> pos(g.universe_size(), m);
  for (std::size_t i = 0; i < m; ++i) pos[k[i]] = i;
  for (VertexId u : g.vertices()) {
    if (pos[u] == m) continue;
    std::vector<VertexId> nbrs(g.rotation(u).begin(), g.rotation(u).end());
    std::sort(nbrs.begin(), nbrs.end());
    for (VertexId v : nbrs) {
      if (v < u || pos[v] == m) continue;
      const std::size_t d = (pos[v] + m - pos[u]) % m;
      if (d == 1 || d == m - 1) continue;
      // Cycle u -> forward arc -> v, closed by the chord.
      std::vector<VertexId> cycle;
      for (std::size_t i = pos[u];; i = (i + 1) % m) {
        cycle.push_back(k[i]);
        if (k[i] == v) break;
      }
      const VertexId other_arc = k[(pos[v] + 1) % m];
      auto sides = sides_of_cycle(g, cycle);
      const bool left_is_out = std::binary_search(sides.left.begin(), sides.left.end(), other_arc);
      const auto& inside = left_is_out ? sides.right : sides.left;
      std::vector<char> in_a(g.universe_size(), 0);
      for (VertexId c : cycle) in_a[c] = 1;
      for (VertexId c : inside) in_a[c] = 1;
      std::vector<VertexId> side_a;
      std::vector<VertexId> side_b;
      for (VertexId x : g.vertices()) {
        if (in_a[x]) side_a.push_back(x);
        if (!in_a[x] || x == u || x == v) side_b.push_back(x);
      }
      const bool p_in_a = std::all_of(p.begin(), p.end(), [&](VertexId x) { return in_a[x] != 0; });
      SplitSpec split;
      split.g1 = p_in_a ? side_a : side_b;
      split.g2 = p_in_a ? side_b : side_a;
      split.h = {u, v};
      split.q = u;
      return split;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<VertexId>> components(const PlaneGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> blocked(g.universe_size(), 0);
  std::vector<char> seen(g.universe_size(), 0);
  for (VertexId v : g.vertices()) {
    if (!seen[v]) out.push_back(bfs_component(g, v, blocked, seen));
  }
  return out;
}

std::vector<VertexId> articulation_points(const PlaneGraph& g) {
  const std::size_t n = g.universe_size();
  std::vector<std::uint32_t> disc(n, 0);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> cut(n, 0);
  std::uint32_t timer = 0;
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
    std::size_t children;
  };
  for (VertexId root : g.vertices()) {
    if (disc[root]) continue;
    std::vector<Frame> stack{{root, kNoVertex, 0, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto rot = g.rotation(f.v);
      if (f.next < rot.size()) {
        const VertexId w = rot[f.next++];
        if (w == f.parent) continue;
        if (disc[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = ++timer;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) cut[done.v] = 1;
        break;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (parent.parent != kNoVertex && low[done.v] >= disc[parent.v]) cut[parent.v] = 1;
    }
  }
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (cut[v]) out.push_back(v);
  }
  return out;
}

std::optional<SplitSpec> find_cut(const PlaneGraph& g, std::span<const VertexId> p) {
  for (VertexId w : articulation_points(g)) {
    if (auto split = cut_at_vertex(g, p, w)) return split;
  }
  return cut_at_chord(g, p);
}

std::optional<FourCycle> find_separating_4cycle(const PlaneGraph& g) {
  std::set<std::vector<VertexId>> faces;
  for (const auto& f : g.faces()) {
    if (f.walk.size() != 4) continue;
    auto vs = f.walk;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) == vs.end()) faces.insert(vs);
  }
  for (VertexId a : g.vertices()) {
    std::vector<VertexId> na;
    for (VertexId w : g.rotation(a)) {
      if (w > a) na.push_back(w);
    }
    std::sort(na.begin(), na.end());
    for (std::size_t i = 0; i < na.size(); ++i) {
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        const VertexId b = na[i];
        const VertexId d = na[j];
        std::vector<VertexId> common;
        for (VertexId c : g.rotation(b)) {
          if (c > a && c != d && g.adjacent(c, d)) common.push_back(c);
        }
        std::sort(common.begin(), common.end());
        for (VertexId c : common) {
          std::vector<VertexId> vs{a, b, c, d};
          std::sort(vs.begin(), vs.end());
          if (faces.count(vs)) continue;
          std::vector<VertexId> cycle{a, b, c, d};
          auto interior = cycle_interior(g, cycle);
          if (interior.empty()) continue;
          return FourCycle{std::move(cycle), std::move(interior)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<FourCycle> outer_four_cycle(const PlaneGraph& g) {
  const auto k = outer_cycle(g);
  if (!k.simple || k.walk.size() != 4) return std::nullopt;
  auto interior = internal_vertices(g);
  if (interior.empty()) return std::nullopt;
  auto cycle = k.walk;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return FourCycle{std::move(cycle), std::move(interior)};
}

std::optional<ExtensionConfig> find_extension_config(const PlaneGraph& g, std::span<const VertexId> q) {
  if (q.empty() || g.outer_walks().size() != 1) return std::nullopt;
  const auto& k = g.outer_walks().front();
  const std::size_t m = k.size();
  std::vector<std::size_t> pos(g.universe_size(), m);
  for (std::size_t i = 0; i < m; ++i) pos[k[i]] = i;
  auto in_q = [&](VertexId v) { return std::find(q.begin(), q.end(), v) != q.end(); };
  for (VertexId x : g.vertices()) {
    if (g.on_outer_face(x)) continue;
    std::vector<VertexId> kn;
    for (VertexId w : g.rotation(x)) {
      if (pos[w] != m) kn.push_back(w);
    }
    std::sort(kn.begin(), kn.end());
    for (VertexId s : kn) {
      if (!in_q(s)) continue;
      VertexId best = kNoVertex;
      std::size_t best_dist = 0;
      for (VertexId t : kn) {
        if (t == s || g.adjacent(s, t)) continue;
        const std::size_t d = (pos[t] + m - pos[s]) % m;
        const std::size_t dist = std::min(d, m - d);
        if (best == kNoVertex || dist > best_dist) {
          best = t;
          best_dist = dist;
        }
      }
      if (best != kNoVertex) return ExtensionConfig{x, s, best};
    }
  }
  return std::nullopt;
}

SplitSpec split_through(const PlaneGraph& g, std::span<const VertexId> p, const ExtensionConfig& cfg) {
  const auto& k = g.outer_walks().front();
  const std::size_t m = k.size();
  const auto i = static_cast<std::size_t>(std::find(k.begin(), k.end(), cfg.s) - k.begin());
  const auto j = static_cast<std::size_t>(std::find(k.begin(), k.end(), cfg.t) - k.begin());
  if (i == m || j == m) throw std::invalid_argument("split_through: s and t must lie on the outer cycle");

  // Cycle s, x, t and back to s along the forward arc s..t.
  std::vector<VertexId> cycle{cfg.s, cfg.x, cfg.t};
  for (std::size_t a = (j + m - 1) % m; a != i; a = (a + m - 1) % m) cycle.push_back(k[a]);
  const auto sides = sides_of_cycle(g, cycle);
  const VertexId beyond = k[(j + 1) % m];
  const auto& inside = std::binary_search(sides.left.begin(), sides.left.end(), beyond) ? sides.right : sides.left;
  std::vector<char> in_a(g.universe_size(), 0);
  for (VertexId v : cycle) in_a[v] = 1;
  for (VertexId v : inside) in_a[v] = 1;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  for (VertexId v : g.vertices()) {
    if (in_a[v]) side_a.push_back(v);
    if (!in_a[v] || v == cfg.s || v == cfg.x || v == cfg.t) side_b.push_back(v);
  }
  const bool p_in_a = std::all_of(p.begin(), p.end(), [&](VertexId v) { return in_a[v] != 0; });
  SplitSpec split;
  split.g1 = p_in_a ? side_a : side_b;
  split.g2 = p_in_a ? side_b : side_a;
  split.h = {cfg.s, cfg.x, cfg.t};
  split.q = cfg.s;
  return split;
}

std::string_view to_string(MainCase c) {
  switch (c) {
    case MainCase::a: return "A";
    case MainCase::b: return "B";
    case MainCase::c: return "C";
    case MainCase::d: return "D";
  }
  return "?";
}

MainQuad choose_main_quad(const Scene& s) {
  const auto& g = s.graph();
  const auto boundary = outer_cycle(g);
  if (!boundary.induced || boundary.walk.size() < 4) {
    throw std::invalid_argument("choose_main_quad needs an induced outer cycle of length at least four");
  }
  const auto& k = boundary.walk;
  const std::size_t m = k.size();
  std::vector<std::size_t> pos(g.universe_size(), m);
  for (std::size_t i = 0; i < m; ++i) pos[k[i]] = i;
  auto sorted_k = k;
  std::sort(sorted_k.begin(), sorted_k.end());

  auto next_from = [&](VertexId a, VertexId b) {  // neighbour of b on K other than a
    const std::size_t i = pos[b];
    const VertexId fwd = k[(i + 1) % m];
    return fwd == a ? k[(i + m - 1) % m] : fwd;
  };
  auto q = [&](VertexId v) { return s.in_q(v); };
  auto p = [&](VertexId v) { return s.in_p(v); };
  auto touches_one = [&](VertexId x) {
    for (VertexId w : g.rotation(x)) {
      if (s.precolor(w) == Color::one) return true;
    }
    return false;
  };

  for (VertexId x : sorted_k) {
    if (p(x) || q(x)) continue;
    const VertexId n1 = k[(pos[x] + 1) % m];
    const VertexId n2 = k[(pos[x] + m - 1) % m];
    std::vector<MainQuad> orient;
    for (auto [sv, zv] : {std::pair{std::min(n1, n2), std::max(n1, n2)}, std::pair{std::max(n1, n2), std::min(n1, n2)}}) {
      orient.push_back(MainQuad{MainCase::a, next_from(x, sv), sv, x, zv, next_from(x, zv)});
    }
    for (MainCase label : {MainCase::a, MainCase::b, MainCase::c, MainCase::d}) {
      for (MainQuad mq : orient) {
        bool hit = false;
        switch (label) {
          case MainCase::a: hit = q(mq.s) && q(mq.z); break;
          case MainCase::b: hit = q(mq.s) && !p(mq.z) && !q(mq.z) && q(mq.t); break;
          case MainCase::c: hit = q(mq.s) && !q(mq.z) && !q(mq.t) && !touches_one(x); break;
          case MainCase::d: hit = !q(mq.r) && !q(mq.s) && !q(mq.z) && !q(mq.t) && !touches_one(x); break;
        }
        if (hit) {
          mq.label = label;
          return mq;
        }
      }
    }
  }
  throw NoCaseApplies("no main-case configuration on the outer cycle");
}

}  // namespace arborsplit
