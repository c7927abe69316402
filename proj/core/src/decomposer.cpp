#include "arborsplit/decomposer.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

#include "arborsplit/validity.hpp"

namespace arborsplit {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<VertexId> intersect(std::span<const VertexId> a, const std::vector<VertexId>& sorted_b) {
  std::vector<VertexId> out;
  for (VertexId v : a) {
    if (std::binary_search(sorted_b.begin(), sorted_b.end(), v)) out.push_back(v);
  }
  return out;
}

std::string names(const PlaneGraph& g, std::span<const VertexId> vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ",";
    out += g.name(v);
  }
  return "[" + out + "]";
}

class Decomposer {
 public:
  explicit Decomposer(const DecomposeOptions& opt) : opt_(opt) {}

  Coloring color(const Scene& s, TraceNode& node) {
    const auto& g = s.graph();
    node.vertices.assign(g.vertices().begin(), g.vertices().end());
    node.p.assign(s.precolored().begin(), s.precolored().end());
    node.delta.assign(s.precolors().begin(), s.precolors().end());
    node.q.assign(s.forced_two().begin(), s.forced_two().end());

    Coloring c;
    if (g.vertex_count() <= std::max<std::size_t>(opt_.base_n, 2)) {
      c = settle(s, node);
    } else if (auto comps = components(g); comps.size() > 1) {
      c = reduce_components(s, comps, node);
    } else if (auto split = find_cut(g, s.precolored())) {
      c = reduce_cut(s, *split, node);
    } else if (auto fc = find_separating_4cycle(g)) {
      c = reduce_4cycle(s, *fc, node);
    } else if (auto ext = find_extension_config(g, s.forced_two())) {
      c = reduce_extend(s, *ext, node);
    } else {
      std::optional<MainQuad> mq;
      try {
        mq = choose_main_quad(s);
      } catch (const NoCaseApplies& e) {
        // A 4-vertex outer cycle can leave no admissible x; the outer cycle
        // then takes the place of a separating 4-cycle. Bare C4 and C5 with
        // both P vertices precolored 1 are settled by the oracle.
        if (auto outer = outer_four_cycle(g)) {
          c = reduce_4cycle(s, *outer, node);
        } else if (g.vertex_count() <= kTinyScene) {
          c = settle(s, node);
        } else {
          fail(std::string(e.what()) + " on " + names(g, node.vertices));
        }
      }
      if (mq) c = reduce_main(s, *mq, node);
    }

    if (opt_.defensive_checks) {
      const auto report = check_valid(s, c);
      if (const auto* bad = report.first_failure()) {
        fail("defensive check failed at " + std::string(to_string(node.kind)) + " node: " +
                    std::string(to_string(bad->clause)) + " " + bad->message + " " + names(g, bad->witness));
      }
    }
    node.coloring = c.restricted_to(node.vertices);
    return c;
  }

 private:
  static constexpr std::size_t kTinyScene = 5;

  Coloring settle(const Scene& s, TraceNode& node) {
    node.kind = NodeKind::base;
    auto found = brute_force(s, opt_.oracle_cap);
    if (!found) fail("oracle found no valid coloring for a base scene on " + names(s.graph(), node.vertices));
    return std::move(*found);
  }

  [[noreturn]] static void fail(const std::string& msg) { throw CertifiedFailure(msg); }

  Scene sub(const PlaneGraph& g, std::vector<VertexId> p, std::vector<Color> delta, std::vector<VertexId> q) {
    try {
      return make_scene(g, std::move(p), std::move(q), std::move(delta));
    } catch (const SceneError& e) {
      throw CertifiedFailure(std::string("derived scene rejected: ") + e.what());
    }
  }

  TraceNode& child(TraceNode& node) {
    node.children.emplace_back();
    return node.children.back();
  }

  Coloring reduce_components(const Scene& s, const std::vector<std::vector<VertexId>>& comps, TraceNode& node) {
    const auto& g = s.graph();
    node.kind = NodeKind::components;
    node.children.reserve(comps.size());
    Coloring c(g.universe_size());
    for (const auto& comp : comps) {
      std::vector<VertexId> p;
      std::vector<Color> delta;
      for (std::size_t i = 0; i < s.precolored().size(); ++i) {
        if (std::binary_search(comp.begin(), comp.end(), s.precolored()[i])) {
          p.push_back(s.precolored()[i]);
          delta.push_back(s.precolors()[i]);
        }
      }
      const Scene part = sub(g.induced_subgraph(comp), std::move(p), std::move(delta), intersect(s.forced_two(), comp));
      c.merge(color(part, child(node)));
    }
    return c;
  }

  Coloring reduce_cut(const Scene& s, const SplitSpec& split, TraceNode& node) {
    const auto& g = s.graph();
    node.kind = NodeKind::cut;
    node.label = split.h.size() == 1 ? "cut-vertex" : "chord";
    node.separator = split.h;
    node.children.reserve(2);

    const Scene s1 = sub(g.induced_subgraph(split.g1), {s.precolored().begin(), s.precolored().end()},
                         {s.precolors().begin(), s.precolors().end()}, intersect(s.forced_two(), split.g1));
    const Coloring c1 = color(s1, child(node));

    std::vector<Color> delta2;
    for (VertexId h : split.h) delta2.push_back(c1[h]);
    std::vector<VertexId> q2;
    for (VertexId v : intersect(s.forced_two(), split.g2)) {
      if (std::find(split.h.begin(), split.h.end(), v) == split.h.end()) q2.push_back(v);
    }
    const Scene s2 = sub(g.induced_subgraph(split.g2), split.h, std::move(delta2), std::move(q2));
    const Coloring c2 = color(s2, child(node));
    return glue_into(s, split, c1, c2, node);
  }

  Coloring reduce_4cycle(const Scene& s, const FourCycle& fc, TraceNode& node) {
    const auto& g = s.graph();
    node.kind = NodeKind::four_cycle;
    node.children.reserve(2);

    const Scene s1 = sub(g.without(fc.interior), {s.precolored().begin(), s.precolored().end()},
                         {s.precolors().begin(), s.precolors().end()},
                         {s.forced_two().begin(), s.forced_two().end()});
    const Coloring c1 = color(s1, child(node));

    // Name the cycle x, s, y, t (x opposite y) so that y has color 1 and
    // either s, t both have color 2 or s has 1 and t has 2.
    std::optional<std::array<VertexId, 4>> naming;
    for (int start = 0; start < 4; ++start) {
      for (int dir : {1, 3}) {
        const std::array<VertexId, 4> cand{fc.cycle[start], fc.cycle[(start + dir) % 4],
                                           fc.cycle[(start + 2 * dir) % 4], fc.cycle[(start + 3 * dir) % 4]};
        const Color cy = c1[cand[2]];
        const Color ct = c1[cand[3]];
        if (cy != Color::one || ct != Color::two) continue;
        if (!naming || cand < *naming) naming = cand;
      }
    }
    if (!naming) fail("4-cycle " + names(g, fc.cycle) + " is monochromatic under the outer coloring");
    const auto [x, sv, y, t] = *naming;

    std::vector<VertexId> ys;
    for (VertexId w : g.rotation(y)) {
      if (std::binary_search(fc.interior.begin(), fc.interior.end(), w)) ys.push_back(w);
    }
    std::vector<VertexId> keep = fc.interior;
    keep.erase(std::remove(keep.begin(), keep.end(), y), keep.end());
    keep.insert(keep.end(), {x, sv, t});

    std::vector<VertexId> p2;
    std::vector<VertexId> q2 = ys;
    if (c1[sv] == Color::two) {
      node.label = "s=t=2";
      p2 = {x};
      q2.push_back(sv);
      q2.push_back(t);
    } else {
      node.label = "s=1";
      p2 = {x, sv};
      q2.push_back(t);
    }
    std::vector<Color> delta2;
    for (VertexId v : p2) delta2.push_back(c1[v]);
    const Scene s2 = sub(g.induced_subgraph(keep), std::move(p2), std::move(delta2), sorted_unique(q2));
    Coloring c2 = color(s2, child(node));
    c2.set(y, Color::one);

    node.removed = {y};
    SplitSpec split;
    split.g1.assign(s1.graph().vertices().begin(), s1.graph().vertices().end());
    split.g2 = keep;
    split.g2.push_back(y);
    split.g2 = sorted_unique(split.g2);
    split.h = {x, sv, y, t};
    split.h_is_cycle = true;
    return glue_into(s, split, c1, c2, node);
  }

  Coloring reduce_extend(const Scene& s, const ExtensionConfig& ext, TraceNode& node) {
    const auto& g = s.graph();
    node.kind = NodeKind::extend;
    node.children.reserve(2);
    SplitSpec split = split_through(g, s.precolored(), ext);
    node.separator = split.h;

    const Scene s1 = sub(g.induced_subgraph(split.g1), {s.precolored().begin(), s.precolored().end()},
                         {s.precolors().begin(), s.precolors().end()}, intersect(s.forced_two(), split.g1));
    const Coloring c1 = color(s1, child(node));
    split.q = (c1[ext.x] == Color::two && c1[ext.t] == Color::one) ? ext.t : ext.s;
    node.label = c1[ext.x] == Color::one ? "x=1" : "x=2";

    std::vector<VertexId> q2;
    for (VertexId v : intersect(s.forced_two(), split.g2)) {
      if (v != ext.t) q2.push_back(v);
    }
    const Scene s2 = sub(g.induced_subgraph(split.g2), {ext.x, ext.t}, {c1[ext.x], c1[ext.t]}, std::move(q2));
    const Coloring c2 = color(s2, child(node));
    return glue_into(s, split, c1, c2, node);
  }

  Coloring reduce_main(const Scene& s, const MainQuad& mq, TraceNode& node) {
    const auto& g = s.graph();
    node.kind = NodeKind::main_case;
    node.label = std::string(to_string(mq.label));
    node.separator = {mq.r, mq.s, mq.x, mq.z, mq.t};

    auto internal_nbrs = [&](VertexId v) {
      std::vector<VertexId> out;
      for (VertexId w : g.rotation(v)) {
        if (!g.on_outer_face(w)) out.push_back(w);
      }
      return out;
    };
    std::vector<VertexId> removed{mq.x};
    std::vector<VertexId> q2(s.forced_two().begin(), s.forced_two().end());
    switch (mq.label) {
      case MainCase::a: {
        const auto xs = internal_nbrs(mq.x);
        q2.insert(q2.end(), xs.begin(), xs.end());
        break;
      }
      case MainCase::b: {
        removed.push_back(mq.z);
        auto zs = internal_nbrs(mq.x);
        const auto zz = internal_nbrs(mq.z);
        zs.insert(zs.end(), zz.begin(), zz.end());
        zs = sorted_unique(zs);
        auto pool = zs;
        pool.push_back(mq.s);
        pool.push_back(mq.t);
        pool = sorted_unique(pool);
        VertexId a = kNoVertex;
        for (std::size_t u = 0; u < pool.size() && a == kNoVertex; ++u) {
          for (std::size_t w = u + 1; w < pool.size(); ++w) {
            if (!g.adjacent(pool[u], pool[w])) continue;
            const bool u_in = std::binary_search(zs.begin(), zs.end(), pool[u]);
            a = u_in ? pool[u] : pool[w];
            break;
          }
        }
        if (a != kNoVertex) node.anchor = a;
        for (VertexId v : zs) {
          if (v != a) q2.push_back(v);
        }
        break;
      }
      case MainCase::c:
      case MainCase::d:
        for (VertexId w : g.rotation(mq.x)) {
          if (!s.in_q(w) && !s.in_p(w)) q2.push_back(w);
        }
        break;
    }
    node.removed = removed;
    const Scene s2 = sub(g.without(removed), {s.precolored().begin(), s.precolored().end()},
                         {s.precolors().begin(), s.precolors().end()}, sorted_unique(q2));
    Coloring c = color(s2, child(node));
    for (VertexId v : removed) c.set(v, Color::one);
    return c;
  }

  Coloring glue_into(const Scene& s, const SplitSpec& split, const Coloring& c1, const Coloring& c2, TraceNode& node) {
    try {
      GlueResult r = glue(s, split, c1, c2);
      node.guarantee = std::string(to_string(r.guarantee));
      node.anchor = split.q;
      node.separator = split.h;
      node.separator_is_cycle = split.h_is_cycle;
      return std::move(r.coloring);
    } catch (const std::invalid_argument& e) {
      throw CertifiedFailure(std::string("glue rejected: ") + e.what());
    }
  }

  DecomposeOptions opt_;
};

}  // namespace

DecomposeOptions options_from_env() {
  DecomposeOptions opt;
  if (const char* env = std::getenv("ARBORSPLIT_BASE_N"); env != nullptr && *env != '\0') {
    const std::string_view sv(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc() || ptr != sv.data() + sv.size()) {
      throw std::invalid_argument("ARBORSPLIT_BASE_N must be a non-negative integer, got '" + std::string(sv) + "'");
    }
    opt.base_n = value;
  }
  return opt;
}

std::string_view to_string(Guarantee g) { return g == Guarantee::full ? "full" : "partial"; }

std::optional<VertexId> star_anchor(const Scene& s, const SplitSpec& split, const Coloring& c1) {
  if (split.h_is_cycle) return std::nullopt;
  const auto& g = s.graph();
  for (VertexId q : split.h) {
    if (!g.on_outer_face(q)) continue;
    Color seen = Color::unset;
    bool mono = true;
    for (VertexId v : split.h) {
      if (v == q) continue;
      if (seen == Color::unset) seen = c1[v];
      mono = mono && c1[v] == seen;
    }
    if (mono) return q;
  }
  return std::nullopt;
}

GlueResult glue(const Scene& s, const SplitSpec& split, const Coloring& c1, const Coloring& c2) {
  const auto& g = s.graph();
  if (auto why = split_violation(g, s.precolored(), split)) throw std::invalid_argument(*why);
  for (VertexId h : split.h) {
    if (c1[h] == Color::unset || c1[h] != c2[h]) {
      throw std::invalid_argument("colorings disagree on H at " + g.name(h));
    }
  }
  GlueResult r;
  r.coloring = Coloring(g.universe_size());
  for (VertexId v : split.g1) r.coloring.set(v, c1[v]);
  for (VertexId v : split.g2) {
    if (std::find(split.h.begin(), split.h.end(), v) == split.h.end()) r.coloring.set(v, c2[v]);
  }
  r.anchor = star_anchor(s, split, c1);
  r.guarantee = r.anchor ? Guarantee::full : Guarantee::partial;
  return r;
}

Decomposition color_scene(const Scene& s, const DecomposeOptions& opt) {
  if (s.precolored().size() > 2) throw std::invalid_argument("color_scene requires |P| <= 2");
  Decomposer d(opt);
  Decomposition out;
  try {
    out.coloring = d.color(s, out.trace);
  } catch (CertifiedFailure& e) {
    e.set_trace(std::move(out.trace));
    throw;
  }
  return out;
}

Decomposition decompose(const PlaneGraph& g, const DecomposeOptions& opt) {
  return color_scene(empty_scene(g), opt);
}

namespace {

Coloring replay_node(const PlaneGraph& root, const TraceNode& n, const DecomposeOptions& opt) {
  if (n.vertices.empty()) return Coloring(root.universe_size());
  const bool whole = n.vertices.size() == root.vertex_count();
  const PlaneGraph g = whole ? root : root.induced_subgraph(n.vertices);
  Scene s = [&] {
    try {
      return make_scene(g, n.p, n.q, n.delta);
    } catch (const SceneError& e) {
      throw CertifiedFailure(std::string("replayed scene rejected: ") + e.what());
    }
  }();
  Coloring c(root.universe_size());
  if (n.kind == NodeKind::base) {
    auto found = brute_force(s, opt.oracle_cap);
    if (!found) throw CertifiedFailure("replayed base scene has no valid coloring");
    c = std::move(*found);
  } else {
    for (const auto& child : n.children) {
      if (auto clash = c.merge(replay_node(root, child, opt))) {
        throw CertifiedFailure("replayed children disagree at " + root.name(*clash));
      }
    }
    for (VertexId v : n.removed) c.set(v, Color::one);
  }
  c = c.restricted_to(n.vertices);
  if (const auto* bad = check_valid(s, c).first_failure()) {
    throw CertifiedFailure("replayed " + std::string(to_string(n.kind)) + " node fails " +
                           std::string(to_string(bad->clause)));
  }
  if (!(c == n.coloring)) throw CertifiedFailure("replayed coloring differs from the recorded one");
  return c;
}

}  // namespace

Coloring replay(const PlaneGraph& root, const TraceNode& trace, const DecomposeOptions& opt) {
  return replay_node(root, trace, opt);
}

}  // namespace arborsplit
