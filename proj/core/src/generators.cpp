#include "arborsplit/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace arborsplit {

namespace {

PlaneGraph named(const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& rotation,
                 const std::vector<std::string>& outer) {
  return PlaneGraph::from_names(names, rotation, outer);
}

}  // namespace

PlaneGraph grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  const std::size_t n = rows * cols;
  auto labels = std::make_shared<std::vector<std::string>>();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) labels->push_back("r" + std::to_string(r) + "c" + std::to_string(c));
  }
  auto at = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  PlaneGraph::Rotation rot(n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto& out = rot[at(r, c)];
      if (r > 0) out.push_back(at(r - 1, c));
      if (c + 1 < cols) out.push_back(at(r, c + 1));
      if (r + 1 < rows) out.push_back(at(r + 1, c));
      if (c > 0) out.push_back(at(r, c - 1));
    }
  }
  std::vector<VertexId> verts(n);
  for (std::size_t i = 0; i < n; ++i) verts[i] = static_cast<VertexId>(i);
  std::vector<Dart> outer;
  if (cols > 1) {
    outer.push_back({at(0, 0), at(0, 1)});
  } else if (rows > 1) {
    outer.push_back({at(0, 0), at(1, 0)});
  }
  return PlaneGraph::from_outer_darts(std::move(labels), std::move(verts), std::move(rot), outer);
}

PlaneGraph even_cycle(std::size_t n) {
  if (n < 4) throw std::invalid_argument("cycle length must be at least 4");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::vector<std::string>> rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = {names[(i + n - 1) % n], names[(i + 1) % n]};
  return named(names, rot, names);
}

PlaneGraph nested_cube() {
  const std::vector<std::string> names{"o0", "o1", "o2", "o3", "i0", "i1", "i2", "i3"};
  std::vector<std::vector<std::string>> rot(8);
  for (int k = 0; k < 4; ++k) {
    const std::string o = "o" + std::to_string(k);
    const std::string i = "i" + std::to_string(k);
    rot[k] = {"o" + std::to_string((k + 1) % 4), i, "o" + std::to_string((k + 3) % 4)};
    rot[4 + k] = {o, "i" + std::to_string((k + 1) % 4), "i" + std::to_string((k + 3) % 4)};
  }
  return named(names, rot, {"o0", "o1", "o2", "o3"});
}

PlaneGraph nested_cube_with_center() {
  const std::vector<std::string> names{"o0", "o1", "o2", "o3", "i0", "i1", "i2", "i3", "p"};
  std::vector<std::vector<std::string>> rot(9);
  for (int k = 0; k < 4; ++k) {
    const std::string i = "i" + std::to_string(k);
    rot[k] = {"o" + std::to_string((k + 1) % 4), i, "o" + std::to_string((k + 3) % 4)};
    rot[4 + k] = {"o" + std::to_string(k), "i" + std::to_string((k + 1) % 4), "i" + std::to_string((k + 3) % 4)};
  }
  rot[4] = {"o0", "i1", "p", "i3"};
  rot[6] = {"o2", "i3", "p", "i1"};
  rot[8] = {"i0", "i2"};
  return named(names, rot, {"o0", "o1", "o2", "o3"});
}

PlaneGraph grow_quadrangulation(const PlaneGraph& seed, std::size_t steps, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::vector<std::string> labels(*seed.labels());
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  std::vector<VertexId> verts(seed.vertices().begin(), seed.vertices().end());
  PlaneGraph::Rotation rot(seed.universe_size());
  for (VertexId v : verts) rot[v].assign(seed.rotation(v).begin(), seed.rotation(v).end());
  std::vector<Dart> outer;
  for (const auto& w : seed.outer_walks()) {
    if (w.size() > 1) outer.push_back({w[0], w[1]});
  }
  PlaneGraph g = seed;
  std::size_t counter = labels.size();
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::size_t> eligible;
    for (std::size_t f = 0; f < g.faces().size(); ++f) {
      if (g.faces()[f].walk.size() >= 4) eligible.push_back(f);
    }
    if (eligible.empty()) throw std::invalid_argument("no face of length four or more to grow into");
    const auto& face = g.faces()[eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)]];
    const auto& walk = face.walk;
    const std::size_t len = walk.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        if (walk[i] != walk[j] && !g.adjacent(walk[i], walk[j])) pairs.emplace_back(i, j);
      }
    }
    if (pairs.empty()) continue;
    const auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];

    while (taken.count("v" + std::to_string(counter))) ++counter;
    const std::string name = "v" + std::to_string(counter++);
    taken.insert(name);
    const auto w = static_cast<VertexId>(labels.size());
    labels.push_back(name);
    rot.emplace_back();
    // Corner of the face at walk[k] lies just after walk[k-1] in rotation(walk[k]).
    for (std::size_t k : {i, j}) {
      const VertexId v = walk[k];
      const VertexId prev = walk[(k + len - 1) % len];
      auto& r = rot[v];
      const auto it = std::find(r.begin(), r.end(), prev);
      r.insert(it + 1, w);
    }
    rot[w] = {walk[i], walk[j]};
    verts.push_back(w);
    if (face.is_outer) {
      for (auto& d : outer) {
        if (std::find(walk.begin(), walk.end(), d.from) != walk.end()) d = {walk[i], walk[(i + 1) % len]};
      }
    }
    g = PlaneGraph::from_outer_darts(std::make_shared<const std::vector<std::string>>(labels), verts, rot, outer);
  }
  return g;
}

PlaneGraph grow_quadrangulation(std::size_t steps, std::uint64_t rng_seed) {
  return grow_quadrangulation(even_cycle(4), steps, rng_seed);
}

std::vector<PlaneGraph> corpus_small(std::size_t max_n) {
  if (max_n > 12) throw std::invalid_argument("corpus_small supports max_n <= 12");
  const PlaneGraph base = grid(4, 4);
  std::vector<std::vector<std::uint32_t>> by_size(max_n + 1);
  for (std::uint32_t mask = 1; mask < (1U << 16); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > max_n) continue;
    // Connectivity by flood fill over the grid.
    const std::uint32_t start = mask & (~mask + 1);
    std::uint32_t seen = start;
    std::uint32_t frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t bits = frontier; bits; bits &= bits - 1) {
        const auto v = static_cast<VertexId>(std::countr_zero(bits));
        for (VertexId u : base.rotation(v)) next |= 1U << u;
      }
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen == mask) by_size[size].push_back(mask);
  }
  std::vector<PlaneGraph> out;
  for (const auto& masks : by_size) {
    for (std::uint32_t mask : masks) {
      std::vector<VertexId> keep;
      for (VertexId v = 0; v < 16; ++v) {
        if (mask & (1U << v)) keep.push_back(v);
      }
      out.push_back(base.induced_subgraph(keep));
    }
  }
  for (std::size_t n = 4; n <= max_n; ++n) out.push_back(even_cycle(n));
  if (max_n >= 8) out.push_back(nested_cube());
  if (max_n >= 9) out.push_back(nested_cube_with_center());
  return out;
}

}  // namespace arborsplit
