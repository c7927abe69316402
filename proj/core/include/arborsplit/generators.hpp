#pragma once

#include <cstdint>
#include <vector>

#include "arborsplit/plane_graph.hpp"

namespace arborsplit {

/// rows x cols grid; vertex "r{i}c{j}". Throws std::invalid_argument on a
/// zero dimension.
PlaneGraph grid(std::size_t rows, std::size_t cols);

/// Cycle v0 .. v{n-1}; throws std::invalid_argument when n < 4.
PlaneGraph even_cycle(std::size_t n);

/// Cube drawn as two nested squares o0..o3 and i0..i3 joined by spokes.
PlaneGraph nested_cube();

/// nested_cube plus a vertex p inside the inner square, adjacent to i0 and
/// i2; the inner square becomes a separating 4-cycle.
PlaneGraph nested_cube_with_center();

/// Repeatedly inserts a new vertex into a uniformly chosen face of length at
/// least four, joined to two non-adjacent corners of that face.
PlaneGraph grow_quadrangulation(const PlaneGraph& seed, std::size_t steps, std::uint64_t rng_seed);
PlaneGraph grow_quadrangulation(std::size_t steps, std::uint64_t rng_seed);

/// Connected induced subgraphs of grid(4, 4) with at most max_n vertices
/// (by size, then by vertex bitmask), then C4 .. C{max_n}, then the nested
/// cube and its centred variant when they fit. Throws for max_n > 12.
std::vector<PlaneGraph> corpus_small(std::size_t max_n);

}  // namespace arborsplit
