#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "arborsplit/scene.hpp"

namespace arborsplit {

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Raised when a scene has more free vertices than the enumeration cap.
class OracleCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// First valid coloring in lexicographic order over the free vertices
/// (those outside P and Q, by id; color 1 before color 2), or nothing.
std::optional<Coloring> brute_force(const Scene& s, std::size_t cap = kDefaultOracleCap);

/// Number of valid colorings.
std::uint64_t count_valid(const Scene& s, std::size_t cap = kDefaultOracleCap);

}  // namespace arborsplit
