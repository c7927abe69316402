#include "arborsplit/oracle.hpp"

#include <string>

#include "arborsplit/validity.hpp"

namespace arborsplit {

namespace {

// Calls visit(local) for every completion of the forced colors, in
// lexicographic order; stops when visit returns false.
template <class Visit>
void enumerate(const Validator& val, std::size_t cap, Visit visit) {
  std::vector<Color> local(val.forced().begin(), val.forced().end());
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (local[i] == Color::unset) free.push_back(i);
  }
  if (free.size() > cap) {
    throw OracleCapExceeded("scene has " + std::to_string(free.size()) + " free vertices, cap is " +
                            std::to_string(cap));
  }
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      const bool two = (mask >> (free.size() - 1 - i)) & 1U;
      local[free[i]] = two ? Color::two : Color::one;
    }
    if (!visit(local)) return;
  }
}

}  // namespace

std::optional<Coloring> brute_force(const Scene& s, std::size_t cap) {
  const Validator val(s);
  std::optional<Coloring> found;
  enumerate(val, cap, [&](const std::vector<Color>& local) {
    if (!val.is_valid(local)) return true;
    Coloring c(s.graph().universe_size());
    for (std::size_t i = 0; i < local.size(); ++i) c.set(val.vertices()[i], local[i]);
    found = std::move(c);
    return false;
  });
  return found;
}

std::uint64_t count_valid(const Scene& s, std::size_t cap) {
  const Validator val(s);
  std::uint64_t n = 0;
  enumerate(val, cap, [&](const std::vector<Color>& local) {
    if (val.is_valid(local)) ++n;
    return true;
  });
  return n;
}

}  // namespace arborsplit
