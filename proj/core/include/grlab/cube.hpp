#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace grlab {

// Axis-aligned, cell-aligned subcube of a grid: cells origin[k] .. origin[k]+side-1
// along every axis k.
struct Cube {
  std::vector<std::size_t> origin;
  std::size_t side = 0;

  std::string to_string() const;

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

}  // namespace grlab
