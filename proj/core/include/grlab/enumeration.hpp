#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grlab/cube.hpp"
#include "grlab/grid.hpp"

namespace grlab {

// Which discrete cube family stands in for "every cube Q in Q_0".
struct EnumerationMode {
  enum class Kind { all, dyadic, random_sample };

  Kind kind = Kind::all;
  std::uint64_t count = 0;  // random_sample only
  std::uint64_t seed = 0;   // random_sample only

  static EnumerationMode all() { return {Kind::all, 0, 0}; }
  static EnumerationMode dyadic() { return {Kind::dyadic, 0, 0}; }
  static EnumerationMode sample(std::uint64_t count, std::uint64_t seed) { return {Kind::random_sample, count, seed}; }

  // "all", "dyadic" for n >= 2.
  static EnumerationMode default_for(const Grid& grid);
  // Accepts "all", "dyadic", "sample:COUNT:SEED".
  static EnumerationMode parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const EnumerationMode&, const EnumerationMode&) = default;
};

// Random-access view of the cube family of a grid in canonical order:
// ascending side, then lexicographic origin (axis 0 most significant).
// random_sample draws `count` indices of the "all" family with replacement from
// a std::mt19937_64 stream seeded with `seed` (rejection-sampled, so the draw
// sequence does not depend on the standard library's distributions), then
// sorted into canonical order.
class CubeFamily {
 public:
  // Throws ConfigError when the mode is not valid for the grid.
  CubeFamily(const Grid& grid, const EnumerationMode& mode);

  std::uint64_t size() const noexcept { return size_; }
  const EnumerationMode& mode() const noexcept { return mode_; }
  const Grid& grid() const noexcept { return grid_; }

  Cube at(std::uint64_t index) const;
  void at(std::uint64_t index, Cube& out) const;

  // Calls fn(cube, index) for indices in [begin, end) in order.
  template <class Fn>
  void visit(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    Cube c;
    if (mode_.kind == EnumerationMode::Kind::random_sample) {
      for (std::uint64_t i = begin; i < end; ++i) {
        at(i, c);
        fn(static_cast<const Cube&>(c), i);
      }
      return;
    }
    at(begin, c);
    for (std::uint64_t i = begin;;) {
      fn(static_cast<const Cube&>(c), i);
      if (++i == end) break;
      advance(c);
    }
  }

 private:
  struct SideBlock {
    std::size_t side;
    std::size_t step;                    // origin spacing: 1 for all, side for dyadic
    std::vector<std::uint64_t> positions;  // per-axis number of origins
    std::uint64_t offset;
    std::uint64_t count;
  };

  void at_structured(std::uint64_t index, Cube& out) const;
  void advance(Cube& c) const;

  Grid grid_;
  EnumerationMode mode_;
  std::vector<SideBlock> blocks_;
  std::uint64_t structured_size_ = 0;
  std::vector<std::uint64_t> samples_;
  std::uint64_t size_ = 0;
};

// Materialized enumeration; intended for small grids and tests.
std::vector<Cube> enumerate_cubes(const Grid& grid, const EnumerationMode& mode);

}  // namespace grlab
