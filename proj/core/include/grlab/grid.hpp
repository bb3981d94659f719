#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grlab/cube.hpp"
#include "grlab/summation.hpp"

namespace grlab {

// Regular grid over the unit cube [0,1]^n. Cells are stored row-major: the
// last axis varies fastest.
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<std::size_t> shape);

  std::size_t dim() const noexcept { return shape_.size(); }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
  std::size_t stride(std::size_t axis) const { return strides_.at(axis); }
  std::size_t cell_count() const noexcept { return cells_; }
  std::size_t min_extent() const noexcept;
  bool is_square() const noexcept;
  double cell_edge(std::size_t axis) const { return 1.0 / static_cast<double>(extent(axis)); }
  double cell_volume() const noexcept;

  std::size_t flat_index(std::span<const std::size_t> coords) const;
  std::vector<std::size_t> coords(std::size_t flat) const;

  bool contains(const Cube& q) const noexcept;
  // Throws ConfigError if q is not a valid cube of this grid.
  void require(const Cube& q) const;
  Cube full_cube() const;  // largest cube anchored at the origin

  friend bool operator==(const Grid& a, const Grid& b) { return a.shape_ == b.shape_; }

 private:
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 0;
};

// Calls fn(flat_index) for every cell of q in row-major order.
template <class Fn>
void for_each_cell(const Grid& grid, const Cube& q, Fn&& fn) {
  const std::size_t n = grid.dim();
  std::size_t base = 0;
  for (std::size_t k = 0; k < n; ++k) base += q.origin[k] * grid.stride(k);
  if (n == 1) {
    for (std::size_t i = 0; i < q.side; ++i) fn(base + i);
    return;
  }
  // Rows along the last axis are contiguous; walk an odometer over the rest.
  std::vector<std::size_t> step(n - 1, 0);
  while (true) {
    std::size_t row = base;
    for (std::size_t k = 0; k + 1 < n; ++k) row += step[k] * grid.stride(k);
    for (std::size_t j = 0; j < q.side; ++j) fn(row + j);
    std::size_t k = n - 1;
    while (k > 0) {
      --k;
      if (++step[k] < q.side) break;
      step[k] = 0;
      if (k == 0) return;
    }
  }
}

// Summed-area table over an n-dimensional grid. Entries are double-double so
// that box sums of small cubes keep full relative precision far from the
// origin; on integer data every query is exact.
class PrefixTable {
 public:
  PrefixTable() = default;
  PrefixTable(const Grid& grid, std::span<const double> cell_data);

  // Sum of cell_data over q, using 2^n corner lookups.
  double sum(const Cube& q) const;
  double total() const;

 private:
  std::vector<std::size_t> shape_;    // per-axis extent + 1
  std::vector<std::size_t> strides_;
  std::vector<double> hi_;
  std::vector<double> lo_;
};

// The discrete pair (f, mu): per-cell mass and per-cell function value.
// Weights are masses mu(cell), not densities. Immutable after construction.
class WeightedGrid {
 public:
  WeightedGrid() = default;
  // Throws ConfigError if the array sizes disagree with the grid.
  WeightedGrid(Grid grid, std::vector<double> weights, std::vector<double> values);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> values() const noexcept { return values_; }
  double weight(std::size_t cell) const { return weights_[cell]; }
  double value(std::size_t cell) const { return values_[cell]; }

  double total_mass() const { return mass_.total(); }
  double cube_mass(const Cube& q) const { return mass_.sum(q); }
  // Sum of weight * value over q.
  double cube_moment(const Cube& q) const { return moment_.sum(q); }

 private:
  Grid grid_;
  std::vector<double> weights_;
  std::vector<double> values_;
  PrefixTable mass_;
  PrefixTable moment_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const WeightedGrid& wg);
// Throws ValidationError listing the violations when validate() fails.
void require_valid(const WeightedGrid& wg);

inline double cube_mass(const WeightedGrid& wg, const Cube& q) { return wg.cube_mass(q); }

}  // namespace grlab
