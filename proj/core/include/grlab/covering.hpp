#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grlab/grid.hpp"

namespace grlab {

// Subset E of the grid cells with its cached mu-mass.
class CellSet {
 public:
  CellSet() = default;
  CellSet(const WeightedGrid& wg, std::vector<std::uint8_t> membership);

  bool contains(std::size_t cell) const { return membership_[cell] != 0; }
  const std::vector<std::uint8_t>& membership() const noexcept { return membership_; }
  double mass() const noexcept { return mass_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  // Recomputes the mass from wg and compares with the cached value.
  bool consistent_with(const WeightedGrid& wg) const;

 private:
  std::vector<std::uint8_t> membership_;
  double mass_ = 0.0;
  std::size_t count_ = 0;
};

// {cells : value > threshold}.
CellSet level_set_above(const WeightedGrid& wg, double threshold);

// Output of the discrete covering construction. Density of a cube is
// mu(Q_i ∩ E) / mu(Q_i). For an empty family rho_lo = rho_hi = 0 and overlap = 1.
struct CoveringResult {
  std::vector<Cube> cubes;
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  std::size_t overlap = 1;
  bool covered = true;
};

// Covers every positive-weight cell of E by cubes of E-density at most
// rho_cap. Seeds are the uncovered E-cells in row-major order; each seed grows
// a cube one cell of side at a time, kept as centred on the seed as the
// boundary of Q_0 allows, until the density first drops to <= rho_cap.
//
// Requires a square grid, 0 < rho <= rho_cap < 1 and mu(E) <= rho mu(Q_0)
// (PreconditionError otherwise; a relative slack of 1e-12 absorbs rounding).
CoveringResult build_covering(const WeightedGrid& wg, const CellSet& e, double rho, double rho_cap);

// Largest number of cubes sharing a cell; 1 for an empty family.
std::size_t overlap_constant(std::span<const Cube> cubes, const Grid& grid);

}  // namespace grlab
