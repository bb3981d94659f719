#pragma once

#include <cstddef>
#include <vector>

#include "grlab/grid.hpp"

namespace grlab {

// Mass and weighted sum of the cells of a cube lying strictly above a level.
struct AboveSums {
  double mass = 0.0;    // sum of weight
  double moment = 0.0;  // sum of weight * value
};

// Answers "which cells of Q satisfy scale * value > threshold" aggregates.
// Every per-cube quantity in the scans (oscillation through the split at the
// mean, level-set fractions) reduces to this query with scale = mu(Q).
//
// In 1D a merge-sort tree answers a query in O(log^2 N); in higher dimensions
// the cube is scanned directly. Both paths evaluate the same predicate
// expression, so results agree on exactly representable data.
class ThresholdIndex {
 public:
  explicit ThresholdIndex(const WeightedGrid& wg);

  AboveSums above(const Cube& q, double scale, double threshold) const;

 private:
  void add_node(std::size_t node, double scale, double threshold, CompensatedSum& mass,
                CompensatedSum& moment) const;

  const WeightedGrid* wg_;
  bool tree_ = false;
  std::size_t leaves_ = 0;
  // Node i owns [offset_[i], offset_[i+1]) of values_; the suffix arrays have
  // one extra trailing zero per node, at index offset_[i] + i.
  std::vector<std::size_t> offset_;
  std::vector<double> values_;
  std::vector<double> suffix_mass_;
  std::vector<double> suffix_moment_;
};

}  // namespace grlab
