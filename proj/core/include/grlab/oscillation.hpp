#pragma once

#include <cstdint>
#include <optional>

#include "grlab/enumeration.hpp"
#include "grlab/grid.hpp"
#include "grlab/threshold_index.hpp"

namespace grlab {

// Weighted mean, mean oscillation and the lower half-oscillation of f on a cube.
struct OscStats {
  double mean = 0.0;        // f_{Q,mu}
  double osc = 0.0;         // Omega_mu(f; Q)
  double lower_half = 0.0;  // integral over {f < f_Q} of (f_Q - f) dmu
  double mass = 0.0;        // mu(Q)
};

// f_{Q,mu}. Throws DomainError("zero-mass cube") when mu(Q) = 0.
double mean(const WeightedGrid& wg, const Cube& q);

// Single direct pass over the cells of q. Deviations are accumulated in the
// scaled form w * |mu(Q) v - S| (S = sum of w v) with compensated sums, so
// integer data give exact sums.
OscStats oscillation(const WeightedGrid& wg, const Cube& q);

// Omega / f_Q for one cube through the threshold index; 0 when f_Q = 0,
// nullopt when mu(Q) = 0.
std::optional<double> oscillation_ratio(const WeightedGrid& wg, const ThresholdIndex& index, const Cube& q);

struct GRResult {
  double epsilon = 0.0;
  Cube witness;
  EnumerationMode mode;
  std::uint64_t cubes_scanned = 0;  // cubes with positive mass
};

// Smallest epsilon with Omega <= epsilon f_Q on every enumerated cube, i.e. the
// maximal ratio, with its first attaining cube. Throws DomainError("empty
// measure") when no enumerated cube carries mass.
GRResult gr_epsilon(const WeightedGrid& wg, const EnumerationMode& mode, unsigned threads = 1);

}  // namespace grlab
