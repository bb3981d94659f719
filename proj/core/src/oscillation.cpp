#include "grlab/oscillation.hpp"

#include <algorithm>

#include "grlab/errors.hpp"
#include "grlab/scan.hpp"

namespace grlab {

double mean(const WeightedGrid& wg, const Cube& q) {
  wg.grid().require(q);
  const double mass = wg.cube_mass(q);
  if (!(mass > 0.0)) throw DomainError("zero-mass cube " + q.to_string());
  return wg.cube_moment(q) / mass;
}

OscStats oscillation(const WeightedGrid& wg, const Cube& q) {
  wg.grid().require(q);
  const double mass = wg.cube_mass(q);
  if (!(mass > 0.0)) throw DomainError("zero-mass cube " + q.to_string());
  const double moment = wg.cube_moment(q);

  CompensatedSum deviation;
  CompensatedSum below;
  for_each_cell(wg.grid(), q, [&](std::size_t i) {
    const double w = wg.weight(i);
    const double d = mass * wg.value(i) - moment;
    deviation.add(w * std::abs(d));
    if (d < 0.0) below.add(-w * d);
  });

  OscStats s;
  s.mass = mass;
  s.mean = moment / mass;
  s.osc = deviation.value() / (mass * mass);
  s.lower_half = below.value() / mass;
  return s;
}

std::optional<double> oscillation_ratio(const WeightedGrid& wg, const ThresholdIndex& index, const Cube& q) {
  const double mass = wg.cube_mass(q);
  if (!(mass > 0.0)) return std::nullopt;
  const double moment = wg.cube_moment(q);
  if (!(moment > 0.0)) return 0.0;
  // sum w |M v - S| = 2 sum_{M v > S} w (M v - S), since the signed sum vanishes.
  const AboveSums a = index.above(q, mass, moment);
  const double deviation = 2.0 * (mass * a.moment - moment * a.mass);
  return std::max(deviation, 0.0) / (mass * moment);
}

GRResult gr_epsilon(const WeightedGrid& wg, const EnumerationMode& mode, unsigned threads) {
  const CubeFamily family(wg.grid(), mode);
  const ThresholdIndex index(wg);

  struct Acc {
    MaxCube best;
    std::uint64_t scanned = 0;
  };
  const Acc acc = scan_reduce(
      family, threads, Acc{},
      [&](Acc& a, const Cube& q, std::uint64_t i) {
        const auto r = oscillation_ratio(wg, index, q);
        if (!r) return;
        ++a.scanned;
        a.best.offer(*r, i, q);
      },
      [](Acc& a, const Acc& later) {
        a.best.merge(later.best);
        a.scanned += later.scanned;
      });

  if (!acc.best.found) throw DomainError("empty measure: no enumerated cube has positive mass");
  return GRResult{acc.best.value, acc.best.cube, mode, acc.scanned};
}

}  // namespace grlab
