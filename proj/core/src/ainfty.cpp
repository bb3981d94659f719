#include "grlab/ainfty.hpp"

#include <cmath>

#include "grlab/errors.hpp"
#include "grlab/oscillation.hpp"
#include "grlab/scan.hpp"
#include "grlab/threshold_index.hpp"

namespace grlab {
namespace {

void require_ordering(double epsilon, double lambda) {
  if (!(epsilon > 0.0 && epsilon < lambda && lambda < 2.0)) {
    throw DomainError("parameters must satisfy 0 < epsilon < lambda < 2");
  }
}

// Running worst margin plus the first hypothesis violation.
struct MarginAcc {
  MinCube worst;
  double worst_relative = 0.0;
  bool any = false;
  FirstHit violation;
  std::uint64_t scanned = 0;

  void offer(double margin, double scale, std::uint64_t i, const Cube& q) {
    worst.offer(margin, i, q);
    const double rel = margin / scale;
    if (!any || rel < worst_relative) worst_relative = rel;
    any = true;
    ++scanned;
  }

  void merge(const MarginAcc& later) {
    worst.merge(later.worst);
    if (later.any && (!any || later.worst_relative < worst_relative)) worst_relative = later.worst_relative;
    any = any || later.any;
    violation.merge(later.violation);
    scanned += later.scanned;
  }
};

MarginReport finish(const MarginAcc& acc, const EnumerationMode& mode, double tolerance) {
  MarginReport r;
  r.mode = mode;
  r.tolerance = tolerance;
  r.cubes_scanned = acc.scanned;
  if (acc.any) {
    r.worst_margin = acc.worst.value;
    r.witness = acc.worst.cube;
    r.worst_relative_margin = acc.worst_relative;
    r.holds = acc.worst_relative >= -tolerance;
  }
  return r;
}

}  // namespace

LevelParams LevelParams::make(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  return LevelParams{alpha, beta};
}

double level_fraction(const WeightedGrid& wg, const Cube& q, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  wg.grid().require(q);
  const double mass = wg.cube_mass(q);
  if (!(mass > 0.0)) throw DomainError("zero-mass cube " + q.to_string());
  const double threshold = beta * wg.cube_moment(q);
  CompensatedSum above;
  for_each_cell(wg.grid(), q, [&](std::size_t i) {
    if (mass * wg.value(i) > threshold) above.add(wg.weight(i));
  });
  return above.value() / mass;
}

AlphaProfile alpha_profile(const WeightedGrid& wg, double beta, const EnumerationMode& mode, unsigned threads) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  const CubeFamily family(wg.grid(), mode);
  const ThresholdIndex index(wg);

  struct Acc {
    MinCube best;
    std::uint64_t scanned = 0;
  };
  const Acc acc = scan_reduce(
      family, threads, Acc{},
      [&](Acc& a, const Cube& q, std::uint64_t i) {
        const double mass = wg.cube_mass(q);
        if (!(mass > 0.0)) return;
        const double moment = wg.cube_moment(q);
        if (!(moment > 0.0)) return;
        ++a.scanned;
        a.best.offer(index.above(q, mass, beta * moment).mass / mass, i, q);
      },
      [](Acc& a, const Acc& later) {
        a.best.merge(later.best);
        a.scanned += later.scanned;
      });

  if (!acc.best.found) throw DomainError("empty measure: f vanishes mu-a.e. on every enumerated cube");
  return AlphaProfile{beta, acc.best.value, acc.best.cube, acc.scanned};
}

LevelParams thm1_forward_params(double epsilon, double lambda) {
  require_ordering(epsilon, lambda);
  return LevelParams::make(1.0 - lambda / 2.0, 1.0 - epsilon / lambda);
}

double thm1_reverse_bound(const LevelParams& params) { return 2.0 * (1.0 - params.alpha * params.beta); }

double roundtrip_epsilon(double epsilon, double lambda) {
  require_ordering(epsilon, lambda);
  return 2.0 * (1.0 - (1.0 - lambda / 2.0) * (1.0 - epsilon / lambda));
}

MarginReport verify_thm1_forward(const WeightedGrid& wg, double epsilon, double lambda, const EnumerationMode& mode,
                                 unsigned threads, double tolerance) {
  const LevelParams lp = thm1_forward_params(epsilon, lambda);
  const CubeFamily family(wg.grid(), mode);
  const ThresholdIndex index(wg);

  const MarginAcc acc = scan_reduce(
      family, threads, MarginAcc{},
      [&](MarginAcc& a, const Cube& q, std::uint64_t i) {
        const double mass = wg.cube_mass(q);
        if (!(mass > 0.0)) return;
        const double moment = wg.cube_moment(q);
        if (!(moment > 0.0)) return;
        const auto ratio = oscillation_ratio(wg, index, q);
        if (*ratio > epsilon + tolerance) a.violation.offer(*ratio, i, q);
        const double level = index.above(q, mass, lp.beta * moment).mass;
        a.offer(level - lp.alpha * mass, mass, i, q);
      },
      [](MarginAcc& a, const MarginAcc& later) { a.merge(later); });

  if (acc.violation.found) {
    throw PreconditionError("input not in GR_mu(epsilon): Omega/f_Q = " + std::to_string(acc.violation.value) +
                                " exceeds epsilon = " + std::to_string(epsilon),
                            acc.violation.cube, acc.violation.value);
  }
  return finish(acc, mode, tolerance);
}

MarginReport verify_thm1_reverse(const WeightedGrid& wg, const LevelParams& params, const EnumerationMode& mode,
                                 unsigned threads, double tolerance) {
  const LevelParams lp = LevelParams::make(params.alpha, params.beta);
  const double bound = thm1_reverse_bound(lp);
  const CubeFamily family(wg.grid(), mode);
  const ThresholdIndex index(wg);

  const MarginAcc acc = scan_reduce(
      family, threads, MarginAcc{},
      [&](MarginAcc& a, const Cube& q, std::uint64_t i) {
        const double mass = wg.cube_mass(q);
        if (!(mass > 0.0)) return;
        const double moment = wg.cube_moment(q);
        if (!(moment > 0.0)) return;
        const double level = index.above(q, mass, lp.beta * moment).mass;
        if (!(level > lp.alpha * mass)) a.violation.offer(level / mass, i, q);
        const double m = moment / mass;
        const double osc = *oscillation_ratio(wg, index, q) * m;
        a.offer(bound * m - osc, m, i, q);
      },
      [](MarginAcc& a, const MarginAcc& later) { a.merge(later); });

  if (acc.violation.found) {
    throw PreconditionError("input not in A_inf(alpha, beta): level fraction " + std::to_string(acc.violation.value) +
                                " does not exceed alpha = " + std::to_string(lp.alpha),
                            acc.violation.cube, acc.violation.value);
  }
  return finish(acc, mode, tolerance);
}

}  // namespace grlab
