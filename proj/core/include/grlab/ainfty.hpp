#pragma once

#include <cstdint>

#include "grlab/enumeration.hpp"
#include "grlab/grid.hpp"

namespace grlab {

// (alpha, beta) of the level-set condition mu{f > beta f_Q} > alpha mu(Q).
struct LevelParams {
  double alpha = 0.0;
  double beta = 0.0;

  // Throws DomainError unless 0 < alpha < 1 and 0 < beta < 1.
  static LevelParams make(double alpha, double beta);
};

// Worst case of an inequality LHS >= RHS over a cube family.
//
// worst_margin is the smallest raw LHS - RHS and witness the first cube
// attaining it. Each cube is judged against its own scale (mu(Q) for measure
// inequalities, f_Q for oscillation inequalities): holds is true iff
// margin >= -tolerance * scale on every cube, equivalently
// worst_relative_margin >= -tolerance.
struct MarginReport {
  double worst_margin = 0.0;
  double worst_relative_margin = 0.0;
  Cube witness;
  EnumerationMode mode;
  bool holds = true;
  double tolerance = 0.0;
  std::uint64_t cubes_scanned = 0;
};

inline constexpr double kDefaultTolerance = 1e-12;

// mu{cells of Q with value > beta f_Q} / mu(Q), strict inequality.
double level_fraction(const WeightedGrid& wg, const Cube& q, double beta);

struct AlphaProfile {
  double beta = 0.0;
  double alpha_star = 0.0;  // (alpha, beta) certifies for every alpha < alpha_star
  Cube witness;
  std::uint64_t cubes_scanned = 0;
};

// Minimum level fraction over enumerated cubes. Cubes where f_Q = 0 are skipped
// (f vanishes mu-a.e. there).
AlphaProfile alpha_profile(const WeightedGrid& wg, double beta, const EnumerationMode& mode, unsigned threads = 1);

// Level-set certificate guaranteed by GR(epsilon) for epsilon < lambda < 2:
// beta = 1 - epsilon/lambda, alpha = 1 - lambda/2 (attained with ">=").
LevelParams thm1_forward_params(double epsilon, double lambda);

// 2 (1 - alpha beta): the oscillation bound implied by the level-set condition.
double thm1_reverse_bound(const LevelParams& params);

// GR parameter recovered after composing the two directions,
// 2 (1 - (1 - lambda/2)(1 - epsilon/lambda)).
double roundtrip_epsilon(double epsilon, double lambda);

// Checks mu{f > (1 - epsilon/lambda) f_Q} >= (1 - lambda/2) mu(Q) on every
// enumerated cube with f_Q > 0. Re-checks the GR(epsilon) hypothesis in the
// same pass and throws PreconditionError with the first violating cube.
MarginReport verify_thm1_forward(const WeightedGrid& wg, double epsilon, double lambda, const EnumerationMode& mode,
                                 unsigned threads = 1, double tolerance = kDefaultTolerance);

// Checks Omega <= 2 (1 - alpha beta) f_Q on every enumerated cube with f_Q > 0.
// Re-checks the strict level-set hypothesis and throws PreconditionError with
// the first violating cube.
MarginReport verify_thm1_reverse(const WeightedGrid& wg, const LevelParams& params, const EnumerationMode& mode,
                                 unsigned threads = 1, double tolerance = kDefaultTolerance);

}  // namespace grlab
