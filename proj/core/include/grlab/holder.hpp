#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grlab/covering.hpp"
#include "grlab/enumeration.hpp"
#include "grlab/grid.hpp"

namespace grlab {

// Parameters of the f** <= K f* estimate: epsilon < lambda < 2,
// 0 < rho < 1 - lambda/2, each t in (0, rho mu(Q_0)].
struct Thm2Params {
  double epsilon = 0.0;
  double lambda = 0.0;
  double rho = 0.0;
  std::vector<double> t_values;

  // Throws DomainError on any violated constraint.
  void validate(double total_mass) const;
};

struct CoveringConstants {
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  std::size_t overlap = 1;
  std::size_t cubes = 0;
};

struct Thm2Record {
  double t = 0.0;
  double fstar = 0.0;
  double fstarstar = 0.0;
  double k_nominal = 0.0;   // bound with the requested rho and the measured overlap
  double k_achieved = 0.0;  // bound with the measured rho_lo and overlap
  // Smallest per-cube slack of f_Qi <= lambda/(lambda-eps) f*(t) and of
  // Omega(f;Q_i) <= eps lambda/(lambda-eps) f*(t); empty family -> nullopt.
  std::optional<double> eq4_margin;
  std::optional<double> eq5_margin;
  bool margins_hold = true;
  bool holds = true;
  bool degenerate = false;  // f*(t) = 0
  CoveringConstants covering;
};

struct Thm2Report {
  EnumerationMode mode;
  double epsilon_measured = 0.0;
  std::vector<Thm2Record> per_t;
  CoveringConstants covering_constants;  // worst case over t
  bool all_hold = true;                  // over non-degenerate t
  double tolerance = 0.0;
};

// K = B (lambda/rho + 1) epsilon / (lambda - epsilon) + 1.
double thm2_bound(double epsilon, double lambda, double rho, double B);

// p_max = 1 + (lambda - epsilon) / (B (lambda/rho + 1) epsilon); satisfies
// (p_max - 1)(K - 1) = 1.
double rh_exponent_bound(double epsilon, double lambda, double rho, double B);

// For every t: E_t = {f > f*(t)}, covering of E_t with rho_cap = 1 - lambda/2,
// per-cube mean and oscillation margins, and f**(t) <= K_achieved f*(t).
// Re-checks gr_epsilon(wg, mode) <= epsilon first (PreconditionError).
Thm2Report verify_thm2(const WeightedGrid& wg, const Thm2Params& params, const EnumerationMode& mode,
                       unsigned threads = 1, double tolerance = 1e-12);

struct RhOptimum {
  double lambda_star = 0.0;
  double rho_star = 0.0;
  double p_star = 1.0;
  bool grid_fallback = false;
};

// Maximizes rh_exponent_bound over lambda in (epsilon, 2) with
// rho(lambda) = (1 - lambda/2)(1 - delta): golden-section search to 1e-9 in
// lambda, after a coarse scan confirms a single peak (10^4-point scan
// otherwise).
RhOptimum optimize_rh_exponent(double epsilon, double B, double delta = 1e-6);

struct RhConstant {
  double p = 0.0;
  double c_hat = 1.0;
  Cube witness;
  std::uint64_t cubes_scanned = 0;
};

// Empirical reverse-Hölder constant: the largest ratio of the p-mean to the
// mean over enumerated cubes with f_Q > 0.
RhConstant rh_constant(const WeightedGrid& wg, double p, const EnumerationMode& mode, unsigned threads = 1);

}  // namespace grlab
