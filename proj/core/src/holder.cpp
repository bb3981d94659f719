#include "grlab/holder.hpp"

#include <algorithm>
#include <cmath>

#include "grlab/errors.hpp"
#include "grlab/oscillation.hpp"
#include "grlab/rearrangement.hpp"
#include "grlab/scan.hpp"

namespace grlab {
namespace {

void require_bound_params(double epsilon, double lambda, double rho, double B) {
  if (!(epsilon > 0.0 && epsilon < lambda && lambda < 2.0)) {
    throw DomainError("parameters must satisfy 0 < epsilon < lambda < 2");
  }
  if (!(rho > 0.0 && rho < 1.0 - lambda / 2.0)) throw DomainError("rho must lie in (0, 1 - lambda/2)");
  if (!(B >= 1.0)) throw DomainError("overlap constant B must be >= 1");
}

// Unchecked forms; the achieved density may sit exactly at the cap.
double k_constant(double epsilon, double lambda, double rho, double B) {
  return B * (lambda / rho + 1.0) * epsilon / (lambda - epsilon) + 1.0;
}

double p_bound(double epsilon, double lambda, double rho, double B) {
  return 1.0 + (lambda - epsilon) / (B * (lambda / rho + 1.0) * epsilon);
}

}  // namespace

void Thm2Params::validate(double total_mass) const {
  require_bound_params(epsilon, lambda, rho, 1.0);
  if (t_values.empty()) throw DomainError("at least one t value is required");
  for (double t : t_values) {
    if (!(t > 0.0 && t <= rho * total_mass)) {
      throw DomainError("t = " + std::to_string(t) + " outside (0, rho mu(Q_0)] = (0, " +
                        std::to_string(rho * total_mass) + "]");
    }
  }
}

double thm2_bound(double epsilon, double lambda, double rho, double B) {
  require_bound_params(epsilon, lambda, rho, B);
  return k_constant(epsilon, lambda, rho, B);
}

double rh_exponent_bound(double epsilon, double lambda, double rho, double B) {
  require_bound_params(epsilon, lambda, rho, B);
  return p_bound(epsilon, lambda, rho, B);
}

Thm2Report verify_thm2(const WeightedGrid& wg, const Thm2Params& params, const EnumerationMode& mode,
                       unsigned threads, double tolerance) {
  require_valid(wg);
  params.validate(wg.total_mass());
  const double eps = params.epsilon;
  const double lambda = params.lambda;

  const GRResult gr = gr_epsilon(wg, mode, threads);
  if (gr.epsilon > eps + tolerance) {
    throw PreconditionError("input not in GR_mu(epsilon): measured " + std::to_string(gr.epsilon) +
                                " exceeds epsilon = " + std::to_string(eps),
                            gr.witness, gr.epsilon);
  }

  const StepFunction fstar = rearrangement(wg);
  const double cap = 1.0 - lambda / 2.0;
  const double mean_factor = lambda / (lambda - eps);
  const double osc_factor = eps * lambda / (lambda - eps);

  Thm2Report report;
  report.mode = mode;
  report.epsilon_measured = gr.epsilon;
  report.tolerance = tolerance;
  bool first_covering = true;

  for (double t : params.t_values) {
    Thm2Record rec;
    rec.t = t;
    rec.fstar = fstar.evaluate(t);
    rec.fstarstar = fstar.average(t);
    rec.degenerate = rec.fstar == 0.0;

    const CellSet e = level_set_above(wg, rec.fstar);
    const CoveringResult cover = build_covering(wg, e, params.rho, cap);
    rec.covering = {cover.rho_lo, cover.rho_hi, cover.overlap, cover.cubes.size()};

    for (const Cube& q : cover.cubes) {
      const OscStats st = oscillation(wg, q);
      const double m4 = mean_factor * rec.fstar - st.mean;
      const double m5 = osc_factor * rec.fstar - st.osc;
      rec.eq4_margin = rec.eq4_margin ? std::min(*rec.eq4_margin, m4) : m4;
      rec.eq5_margin = rec.eq5_margin ? std::min(*rec.eq5_margin, m5) : m5;
    }
    const double slack = tolerance * rec.fstar;
    rec.margins_hold = (!rec.eq4_margin || *rec.eq4_margin >= -slack) && (!rec.eq5_margin || *rec.eq5_margin >= -slack);

    const double B = static_cast<double>(cover.overlap);
    rec.k_nominal = k_constant(eps, lambda, params.rho, B);
    rec.k_achieved = cover.cubes.empty() ? k_constant(eps, lambda, params.rho, 1.0)
                                         : k_constant(eps, lambda, cover.rho_lo, B);
    const double rhs = rec.k_achieved * rec.fstar;
    rec.holds = rec.fstarstar <= rhs + tolerance * rhs;
    if (!rec.degenerate) report.all_hold = report.all_hold && rec.holds;

    if (!cover.cubes.empty()) {
      auto& agg = report.covering_constants;
      if (first_covering) {
        agg = rec.covering;
        first_covering = false;
      } else {
        agg.rho_lo = std::min(agg.rho_lo, rec.covering.rho_lo);
        agg.rho_hi = std::max(agg.rho_hi, rec.covering.rho_hi);
        agg.overlap = std::max(agg.overlap, rec.covering.overlap);
        agg.cubes = std::max(agg.cubes, rec.covering.cubes);
      }
    }
    report.per_t.push_back(std::move(rec));
  }
  return report;
}

RhOptimum optimize_rh_exponent(double epsilon, double B, double delta) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw DomainError("epsilon must lie in (0, 2)");
  if (!(B >= 1.0)) throw DomainError("overlap constant B must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");

  auto rho_of = [&](double lambda) { return (1.0 - lambda / 2.0) * (1.0 - delta); };
  auto objective = [&](double lambda) { return p_bound(epsilon, lambda, rho_of(lambda), B); };
  auto finish = [&](double lambda, bool fallback) {
    return RhOptimum{lambda, rho_of(lambda), objective(lambda), fallback};
  };

  const double lo = epsilon;
  const double hi = 2.0;
  constexpr int kCoarse = 64;
  std::vector<double> xs(kCoarse), fs(kCoarse);
  for (int i = 0; i < kCoarse; ++i) {
    xs[i] = lo + (hi - lo) * (i + 1) / (kCoarse + 1);
    fs[i] = objective(xs[i]);
  }
  const auto peak = static_cast<int>(std::max_element(fs.begin(), fs.end()) - fs.begin());
  bool unimodal = true;
  for (int i = 1; i < kCoarse; ++i) {
    if (i <= peak && fs[i] < fs[i - 1]) unimodal = false;
    if (i > peak && fs[i] > fs[i - 1]) unimodal = false;
  }

  if (!unimodal) {
    constexpr int kFine = 10000;
    double best_x = xs[peak];
    double best_f = fs[peak];
    for (int i = 1; i < kFine; ++i) {
      const double x = lo + (hi - lo) * i / kFine;
      const double f = objective(x);
      if (f > best_f) {
        best_f = f;
        best_x = x;
      }
    }
    return finish(best_x, true);
  }

  double a = peak == 0 ? lo : xs[peak - 1];
  double b = peak == kCoarse - 1 ? hi : xs[peak + 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > 1e-9) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  return finish((a + b) / 2.0, false);
}

RhConstant rh_constant(const WeightedGrid& wg, double p, const EnumerationMode& mode, unsigned threads) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("reverse Hölder exponent p must exceed 1");
  const CubeFamily family(wg.grid(), mode);
  std::vector<double> powered(wg.grid().cell_count());
  for (std::size_t i = 0; i < powered.size(); ++i) powered[i] = wg.weight(i) * std::pow(wg.value(i), p);
  const PrefixTable power_sums(wg.grid(), powered);
  const double inv_p = 1.0 / p;

  struct Acc {
    MaxCube best;
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
        a.best.offer(std::pow(power_sums.sum(q) / mass, inv_p) / (moment / mass), i, q);
      },
      [](Acc& a, const Acc& later) {
        a.best.merge(later.best);
        a.scanned += later.scanned;
      });

  if (!acc.best.found) throw DomainError("empty measure: f vanishes mu-a.e. on every enumerated cube");
  return RhConstant{p, acc.best.value, acc.best.cube, acc.scanned};
}

}  // namespace grlab
