#pragma once

#include <span>
#include <string>
#include <vector>

#include "grlab/grid.hpp"

namespace grlab {

// Right-continuous non-increasing step function on (0, total_mass]: the value
// levels[j] holds on [breakpoints[j-1], breakpoints[j]) with an implicit
// breakpoint 0 in front. Levels are strictly decreasing; the last breakpoint is
// the total mass.
//
// As a rearrangement this is f*(t) = min{ s >= 0 : mu{f > s} <= t } for
// t in (0, total_mass), which agrees with the sup-inf definition away from
// breakpoints; at t = total_mass the last level is returned.
class StepFunction {
 public:
  StepFunction() = default;
  // Merges equal adjacent levels; throws ConfigError unless breakpoints are
  // strictly increasing and positive and levels non-increasing and >= 0.
  StepFunction(std::vector<double> breakpoints, std::vector<double> levels);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& levels() const noexcept { return levels_; }
  double total_mass() const noexcept { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

  // Throw DomainError unless 0 < t <= total_mass.
  double evaluate(double t) const;
  double integral(double t) const;  // integral of the step function over (0, t)
  double average(double t) const;   // integral(t) / t

  // mu{f > s}, read off the breakpoints.
  double distribution(double s) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  void check_t(double t) const;

  std::vector<double> breakpoints_;
  std::vector<double> levels_;
  std::vector<double> cumulative_;  // integral up to each breakpoint
};

// Non-increasing rearrangement of the cell values with respect to the cell
// weights. Cells are ordered by value descending, equal values by weight, so
// permuting cells leaves the result bit-identical; zero-weight cells are
// dropped. Throws DomainError on zero total mass.
StepFunction rearrangement(const WeightedGrid& wg);
StepFunction rearrangement(std::span<const double> weights, std::span<const double> values);

// "t,level" rows, one per breakpoint, with a header line.
std::string to_csv(const StepFunction& sf);

}  // namespace grlab
