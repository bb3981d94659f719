#include "grlab/rearrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grlab/errors.hpp"

namespace grlab {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> levels) {
  if (breakpoints.size() != levels.size() || breakpoints.empty()) {
    throw ConfigError("step function needs matching, non-empty breakpoints and levels");
  }
  double prev_t = 0.0;
  for (std::size_t j = 0; j < breakpoints.size(); ++j) {
    if (!(breakpoints[j] > prev_t)) throw ConfigError("breakpoints must be positive and strictly increasing");
    if (!(levels[j] >= 0.0)) throw ConfigError("levels must be nonnegative");
    if (j > 0 && levels[j] > levels[j - 1]) throw ConfigError("levels must be non-increasing");
    prev_t = breakpoints[j];
  }
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (!levels_.empty() && levels_.back() == levels[j]) {
      breakpoints_.back() = breakpoints[j];
    } else {
      breakpoints_.push_back(breakpoints[j]);
      levels_.push_back(levels[j]);
    }
  }
  cumulative_.resize(levels_.size());
  CompensatedSum acc;
  double left = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    acc.add((breakpoints_[j] - left) * levels_[j]);
    cumulative_[j] = acc.value();
    left = breakpoints_[j];
  }
}

void StepFunction::check_t(double t) const {
  if (!(t > 0.0 && t <= total_mass())) {
    throw DomainError("t = " + std::to_string(t) + " outside (0, " + std::to_string(total_mass()) + "]");
  }
}

double StepFunction::evaluate(double t) const {
  check_t(t);
  const auto j = static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t) -
                                          breakpoints_.begin());
  return j == levels_.size() ? levels_.back() : levels_[j];
}

double StepFunction::integral(double t) const {
  check_t(t);
  const auto j = static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t) -
                                          breakpoints_.begin());
  if (j == levels_.size()) return cumulative_.back();
  const double left = j == 0 ? 0.0 : breakpoints_[j - 1];
  const double before = j == 0 ? 0.0 : cumulative_[j - 1];
  return before + (t - left) * levels_[j];
}

double StepFunction::average(double t) const { return integral(t) / t; }

double StepFunction::distribution(double s) const {
  // Levels are strictly decreasing: count those above s.
  const auto j = static_cast<std::size_t>(
      std::partition_point(levels_.begin(), levels_.end(), [&](double v) { return v > s; }) - levels_.begin());
  return j == 0 ? 0.0 : breakpoints_[j - 1];
}

StepFunction rearrangement(std::span<const double> weights, std::span<const double> values) {
  std::vector<std::size_t> order;
  order.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) order.push_back(i);
  }
  if (order.empty()) throw DomainError("rearrangement of a zero-mass grid");
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return weights[a] < weights[b];
  });

  std::vector<double> breakpoints;
  std::vector<double> levels;
  CompensatedSum mass;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    mass.add(weights[i]);
    const bool last_of_level = k + 1 == order.size() || values[order[k + 1]] != values[i];
    if (last_of_level) {
      breakpoints.push_back(mass.value());
      levels.push_back(values[i]);
    }
  }
  return StepFunction(std::move(breakpoints), std::move(levels));
}

StepFunction rearrangement(const WeightedGrid& wg) { return rearrangement(wg.weights(), wg.values()); }

std::string to_csv(const StepFunction& sf) {
  std::ostringstream os;
  os.precision(17);
  os << "t,level\n";
  for (std::size_t j = 0; j < sf.levels().size(); ++j) os << sf.breakpoints()[j] << ',' << sf.levels()[j] << '\n';
  return os.str();
}

}  // namespace grlab
