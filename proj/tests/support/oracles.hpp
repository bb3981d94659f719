#pragma once

// Independent reference implementations used by the tests. Nothing here uses
// prefix tables, the threshold index, CubeFamily or scan_reduce.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "grlab/grid.hpp"

namespace grlab::testing {

// Every cube of a 1D or 2D grid: ascending side, then lexicographic origin.
inline std::vector<Cube> naive_cubes(const Grid& g) {
  std::vector<Cube> out;
  const std::size_t m = g.min_extent();
  for (std::size_t s = 1; s <= m; ++s) {
    if (g.dim() == 1) {
      for (std::size_t i = 0; i + s <= g.extent(0); ++i) out.push_back(Cube{{i}, s});
    } else {
      for (std::size_t i = 0; i + s <= g.extent(0); ++i) {
        for (std::size_t j = 0; j + s <= g.extent(1); ++j) out.push_back(Cube{{i, j}, s});
      }
    }
  }
  return out;
}

inline std::vector<std::size_t> naive_cells(const Grid& g, const Cube& q) {
  std::vector<std::size_t> cells;
  if (g.dim() == 1) {
    for (std::size_t i = 0; i < q.side; ++i) cells.push_back(q.origin[0] + i);
  } else if (g.dim() == 2) {
    for (std::size_t i = 0; i < q.side; ++i)
      for (std::size_t j = 0; j < q.side; ++j) cells.push_back((q.origin[0] + i) * g.extent(1) + q.origin[1] + j);
  } else {
    for (std::size_t i = 0; i < q.side; ++i)
      for (std::size_t j = 0; j < q.side; ++j)
        for (std::size_t k = 0; k < q.side; ++k)
          cells.push_back(((q.origin[0] + i) * g.extent(1) + q.origin[1] + j) * g.extent(2) + q.origin[2] + k);
  }
  return cells;
}

struct NaiveSums {
  double mass = 0.0;
  double moment = 0.0;
};

inline NaiveSums naive_sums(const WeightedGrid& wg, const Cube& q) {
  NaiveSums s;
  for (auto i : naive_cells(wg.grid(), q)) {
    s.mass += wg.weight(i);
    s.moment += wg.weight(i) * wg.value(i);
  }
  return s;
}

struct NaiveBest {
  double value = 0.0;
  Cube cube;
  bool found = false;
};

// max Omega/f_Q with the ratio written as sum w |M v - S| / (M S).
inline NaiveBest naive_gr(const WeightedGrid& wg) {
  NaiveBest best;
  for (const auto& q : naive_cubes(wg.grid())) {
    const auto s = naive_sums(wg, q);
    if (!(s.mass > 0.0)) continue;
    double ratio = 0.0;
    if (s.moment > 0.0) {
      double dev = 0.0;
      for (auto i : naive_cells(wg.grid(), q)) dev += wg.weight(i) * std::abs(s.mass * wg.value(i) - s.moment);
      ratio = dev / (s.mass * s.moment);
    }
    if (!best.found || ratio > best.value) best = {ratio, q, true};
  }
  return best;
}

inline NaiveBest naive_alpha(const WeightedGrid& wg, double beta) {
  NaiveBest best;
  for (const auto& q : naive_cubes(wg.grid())) {
    const auto s = naive_sums(wg, q);
    if (!(s.mass > 0.0) || !(s.moment > 0.0)) continue;
    double above = 0.0;
    for (auto i : naive_cells(wg.grid(), q)) {
      if (s.mass * wg.value(i) > beta * s.moment) above += wg.weight(i);
    }
    const double frac = above / s.mass;
    if (!best.found || frac < best.value) best = {frac, q, true};
  }
  return best;
}

inline NaiveBest naive_rh(const WeightedGrid& wg, double p) {
  NaiveBest best;
  for (const auto& q : naive_cubes(wg.grid())) {
    const auto s = naive_sums(wg, q);
    if (!(s.mass > 0.0) || !(s.moment > 0.0)) continue;
    double pw = 0.0;
    for (auto i : naive_cells(wg.grid(), q)) pw += wg.weight(i) * std::pow(wg.value(i), p);
    const double c = std::pow(pw / s.mass, 1.0 / p) / (s.moment / s.mass);
    if (!best.found || c > best.value) best = {c, q, true};
  }
  return best;
}

// mu{f > s}
inline double naive_distribution(const WeightedGrid& wg, double s) {
  long double m = 0.0L;
  for (std::size_t i = 0; i < wg.grid().cell_count(); ++i) {
    if (wg.value(i) > s) m += wg.weight(i);
  }
  return static_cast<double>(m);
}

// min{ s >= 0 : mu{f > s} <= t } over the candidate levels {0} ∪ values.
inline double naive_fstar(const WeightedGrid& wg, double t) {
  std::vector<double> cand(wg.values().begin(), wg.values().end());
  cand.push_back(0.0);
  std::sort(cand.begin(), cand.end());
  for (double s : cand) {
    if (naive_distribution(wg, s) <= t) return s;
  }
  return cand.back();
}

// Random grid data. Integer mode draws weights in {0..max_int} (at least one
// positive) and values in {0..max_int}; otherwise log-uniform weights spanning
// `weight_ratio` and log-normal values.
struct RandomGridOptions {
  bool integer = false;
  int max_int = 9;
  double weight_ratio = 1e6;
  double zero_value_probability = 0.1;
};

inline WeightedGrid random_grid(std::mt19937_64& rng, std::vector<std::size_t> shape,
                                const RandomGridOptions& opt = {}) {
  Grid g(std::move(shape));
  std::vector<double> w(g.cell_count()), v(g.cell_count());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> ints(0, opt.max_int);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (opt.integer) {
      w[i] = ints(rng);
      v[i] = ints(rng);
    } else {
      w[i] = std::pow(opt.weight_ratio, unit(rng));
      v[i] = unit(rng) < opt.zero_value_probability ? 0.0 : std::exp(normal(rng));
    }
  }
  if (opt.integer && std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) w[0] = 1.0;
  return WeightedGrid(g, std::move(w), std::move(v));
}

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
}

}  // namespace grlab::testing
