#include "grlab/covering.hpp"

#include <algorithm>

#include "grlab/errors.hpp"

namespace grlab {

CellSet::CellSet(const WeightedGrid& wg, std::vector<std::uint8_t> membership) : membership_(std::move(membership)) {
  if (membership_.size() != wg.grid().cell_count()) throw ConfigError("cell set size does not match the grid");
  CompensatedSum mass;
  for (std::size_t i = 0; i < membership_.size(); ++i) {
    if (membership_[i]) {
      mass.add(wg.weight(i));
      ++count_;
    }
  }
  mass_ = mass.value();
}

bool CellSet::consistent_with(const WeightedGrid& wg) const {
  return CellSet(wg, membership_).mass() == mass_;
}

CellSet level_set_above(const WeightedGrid& wg, double threshold) {
  std::vector<std::uint8_t> m(wg.grid().cell_count(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = wg.value(i) > threshold ? 1 : 0;
  return CellSet(wg, std::move(m));
}

std::size_t overlap_constant(std::span<const Cube> cubes, const Grid& grid) {
  if (cubes.empty()) return 1;
  std::vector<std::size_t> count(grid.cell_count(), 0);
  for (const auto& q : cubes) {
    grid.require(q);
    for_each_cell(grid, q, [&](std::size_t i) { ++count[i]; });
  }
  return *std::max_element(count.begin(), count.end());
}

CoveringResult build_covering(const WeightedGrid& wg, const CellSet& e, double rho, double rho_cap) {
  const Grid& grid = wg.grid();
  if (!grid.is_square()) throw ConfigError("covering construction requires a grid with equal extents");
  if (!(rho > 0.0 && rho <= rho_cap && rho_cap < 1.0)) throw DomainError("need 0 < rho <= rho_cap < 1");
  if (e.membership().size() != grid.cell_count()) throw ConfigError("cell set size does not match the grid");
  const double total = wg.total_mass();
  if (e.mass() > rho * total * (1.0 + 1e-12)) {
    throw PreconditionError("covering needs mu(E) <= rho mu(Q_0): mu(E) = " + std::to_string(e.mass()) +
                                ", rho mu(Q_0) = " + std::to_string(rho * total),
                            grid.full_cube(), e.mass());
  }

  std::vector<double> e_weights(grid.cell_count());
  for (std::size_t i = 0; i < e_weights.size(); ++i) e_weights[i] = e.contains(i) ? wg.weight(i) : 0.0;
  const PrefixTable e_mass(grid, e_weights);

  const std::size_t n = grid.dim();
  const std::size_t extent = grid.extent(0);
  std::vector<std::size_t> hits(grid.cell_count(), 0);
  CoveringResult result;
  bool first = true;

  for (std::size_t seed = 0; seed < grid.cell_count(); ++seed) {
    if (!e.contains(seed) || !(wg.weight(seed) > 0.0) || hits[seed] > 0) continue;
    const auto c = grid.coords(seed);
    Cube q{std::vector<std::size_t>(n), 0};
    double density = 1.0;
    bool found = false;
    for (std::size_t side = 1; side <= extent; ++side) {
      q.side = side;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t back = (side - 1) / 2;
        const std::size_t lo = c[k] >= back ? c[k] - back : 0;
        q.origin[k] = std::min(lo, extent - side);
      }
      const double mass = wg.cube_mass(q);
      if (!(mass > 0.0)) continue;
      density = e_mass.sum(q) / mass;
      if (density <= rho_cap) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw DomainError("covering: no cube around seed cell " + std::to_string(seed) +
                        " reaches density <= rho_cap (last density " + std::to_string(density) + ")");
    }
    for_each_cell(grid, q, [&](std::size_t i) { ++hits[i]; });
    if (first) {
      result.rho_lo = result.rho_hi = density;
      first = false;
    } else {
      result.rho_lo = std::min(result.rho_lo, density);
      result.rho_hi = std::max(result.rho_hi, density);
    }
    result.cubes.push_back(q);
  }

  result.overlap = result.cubes.empty() ? 1 : *std::max_element(hits.begin(), hits.end());
  result.covered = true;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (e.contains(i) && wg.weight(i) > 0.0 && hits[i] == 0) result.covered = false;
  }
  return result;
}

}  // namespace grlab
