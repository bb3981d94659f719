#include "grlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grlab/errors.hpp"

namespace grlab {

std::string Cube::to_string() const {
  std::ostringstream os;
  os << "origin=(";
  for (std::size_t k = 0; k < origin.size(); ++k) {
    if (k) os << ',';
    os << origin[k];
  }
  os << ") side=" << side;
  return os.str();
}

Grid::Grid(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  if (shape_.empty()) throw ConfigError("grid must have dimension >= 1");
  strides_.assign(shape_.size(), 1);
  cells_ = 1;
  for (std::size_t k = shape_.size(); k-- > 0;) {
    if (shape_[k] == 0) throw ConfigError("grid extent must be >= 1 along every axis");
    strides_[k] = cells_;
    cells_ *= shape_[k];
  }
}

std::size_t Grid::min_extent() const noexcept {
  return shape_.empty() ? 0 : *std::min_element(shape_.begin(), shape_.end());
}

bool Grid::is_square() const noexcept {
  return std::adjacent_find(shape_.begin(), shape_.end(), std::not_equal_to<>()) == shape_.end();
}

double Grid::cell_volume() const noexcept {
  double v = 1.0;
  for (auto n : shape_) v /= static_cast<double>(n);
  return v;
}

std::size_t Grid::flat_index(std::span<const std::size_t> coords) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dim(); ++k) idx += coords[k] * strides_[k];
  return idx;
}

std::vector<std::size_t> Grid::coords(std::size_t flat) const {
  std::vector<std::size_t> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    c[k] = flat / strides_[k];
    flat %= strides_[k];
  }
  return c;
}

bool Grid::contains(const Cube& q) const noexcept {
  if (q.origin.size() != dim() || q.side < 1) return false;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (q.side > shape_[k] || q.origin[k] > shape_[k] - q.side) return false;
  }
  return true;
}

void Grid::require(const Cube& q) const {
  if (!contains(q)) throw ConfigError("cube " + q.to_string() + " does not fit the grid");
}

Cube Grid::full_cube() const { return Cube{std::vector<std::size_t>(dim(), 0), min_extent()}; }

PrefixTable::PrefixTable(const Grid& grid, std::span<const double> cell_data) {
  const std::size_t n = grid.dim();
  shape_.resize(n);
  strides_.resize(n);
  std::size_t size = 1;
  for (std::size_t k = n; k-- > 0;) {
    shape_[k] = grid.extent(k) + 1;
    strides_[k] = size;
    size *= shape_[k];
  }
  hi_.assign(size, 0.0);
  lo_.assign(size, 0.0);

  std::vector<std::size_t> c(n);
  for (std::size_t cell = 0; cell < cell_data.size(); ++cell) {
    std::size_t rest = cell;
    std::size_t target = 0;
    for (std::size_t k = 0; k < n; ++k) {
      c[k] = rest / grid.stride(k);
      rest %= grid.stride(k);
      target += (c[k] + 1) * strides_[k];
    }
    hi_[target] = cell_data[cell];
  }

  // One cumulative pass per axis. Row-major order guarantees the predecessor
  // along the axis is already accumulated.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t s = strides_[k];
    for (std::size_t i = 0; i < size; ++i) {
      if ((i / s) % shape_[k] == 0) continue;
      DoubleDouble acc{hi_[i], lo_[i]};
      acc += DoubleDouble{hi_[i - s], lo_[i - s]};
      hi_[i] = acc.hi;
      lo_[i] = acc.lo;
    }
  }
}

double PrefixTable::sum(const Cube& q) const {
  const std::size_t n = shape_.size();
  if (n == 1) {
    const std::size_t a = q.origin[0];
    const std::size_t b = a + q.side;
    DoubleDouble acc{hi_[b], lo_[b]};
    acc -= DoubleDouble{hi_[a], lo_[a]};
    return acc.value();
  }
  DoubleDouble acc;
  const std::size_t corners = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < corners; ++mask) {
    std::size_t idx = 0;
    std::size_t lower = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) {
        idx += (q.origin[k] + q.side) * strides_[k];
      } else {
        idx += q.origin[k] * strides_[k];
        ++lower;
      }
    }
    const DoubleDouble term{hi_[idx], lo_[idx]};
    if (lower % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc.value();
}

double PrefixTable::total() const {
  if (hi_.empty()) return 0.0;
  return hi_.back() + lo_.back();
}

WeightedGrid::WeightedGrid(Grid grid, std::vector<double> weights, std::vector<double> values)
    : grid_(std::move(grid)), weights_(std::move(weights)), values_(std::move(values)) {
  if (weights_.size() != grid_.cell_count()) {
    throw ConfigError("weights: expected " + std::to_string(grid_.cell_count()) + " entries, got " +
                      std::to_string(weights_.size()));
  }
  if (values_.size() != grid_.cell_count()) {
    throw ConfigError("values: expected " + std::to_string(grid_.cell_count()) + " entries, got " +
                      std::to_string(values_.size()));
  }
  std::vector<double> moment(weights_.size());
  for (std::size_t i = 0; i < moment.size(); ++i) moment[i] = weights_[i] * values_[i];
  mass_ = PrefixTable(grid_, weights_);
  moment_ = PrefixTable(grid_, moment);
}

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v;
  }
  return s.empty() ? "OK" : s;
}

ValidationReport validate(const WeightedGrid& wg) {
  ValidationReport report;
  CompensatedSum total;
  for (std::size_t i = 0; i < wg.grid().cell_count(); ++i) {
    const double w = wg.weight(i);
    const double v = wg.value(i);
    if (!std::isfinite(w)) {
      report.violations.push_back("non-finite weight at cell " + std::to_string(i));
    } else if (w < 0.0) {
      report.violations.push_back("negative weight at cell " + std::to_string(i));
    } else {
      total.add(w);
    }
    if (!std::isfinite(v)) {
      report.violations.push_back("non-finite value at cell " + std::to_string(i));
    } else if (v < 0.0) {
      report.violations.push_back("negative value at cell " + std::to_string(i));
    }
  }
  if (!(total.value() > 0.0)) report.violations.push_back("zero total mass");
  return report;
}

void require_valid(const WeightedGrid& wg) {
  const auto report = validate(wg);
  if (!report.ok()) throw ValidationError("invalid weighted grid: " + report.summary());
}

}  // namespace grlab
