#include "grlab/threshold_index.hpp"

#include <algorithm>
#include <numeric>

namespace grlab {

ThresholdIndex::ThresholdIndex(const WeightedGrid& wg) : wg_(&wg) {
  if (wg.grid().dim() != 1) return;
  tree_ = true;
  const std::size_t n = wg.grid().cell_count();
  leaves_ = n;

  // Iterative segment tree: leaves at [n, 2n), node i has children 2i, 2i+1.
  std::vector<std::vector<std::size_t>> members(2 * n);
  for (std::size_t i = 0; i < n; ++i) members[n + i] = {i};
  auto by_value = [&](std::size_t a, std::size_t b) {
    const double va = wg.value(a);
    const double vb = wg.value(b);
    return va < vb || (va == vb && a < b);
  };
  for (std::size_t i = n; i-- > 1;) {
    const auto& l = members[2 * i];
    const auto& r = members[2 * i + 1];
    auto& m = members[i];
    m.resize(l.size() + r.size());
    std::merge(l.begin(), l.end(), r.begin(), r.end(), m.begin(), by_value);
  }

  offset_.assign(2 * n + 1, 0);
  for (std::size_t i = 1; i < 2 * n; ++i) offset_[i + 1] = offset_[i] + members[i].size();
  values_.resize(offset_.back());
  suffix_mass_.assign(offset_.back() + 2 * n, 0.0);
  suffix_moment_.assign(offset_.back() + 2 * n, 0.0);
  for (std::size_t i = 1; i < 2 * n; ++i) {
    const auto& m = members[i];
    const std::size_t base = offset_[i];
    const std::size_t sbase = offset_[i] + i;
    CompensatedSum mass;
    CompensatedSum moment;
    for (std::size_t j = m.size(); j-- > 0;) {
      values_[base + j] = wg.value(m[j]);
      mass.add(wg.weight(m[j]));
      moment.add(wg.weight(m[j]) * wg.value(m[j]));
      suffix_mass_[sbase + j] = mass.value();
      suffix_moment_[sbase + j] = moment.value();
    }
    std::vector<std::size_t>().swap(members[i]);
  }
}

void ThresholdIndex::add_node(std::size_t node, double scale, double threshold, CompensatedSum& mass,
                              CompensatedSum& moment) const {
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>(offset_[node]);
  const auto last = values_.begin() + static_cast<std::ptrdiff_t>(offset_[node + 1]);
  const auto pos = std::partition_point(first, last, [&](double v) { return !(scale * v > threshold); });
  const std::size_t j = static_cast<std::size_t>(pos - first);
  const std::size_t s = offset_[node] + node + j;
  mass.add(suffix_mass_[s]);
  moment.add(suffix_moment_[s]);
}

AboveSums ThresholdIndex::above(const Cube& q, double scale, double threshold) const {
  CompensatedSum mass;
  CompensatedSum moment;
  if (tree_) {
    std::size_t l = q.origin[0] + leaves_;
    std::size_t r = q.origin[0] + q.side + leaves_;
    while (l < r) {
      if (l & 1) add_node(l++, scale, threshold, mass, moment);
      if (r & 1) add_node(--r, scale, threshold, mass, moment);
      l >>= 1;
      r >>= 1;
    }
  } else {
    const auto& wg = *wg_;
    for_each_cell(wg.grid(), q, [&](std::size_t i) {
      const double v = wg.value(i);
      if (scale * v > threshold) {
        mass.add(wg.weight(i));
        moment.add(wg.weight(i) * v);
      }
    });
  }
  return {mass.value(), moment.value()};
}

}  // namespace grlab
