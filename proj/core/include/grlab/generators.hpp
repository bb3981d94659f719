#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "grlab/enumeration.hpp"
#include "grlab/grid.hpp"

namespace grlab::gen {

// Cell selector for spikes: a flat row-major index, or the last cell when unset.
using Position = std::optional<std::size_t>;

// f(x) = x_0^{-a}, 0 < a < 1, stored as exact cell averages. 1D only.
struct Power {
  double a = 0.5;
};
// M on one cell, 0 elsewhere.
struct Spike {
  double height = 1.0;
  Position position;
};
// v_hi on cells whose first coordinate lies below `fraction`, v_lo elsewhere.
struct TwoLevel {
  double v_lo = 1.0;
  double v_hi = 1.0;
  double fraction = 0.5;
};
// exp(log_sigma Z), Z standard normal.
struct RandomValues {
  std::uint64_t seed = 0;
  double log_sigma = 1.0;
};
using FunctionKind = std::variant<Power, Spike, TwoLevel, RandomValues>;

// Every cell carries its volume.
struct Uniform {};
// Density x_0^b, b > -1, stored as exact cell masses.
struct PowerWeight {
  double b = 0.0;
};
// Uniform, except one cell whose mass is multiplied by W.
struct SpikeWeight {
  double factor = 1e6;
  Position position;
};
// Cell volume times exp(log_sigma Z).
struct RandomWeight {
  std::uint64_t seed = 0;
  double log_sigma = 1.0;
};
using MeasureKind = std::variant<Uniform, PowerWeight, SpikeWeight, RandomWeight>;

struct GenSpec {
  FunctionKind function = TwoLevel{};
  MeasureKind measure = Uniform{};
  std::vector<std::size_t> shape;

  // Throws ConfigError on an invalid spec.
  void validate() const;
};

// Deterministic construction. Random kinds draw from std::mt19937_64 (fully
// specified by the standard) through Box-Muller on 53-bit uniforms, one normal
// per pair of draws, so grids are reproducible across standard libraries.
WeightedGrid generate(const GenSpec& spec);

double measured_epsilon(const GenSpec& spec, const EnumerationMode& mode, unsigned threads = 1);

}  // namespace grlab::gen
